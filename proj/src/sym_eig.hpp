#pragma once

// Thin wrappers around LAPACK's real-symmetric eigensolvers. Row-major
// dense storage throughout (symmetric, so the layout only matters for the
// returned vectors).

#include <cstdint>
#include <vector>

namespace z2plaq::detail {

// All eigenvalues, ascending. Destroys nothing (copies internally).
std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n);

struct LowestPairs {
    std::vector<double> values;   // ascending, size k
    std::vector<double> vectors;  // k columns, column j at [j*n .. j*n+n)
};

// Lowest k eigenpairs of a symmetric matrix.
LowestPairs sym_lowest_eigenpairs(const std::vector<double>& a, int n, int k);

// Full decomposition (values ascending + all eigenvectors, column j at
// [j*n .. j*n+n)). Only call at small dimensions.
LowestPairs sym_full_eigenpairs(const std::vector<double>& a, int n);

}  // namespace z2plaq::detail
