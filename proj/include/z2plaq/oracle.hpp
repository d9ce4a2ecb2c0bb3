#pragma once

#include <cstdint>
#include <vector>

#include "z2plaq/lattice.hpp"
#include "z2plaq/pauli.hpp"

namespace z2plaq {

// Dense real symmetric operator on the 2^{N_s} spin space. Entries of the
// plaquette Hamiltonian are exactly real: every plaquette string carries two
// Y factors.
struct DenseOperator {
    int n_sites = 0;
    uint64_t dim = 0;
    std::vector<double> a;  // row-major

    double& at(uint64_t r, uint64_t c) { return a[r * dim + c]; }
    double at(uint64_t r, uint64_t c) const { return a[r * dim + c]; }
    double max_asymmetry() const;
};

// H = g * sum_p matrix(F_p). Brute-force scale only: N_s <= 14.
DenseOperator build_hamiltonian(const LatticeSpec& lat, double g);

// All eigenvalues with multiplicity, ascending. Rejects non-symmetric input.
std::vector<double> full_spectrum(const DenseOperator& h);

// Orthonormal basis of the eigenspace of the smallest eigenvalue; eigenvalues
// within tol of the minimum are included.
std::vector<std::vector<double>> ground_space(const DenseOperator& h, double tol);

// Squared-norm of the projection of a state onto the span of an orthonormal
// basis (used to test membership in an eigenspace).
double overlap_with_space(const std::vector<std::vector<double>>& basis, const SpinState& st);

}  // namespace z2plaq
