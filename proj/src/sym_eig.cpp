#include "sym_eig.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace z2plaq::detail {

namespace {

void check_info(lapack_int info, const char* routine) {
    if (info != 0)
        throw std::runtime_error(std::string(routine) + " failed with info " +
                                 std::to_string(info));
}

}  // namespace

std::vector<double> sym_eigenvalues(const std::vector<double>& a, int n) {
    std::vector<double> work = a;
    std::vector<double> w(n);
    check_info(LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', n, work.data(), n, w.data()), "dsyev");
    return w;
}

LowestPairs sym_lowest_eigenpairs(const std::vector<double>& a, int n, int k) {
    std::vector<double> work = a;
    LowestPairs out;
    out.values.resize(k);
    out.vectors.resize(static_cast<size_t>(k) * n);
    std::vector<lapack_int> isuppz(2 * k);
    lapack_int found = 0;
    // dsyevr returns vectors as the leading k columns; with row-major layout
    // entry (i, j) sits at i*k + j, so transpose into column blocks below.
    std::vector<double> z(static_cast<size_t>(n) * k);
    check_info(LAPACKE_dsyevr(LAPACK_ROW_MAJOR, 'V', 'I', 'U', n, work.data(), n, 0, 0, 1, k,
                              0.0, &found, out.values.data(), z.data(), k, isuppz.data()),
               "dsyevr");
    if (found != k) throw std::runtime_error("dsyevr returned fewer eigenpairs than requested");
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<size_t>(j) * n + i] = z[static_cast<size_t>(i) * k + j];
    return out;
}

LowestPairs sym_full_eigenpairs(const std::vector<double>& a, int n) {
    std::vector<double> work = a;
    LowestPairs out;
    out.values.resize(n);
    check_info(LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'V', 'U', n, work.data(), n, out.values.data()),
               "dsyev");
    // dsyev leaves eigenvectors in the matrix; row-major (i, j) = i*n + j is
    // component i of eigenvector j.
    out.vectors.resize(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<size_t>(j) * n + i] = work[static_cast<size_t>(i) * n + j];
    return out;
}

}  // namespace z2plaq::detail
