#include "z2plaq/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sym_eig.hpp"

namespace z2plaq {

double DenseOperator::max_asymmetry() const {
    double worst = 0;
    for (uint64_t r = 0; r < dim; ++r)
        for (uint64_t c = r + 1; c < dim; ++c)
            worst = std::max(worst, std::abs(at(r, c) - at(c, r)));
    return worst;
}

DenseOperator build_hamiltonian(const LatticeSpec& lat, double g) {
    const int ns = lat.n_sites();
    if (ns > 14) throw std::domain_error("dense oracle limited to 14 sites");

    DenseOperator h;
    h.n_sites = ns;
    h.dim = uint64_t(1) << ns;
    h.a.assign(h.dim * h.dim, 0.0);
    for (const auto& [ix, iy] : lat.plaquette_bases()) {
        const PauliString op = plaquette_operator(lat, ix, iy);
        for (uint64_t c = 0; c < h.dim; ++c) {
            const auto [r, phase] = op.apply(c);
            if (phase.imag() != 0.0) throw std::logic_error("plaquette matrix not real");
            h.at(r, c) += g * phase.real();
        }
    }
    return h;
}

std::vector<double> full_spectrum(const DenseOperator& h) {
    if (h.max_asymmetry() > 1e-12) throw std::invalid_argument("matrix not symmetric");
    return detail::sym_eigenvalues(h.a, static_cast<int>(h.dim));
}

std::vector<std::vector<double>> ground_space(const DenseOperator& h, double tol) {
    if (h.max_asymmetry() > 1e-12) throw std::invalid_argument("matrix not symmetric");
    const int n = static_cast<int>(h.dim);
    const auto eig = detail::sym_full_eigenpairs(h.a, n);
    std::vector<std::vector<double>> basis;
    for (int j = 0; j < n && eig.values[j] <= eig.values[0] + tol; ++j)
        basis.emplace_back(eig.vectors.begin() + static_cast<size_t>(j) * n,
                           eig.vectors.begin() + static_cast<size_t>(j + 1) * n);
    return basis;
}

double overlap_with_space(const std::vector<std::vector<double>>& basis, const SpinState& st) {
    double total = 0;
    for (const auto& v : basis) {
        std::complex<double> dot = 0;
        for (size_t i = 0; i < v.size(); ++i) dot += v[i] * st.amp[i];
        total += std::norm(dot);
    }
    return total;
}

}  // namespace z2plaq
