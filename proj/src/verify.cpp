#include "z2plaq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "z2plaq/flux_solver.hpp"
#include "z2plaq/oracle.hpp"
#include "z2plaq/pauli.hpp"
#include "z2plaq/projective.hpp"
#include "z2plaq/psg.hpp"

namespace z2plaq {

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

RunCheck& RunReport::add(const std::string& name, double residual, double tolerance) {
    checks.push_back({name, residual, tolerance, residual <= tolerance});
    return checks.back();
}

RunReport verify_ed(const LatticeSpec& lat, double g, double tol) {
    RunReport rep;

    const SpectrumTable table = spectrum(lat, g);
    const DenseOperator h = build_hamiltonian(lat, g);
    const std::vector<double> ed = full_spectrum(h);

    std::vector<double> combinatorial;
    combinatorial.reserve(ed.size());
    for (const auto& e : table.entries)
        combinatorial.insert(combinatorial.end(), e.multiplicity,
                             g * static_cast<double>(e.flux_sum));
    std::sort(combinatorial.begin(), combinatorial.end());

    double worst = 0;
    if (combinatorial.size() != ed.size()) {
        worst = std::numeric_limits<double>::infinity();
    } else {
        for (size_t i = 0; i < ed.size(); ++i)
            worst = std::max(worst, std::abs(combinatorial[i] - ed[i]));
    }
    rep.add("spectrum_multiset_equal", worst, tol);

    const uint64_t expected = uint64_t(1) << lat.n_sites();
    rep.add("state_count_2^Ns",
            std::abs(static_cast<double>(table.total_states()) - static_cast<double>(expected)),
            0.0);

    const GroundInfo gi = ground_info(lat, g);
    rep.add("ground_energy", std::abs(gi.e0 - ed.front()), tol);
    uint64_t ed_deg = 0;
    for (double v : ed)
        if (v <= ed.front() + tol) ++ed_deg;
    rep.add("ground_degeneracy",
            std::abs(static_cast<double>(gi.degeneracy) - static_cast<double>(ed_deg)), 0.0);

    if (g != 0) {
        double ed_gap = 0;
        for (double v : ed)
            if (v > ed.front() + tol) {
                ed_gap = v - ed.front();
                break;
            }
        rep.add("spectral_gap", std::abs(spectral_gap(lat, g) - ed_gap), tol);
    }
    return rep;
}

RunReport verify_projective(const LatticeSpec& lat, double g) {
    if (g == 0) throw std::invalid_argument("projective verification needs g != 0");
    RunReport rep;
    const double tol = 1e-9;

    const GroundInfo gi = ground_info(lat, g);
    const LinkField base = link_field_for_flux(lat, gi.witness);
    const int64_t k = gi.witness.flux_sum();

    const DenseOperator h = build_hamiltonian(lat, g);
    const auto space = ground_space(h, tol);

    // the four Wilson classes of the ground flux sector
    std::vector<LinkField> classes{base, flip_wilson_x(base), flip_wilson_y(base),
                                   flip_wilson_y(flip_wilson_x(base))};
    std::vector<SpinState> rays;
    double worst_odd_norm = 0;
    bool used_dense = false;
    for (const LinkField& lf : classes) {
        const FockState chain = joint_eigenstate(lf);
        if (fermion_parity(chain) < 0) {
            worst_odd_norm = std::max(worst_odd_norm, project_physical(chain).norm());
            continue;
        }
        SpinState phi(lat.n_sites());
        if (!used_dense) {
            // dense-diagonalization path for the first even class; the chain
            // construction must agree with it
            const MeanFieldGround mf = mean_field_ground_state(lat, lf);
            rep.add("mean_field_gap", mf.excitation_gap > tol ? 0.0 : 1.0, 0.0);
            rep.add("dense_matches_chain", 1.0 - std::abs(mf.state.inner(chain)), tol);
            phi = gauge_project(mf.state);
            used_dense = true;
        } else {
            phi = gauge_project(chain);
        }
        rep.add("projected_in_ground_space", 1.0 - std::sqrt(overlap_with_space(space, phi)),
                tol);
        // H phi = g (sum F) phi
        SpinState hphi(lat.n_sites());
        for (const auto& [ix, iy] : lat.plaquette_bases()) {
            const SpinState term = apply(plaquette_operator(lat, ix, iy), phi);
            for (size_t i = 0; i < hphi.amp.size(); ++i) hphi.amp[i] += g * term.amp[i];
        }
        double resid = 0;
        const double energy = g * static_cast<double>(k);
        for (size_t i = 0; i < hphi.amp.size(); ++i)
            resid += std::norm(hphi.amp[i] - energy * phi.amp[i]);
        rep.add("eigen_residual", std::sqrt(resid), tol);
        rays.push_back(phi);
    }

    rep.add("odd_classes_project_to_zero", worst_odd_norm, 1e-12);

    // even classes span the sector: one orthogonal ray per physical state
    const int m = find_relations(lat).independent_count();
    const uint64_t sector_states = uint64_t(1) << (lat.n_sites() - m);
    double worst_overlap = 0;
    for (size_t i = 0; i < rays.size(); ++i)
        for (size_t j = i + 1; j < rays.size(); ++j)
            worst_overlap = std::max(worst_overlap, std::abs(rays[i].inner(rays[j])));
    rep.add("sector_rays_orthogonal", worst_overlap, tol);
    rep.add("sector_ray_count",
            std::abs(static_cast<double>(rays.size()) - static_cast<double>(sector_states)),
            0.0);
    return rep;
}

RunReport verify_psg(int lx, int ly) {
    RunReport rep;
    const LatticeSpec lat(lx, ly, Boundary::torus);

    const Ansatz neg = ansatz_for_ground(GSign::negative, lat);
    const Ansatz pos = ansatz_for_ground(GSign::positive, lat);

    rep.add("ansatz[g<0] classifies Z2A", classify_z2(neg) == Z2Class::Z2A ? 0.0 : 1.0, 0.0);
    rep.add("ansatz[g>0] classifies Z2B", classify_z2(pos) == Z2Class::Z2B ? 0.0 : 1.0, 0.0);

    auto igg_is_z2 = [](const Ansatz& a) {
        const auto igg = compute_igg(a);
        if (igg.size() != 2) return false;
        return (igg[0].name == "+1" && igg[1].name == "-1") ||
               (igg[0].name == "-1" && igg[1].name == "+1");
    };
    rep.add("IGG[g<0] = {+1,-1}", igg_is_z2(neg) ? 0.0 : 1.0, 0.0);
    rep.add("IGG[g>0] = {+1,-1}", igg_is_z2(pos) ? 0.0 : 1.0, 0.0);

    const PsgTransform tr{Symmetry::time_reversal, SU2Gauge::uniform(lat, Mat2::identity())};
    rep.add("time reversal fixes ansatz[g<0]", is_invariant(neg, tr) ? 0.0 : 1.0, 0.0);
    rep.add("time reversal fixes ansatz[g>0]", is_invariant(pos, tr) ? 0.0 : 1.0, 0.0);

    // link-field correspondence: uniform field -> Z2A, staggered all-minus
    // field -> Z2B (exact entrywise)
    rep.add("uniform link field converts to Z2A ansatz",
            ansatz_from_link_field(LinkField::uniform(lat)).max_abs_diff(neg), 0.0);
    const LinkField lf_minus = link_field_for_flux(lat, FluxConfig::all_minus(lat));
    rep.add("all-minus link field converts to Z2B ansatz",
            ansatz_from_link_field(lf_minus).max_abs_diff(pos), 0.0);

    const auto pxy_a = find_pxy_gauge(neg);
    const auto pxy_b = find_pxy_gauge(pos);
    rep.add("P_xy gauge for Z2A: " + pxy_a.value_or("none found in searched subgroup"),
            pxy_a ? 0.0 : 1.0, 0.0);
    rep.add("P_xy gauge for Z2B: " + pxy_b.value_or("none found in searched subgroup"),
            pxy_b ? 0.0 : 1.0, 0.0);
    return rep;
}

}  // namespace z2plaq
