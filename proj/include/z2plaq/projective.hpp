#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "z2plaq/flux_solver.hpp"
#include "z2plaq/lattice.hpp"
#include "z2plaq/pauli.hpp"

namespace z2plaq {

// s_ij = sign * i on each canonical (+x / +y) link; reversed links follow
// from antisymmetry s_ji = -s_ij. Indexed like LatticeSpec::links().
struct LinkField {
    LatticeSpec lat;
    std::vector<int8_t> sign;  // +1 / -1

    static LinkField uniform(const LatticeSpec& lat);  // s = i everywhere
    std::complex<double> value(int link_slot) const { return {0.0, double(sign[link_slot])}; }
};

// Oriented product of the four link values around each plaquette.
FluxConfig flux_of(const LinkField& lf);

// A link field reproducing the given flux configuration. All-plus maps to
// the uniform field; all-minus to the staggered field (-1)^{iy} on x-links
// when that closes consistently; anything else is solved over GF(2) on the
// link-plaquette incidence system. Throws for infeasible configurations.
LinkField link_field_for_flux(const LatticeSpec& lat, const FluxConfig& f);

// Z2 gauge action s_ij -> G(i) s_ij G(j); fluxes are invariant.
LinkField gauge_transform(const LinkField& lf, const std::vector<int8_t>& site_signs);

// Gauge-invariant +-1 products along the two non-contractible torus cycles.
std::pair<int, int> wilson_loops(const LinkField& lf);

// Flip a full non-contractible line of parallel links: toggles one Wilson
// loop and no flux. Used to walk the topological classes of a flux sector.
LinkField flip_wilson_x(const LinkField& lf);  // x-links in column ix = 0
LinkField flip_wilson_y(const LinkField& lf);  // y-links in row iy = 0

// State over the occupation basis of the 2 N_s fermion modes (dimension
// 4^{N_s}). Mode order is site-major with the two site modes adjacent:
// site i owns modes 2i and 2i+1.
struct FockState {
    int n_sites = 0;
    std::vector<std::complex<double>> amp;

    explicit FockState(int n_sites)
        : n_sites(n_sites), amp(uint64_t(1) << (2 * n_sites)) {}
    double norm() const;
    void normalize();
    // deterministic global phase: first nonzero amplitude positive real
    void fix_phase();
    std::complex<double> inner(const FockState& o) const;
};

// Applies the canonical link operator (a product of two Majorana modes) to a
// state. The reversed-direction operator is the same operator.
FockState apply_link_operator(const LinkField& lf, int link_slot, const FockState& st);
FockState apply_link_operator(const LatticeSpec& lat, LatticeSpec::Link link, const FockState& st);

struct MeanFieldGround {
    FockState state;
    double energy;
    double excitation_gap;
};

// Ground state of H_mean = sum_links (s_ij U_ij + h.c.) by dense
// diagonalization of the Fock-space matrix (real symmetric in this mode
// convention). Torus only: open edges leave unpaired Majorana zero modes.
MeanFieldGround mean_field_ground_state(const LatticeSpec& lat, const LinkField& lf);

// The same state computed exactly as the unique joint eigenstate of the
// commuting link operators (eigenvalue s_ij each), via a projector chain.
// Independent of the dense eigensolver; used where exhaustive sweeps make
// per-field diagonalization impractical.
FockState joint_eigenstate(const LinkField& lf);

// (-1)^{N_f} of a state supported on a single total-parity sector.
int fermion_parity(const FockState& st);

// Sum over all 2^{N_s} Z2 gauge transforms prod_i G_i^{N_i}; equivalently the
// projector onto locally even fermion occupations, with |00> -> spin down and
// |11> -> spin up per site. Unnormalized; zero for odd-parity input.
SpinState project_physical(const FockState& st);

// Normalized projection; throws if the state projects to zero.
SpinState gauge_project(const FockState& st);

// Diagonal gauge operator prod_i G_i^{N_i} on the Fock space.
FockState apply_gauge(const FockState& st, const std::vector<int8_t>& site_signs);

}  // namespace z2plaq
