#pragma once

#include <cstdint>
#include <vector>

#include "z2plaq/lattice.hpp"

namespace z2plaq {

// Z2 flux values, one per existing plaquette in plaquette_bases() order.
struct FluxConfig {
    std::vector<int8_t> f;  // +1 / -1

    static FluxConfig all_plus(const LatticeSpec& lat);
    static FluxConfig all_minus(const LatticeSpec& lat);
    int64_t flux_sum() const;
};

// A subset of plaquettes whose operator product is sign * identity.
struct Relation {
    std::vector<uint64_t> plaquettes;  // bitmask over plaquette slots
    int sign;                          // +1 / -1, computed phase-exactly

    bool contains(int slot) const { return (plaquettes[slot >> 6] >> (slot & 63)) & 1; }
    int cardinality() const;
};

struct RelationSet {
    int n_plaquettes = 0;
    std::vector<Relation> basis;  // canonical GF(2) RREF basis, pivots ascending

    // m: number of GF(2)-independent plaquette strings.
    int independent_count() const { return n_plaquettes - static_cast<int>(basis.size()); }
    bool admits(const FluxConfig& f) const;
};

// GF(2) null space of the plaquette symplectic matrix, each basis relation's
// sign evaluated via exact Pauli multiplication.
RelationSet find_relations(const LatticeSpec& lat);

struct SpectrumEntry {
    int64_t flux_sum;       // k; energy = g * k
    uint64_t multiplicity;
};

struct SpectrumTable {
    double g = 0;
    std::vector<SpectrumEntry> entries;  // sorted ascending by energy

    uint64_t total_states() const;
    double energy(size_t idx) const { return g * static_cast<double>(entries[idx].flux_sum); }
};

// Enumerates the 2^m allowed flux assignments (m independent generators),
// multiplicity 2^{N_s - m} each. Throws if m exceeds the enumeration bound.
SpectrumTable spectrum(const LatticeSpec& lat, double g);

struct GroundInfo {
    double e0;
    uint64_t degeneracy;
    FluxConfig witness;
};

// Minimal bucket of the spectrum plus a witness configuration reaching it.
// g = 0 is the transition point: E0 = 0 with degeneracy 2^{N_s}.
GroundInfo ground_info(const LatticeSpec& lat, double g);

// E1 - E0. Undefined (throws) at g = 0.
double spectral_gap(const LatticeSpec& lat, double g);

}  // namespace z2plaq
