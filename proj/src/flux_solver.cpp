#include "z2plaq/flux_solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "z2plaq/pauli.hpp"

namespace z2plaq {

namespace {

constexpr int kMaxEnumerationBits = 28;

using Words = std::vector<uint64_t>;

Words make_words(int nbits) { return Words((nbits + 63) / 64, 0); }

void set_bit(Words& w, int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
bool get_bit(const Words& w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }
void xor_into(Words& a, const Words& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
bool is_zero(const Words& w) {
    for (uint64_t v : w)
        if (v) return false;
    return true;
}
int lowest_bit(const Words& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
}
int popcount(const Words& w) {
    int c = 0;
    for (uint64_t v : w) c += std::popcount(v);
    return c;
}
int popcount_and(const Words& a, const Words& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

}  // namespace

FluxConfig FluxConfig::all_plus(const LatticeSpec& lat) {
    return {std::vector<int8_t>(lat.n_plaquettes(), +1)};
}

FluxConfig FluxConfig::all_minus(const LatticeSpec& lat) {
    return {std::vector<int8_t>(lat.n_plaquettes(), -1)};
}

int64_t FluxConfig::flux_sum() const {
    int64_t k = 0;
    for (int8_t v : f) k += v;
    return k;
}

int Relation::cardinality() const {
    int c = 0;
    for (uint64_t w : plaquettes) c += std::popcount(w);
    return c;
}

bool RelationSet::admits(const FluxConfig& f) const {
    for (const Relation& r : basis) {
        int prod = 1;
        for (int p = 0; p < n_plaquettes; ++p)
            if (r.contains(p)) prod *= f.f[p];
        if (prod != r.sign) return false;
    }
    return true;
}

RelationSet find_relations(const LatticeSpec& lat) {
    const int np = lat.n_plaquettes();
    const int ns = lat.n_sites();
    const auto& bases = lat.plaquette_bases();

    // Symplectic (x|z) row per plaquette; eliminate while tracking which
    // plaquettes were combined. Rows that cancel completely are relations.
    std::vector<Words> pivot_row;   // reduced rows with a pivot
    std::vector<Words> pivot_comb;  // their plaquette combinations
    std::vector<Words> null_combs;
    for (int p = 0; p < np; ++p) {
        const PauliString op = plaquette_operator(lat, bases[p][0], bases[p][1]);
        Words row = make_words(2 * ns);
        for (int s = 0; s < ns; ++s) {
            if (op.x_bit(s)) set_bit(row, s);
            if (op.z_bit(s)) set_bit(row, ns + s);
        }
        Words comb = make_words(np);
        set_bit(comb, p);
        for (size_t r = 0; r < pivot_row.size(); ++r) {
            const int lead = lowest_bit(pivot_row[r]);
            if (get_bit(row, lead)) {
                xor_into(row, pivot_row[r]);
                xor_into(comb, pivot_comb[r]);
            }
        }
        if (is_zero(row)) {
            null_combs.push_back(std::move(comb));
        } else {
            pivot_row.push_back(std::move(row));
            pivot_comb.push_back(std::move(comb));
        }
    }

    // Canonicalize to the unique RREF basis over plaquette indices
    // (pivot = lowest plaquette index, fully reduced, sorted).
    std::vector<Words> basis;
    for (Words v : null_combs) {
        for (const Words& b : basis) {
            if (get_bit(v, lowest_bit(b))) xor_into(v, b);
        }
        if (!is_zero(v)) basis.push_back(std::move(v));
    }
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = 0; b < basis.size(); ++b)
            if (a != b && get_bit(basis[a], lowest_bit(basis[b]))) xor_into(basis[a], basis[b]);
    std::sort(basis.begin(), basis.end(),
              [](const Words& a, const Words& b) { return lowest_bit(a) < lowest_bit(b); });

    RelationSet out;
    out.n_plaquettes = np;
    for (const Words& comb : basis) {
        PauliString prod(ns);
        for (int p = 0; p < np; ++p)
            if (get_bit(comb, p)) prod = prod * plaquette_operator(lat, bases[p][0], bases[p][1]);
        if (!prod.is_identity_bits() || prod.phase_exp() % 2 != 0)
            throw std::logic_error("relation product is not +-identity");
        out.basis.push_back({comb, prod.phase_exp() == 0 ? +1 : -1});
    }
    return out;
}

namespace {

// Gray-code walk over the 2^m free-plaquette assignments. Dependent fluxes
// (one pivot per relation) follow from the RREF structure. The visitor sees
// every allowed configuration exactly once as (flux_sum, minus_mask).
template <typename Visitor>
void enumerate_flux_configs(const LatticeSpec& lat, const RelationSet& rels, Visitor&& visit) {
    const int np = rels.n_plaquettes;
    const int m = rels.independent_count();
    if (m > kMaxEnumerationBits)
        throw std::domain_error("enumeration bound exceeded: " + std::to_string(m) +
                                " independent plaquettes (max " +
                                std::to_string(kMaxEnumerationBits) + ")");

    std::vector<int> free_slots;
    {
        std::vector<bool> is_pivot(np, false);
        for (const Relation& r : rels.basis) is_pivot[lowest_bit(r.plaquettes)] = true;
        for (int p = 0; p < np; ++p)
            if (!is_pivot[p]) free_slots.push_back(p);
    }

    // Start: all free fluxes +1; pivot p of a relation with sign -1 starts at -1.
    Words minus = make_words(np);
    for (const Relation& r : rels.basis)
        if (r.sign < 0) set_bit(minus, lowest_bit(r.plaquettes));

    // Toggling free slot j flips j itself plus every pivot whose relation
    // involves j.
    std::vector<Words> toggle(free_slots.size(), make_words(np));
    for (size_t j = 0; j < free_slots.size(); ++j) {
        set_bit(toggle[j], free_slots[j]);
        for (const Relation& r : rels.basis)
            if (r.contains(free_slots[j])) set_bit(toggle[j], lowest_bit(r.plaquettes));
    }

    int64_t k = np - 2 * popcount(minus);
    visit(k, minus);
    for (uint64_t step = 1; step < (uint64_t(1) << m); ++step) {
        const int j = std::countr_zero(step);  // Gray code: bit that flips
        // each toggled minus goes to +1 (k += 2), each toggled plus to -1
        const int flipped = popcount(toggle[j]);
        const int was_minus = popcount_and(minus, toggle[j]);
        k += 2 * (2 * was_minus - flipped);
        xor_into(minus, toggle[j]);
        visit(k, minus);
    }
}

FluxConfig flux_from_minus_mask(const LatticeSpec& lat, const Words& minus) {
    FluxConfig f = FluxConfig::all_plus(lat);
    for (int p = 0; p < lat.n_plaquettes(); ++p)
        if (get_bit(minus, p)) f.f[p] = -1;
    return f;
}

}  // namespace

SpectrumTable spectrum(const LatticeSpec& lat, double g) {
    const RelationSet rels = find_relations(lat);
    const int m = rels.independent_count();
    const uint64_t mult = uint64_t(1) << (lat.n_sites() - m);

    std::map<int64_t, uint64_t> buckets;
    enumerate_flux_configs(lat, rels, [&](int64_t k, const Words&) { buckets[k] += mult; });

    SpectrumTable out;
    out.g = g;
    for (const auto& [k, count] : buckets) out.entries.push_back({k, count});
    if (g < 0) std::reverse(out.entries.begin(), out.entries.end());
    if (out.total_states() != uint64_t(1) << lat.n_sites())
        throw std::logic_error("state count mismatch");
    return out;
}

uint64_t SpectrumTable::total_states() const {
    uint64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

GroundInfo ground_info(const LatticeSpec& lat, double g) {
    const RelationSet rels = find_relations(lat);
    const int m = rels.independent_count();
    const uint64_t mult = uint64_t(1) << (lat.n_sites() - m);

    if (g == 0) {
        // transition point: every physical state at E = 0; witness is the
        // base configuration (free fluxes +1, pivots fixed by relation signs)
        Words minus = make_words(rels.n_plaquettes);
        for (const Relation& r : rels.basis)
            if (r.sign < 0) set_bit(minus, lowest_bit(r.plaquettes));
        return {0.0, uint64_t(1) << lat.n_sites(), flux_from_minus_mask(lat, minus)};
    }

    bool have = false;
    int64_t best_k = 0;
    uint64_t count = 0;
    Words best_minus;
    enumerate_flux_configs(lat, rels, [&](int64_t k, const Words& minus) {
        if (!have || g * double(k) < g * double(best_k) - 1e-12) {
            have = true;
            best_k = k;
            count = mult;
            best_minus = minus;
        } else if (k == best_k) {
            count += mult;
        }
    });
    return {g * static_cast<double>(best_k), count, flux_from_minus_mask(lat, best_minus)};
}

double spectral_gap(const LatticeSpec& lat, double g) {
    if (g == 0) throw std::domain_error("spectral gap undefined at g = 0");
    const SpectrumTable table = spectrum(lat, g);
    if (table.entries.size() < 2) throw std::domain_error("spectrum has a single level");
    return table.energy(1) - table.energy(0);
}

}  // namespace z2plaq
