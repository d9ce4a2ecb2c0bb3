#include "z2plaq.h"

#include <cmath>
#include <cstring>
#include <string>

#include "z2plaq/flux_solver.hpp"
#include "z2plaq/lattice.hpp"
#include "z2plaq/verify.hpp"

using namespace z2plaq;

struct z2q_lattice {
    LatticeSpec lat;
};

struct z2q_spectrum {
    SpectrumTable table;
};

struct z2q_report {
    RunReport rep;
};

namespace {

thread_local std::string g_last_error;

z2q_status fail(z2q_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
z2q_status guarded(Fn&& fn) {
    try {
        fn();
        return Z2Q_OK;
    } catch (const std::domain_error& e) {
        return fail(Z2Q_TOO_LARGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(Z2Q_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(Z2Q_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(Z2Q_INTERNAL, e.what());
    }
}

Boundary to_boundary(z2q_boundary bc) {
    switch (bc) {
        case Z2Q_TORUS: return Boundary::torus;
        case Z2Q_CYLINDER_X: return Boundary::cylinder_x;
        case Z2Q_CYLINDER_Y: return Boundary::cylinder_y;
        case Z2Q_OPEN: return Boundary::open;
    }
    throw std::invalid_argument("unknown boundary enum value");
}

}  // namespace

extern "C" {

const char* z2q_version(void) { return "1.0.0"; }

const char* z2q_last_error(void) { return g_last_error.c_str(); }

z2q_status z2q_lattice_create(int32_t lx, int32_t ly, z2q_boundary bc, z2q_lattice** out) {
    if (!out) return fail(Z2Q_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new z2q_lattice{LatticeSpec(lx, ly, to_boundary(bc))}; });
}

void z2q_lattice_free(z2q_lattice* lat) { delete lat; }

int32_t z2q_lattice_sites(const z2q_lattice* lat) { return lat ? lat->lat.n_sites() : -1; }

int32_t z2q_lattice_plaquettes(const z2q_lattice* lat) {
    return lat ? lat->lat.n_plaquettes() : -1;
}

int32_t z2q_lattice_edge_sites(const z2q_lattice* lat) { return lat ? lat->lat.n_edge() : -1; }

z2q_status z2q_spectrum_compute(const z2q_lattice* lat, double g, z2q_spectrum** out) {
    if (!lat || !out) return fail(Z2Q_INVALID_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new z2q_spectrum{spectrum(lat->lat, g)}; });
}

void z2q_spectrum_free(z2q_spectrum* sp) { delete sp; }

size_t z2q_spectrum_size(const z2q_spectrum* sp) { return sp ? sp->table.entries.size() : 0; }

z2q_status z2q_spectrum_entry(const z2q_spectrum* sp, size_t idx, int64_t* flux_sum,
                              double* energy, uint64_t* multiplicity) {
    if (!sp) return fail(Z2Q_INVALID_ARGUMENT, "null spectrum");
    if (idx >= sp->table.entries.size()) return fail(Z2Q_INVALID_ARGUMENT, "entry index out of range");
    const SpectrumEntry& e = sp->table.entries[idx];
    if (flux_sum) *flux_sum = e.flux_sum;
    if (energy) *energy = sp->table.g * static_cast<double>(e.flux_sum);
    if (multiplicity) *multiplicity = e.multiplicity;
    return Z2Q_OK;
}

z2q_status z2q_ground_info(const z2q_lattice* lat, double g, double* e0_out,
                           uint64_t* degeneracy_out, double* gap_out, int8_t* witness_flux) {
    if (!lat) return fail(Z2Q_INVALID_ARGUMENT, "null lattice");
    return guarded([&] {
        const GroundInfo gi = ground_info(lat->lat, g);
        if (e0_out) *e0_out = gi.e0;
        if (degeneracy_out) *degeneracy_out = gi.degeneracy;
        if (gap_out) *gap_out = g == 0 ? std::nan("") : spectral_gap(lat->lat, g);
        if (witness_flux)
            std::memcpy(witness_flux, gi.witness.f.data(), gi.witness.f.size());
    });
}

z2q_status z2q_relation_count(const z2q_lattice* lat, int32_t* count_out) {
    if (!lat || !count_out) return fail(Z2Q_INVALID_ARGUMENT, "null pointer");
    return guarded(
        [&] { *count_out = static_cast<int32_t>(find_relations(lat->lat).basis.size()); });
}

z2q_status z2q_verify_ed(const z2q_lattice* lat, double g, double tol, z2q_report** out) {
    if (!lat || !out) return fail(Z2Q_INVALID_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new z2q_report{verify_ed(lat->lat, g, tol)}; });
}

z2q_status z2q_verify_projective(const z2q_lattice* lat, double g, z2q_report** out) {
    if (!lat || !out) return fail(Z2Q_INVALID_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new z2q_report{verify_projective(lat->lat, g)}; });
}

z2q_status z2q_verify_psg(int32_t lx, int32_t ly, z2q_report** out) {
    if (!out) return fail(Z2Q_INVALID_ARGUMENT, "null pointer");
    *out = nullptr;
    return guarded([&] { *out = new z2q_report{verify_psg(lx, ly)}; });
}

void z2q_report_free(z2q_report* rep) { delete rep; }

size_t z2q_report_size(const z2q_report* rep) { return rep ? rep->rep.checks.size() : 0; }

int32_t z2q_report_all_pass(const z2q_report* rep) {
    return rep && rep->rep.all_pass() ? 1 : 0;
}

z2q_status z2q_report_check(const z2q_report* rep, size_t idx, const char** name_out,
                            double* residual_out, double* tolerance_out, int32_t* pass_out) {
    if (!rep) return fail(Z2Q_INVALID_ARGUMENT, "null report");
    if (idx >= rep->rep.checks.size()) return fail(Z2Q_INVALID_ARGUMENT, "check index out of range");
    const RunCheck& c = rep->rep.checks[idx];
    if (name_out) *name_out = c.name.c_str();
    if (residual_out) *residual_out = c.residual;
    if (tolerance_out) *tolerance_out = c.tolerance;
    if (pass_out) *pass_out = c.pass ? 1 : 0;
    return Z2Q_OK;
}

}  // extern "C"
