/* C interface to the z2plaq solver: exact spectra, verification suites and
 * quantum-order classification for the spin-1/2 plaquette model
 * H = g sum_i F_i on the square lattice.
 *
 * All functions return Z2Q_OK on success; on failure the thread-local
 * message from z2q_last_error() describes the problem. Objects returned
 * through out-parameters are owned by the caller and released with the
 * matching _free function.
 */

#ifndef Z2PLAQ_H
#define Z2PLAQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum z2q_status {
    Z2Q_OK = 0,
    Z2Q_INVALID_ARGUMENT = 1, /* bad flags, sizes, infeasible inputs */
    Z2Q_TOO_LARGE = 2,        /* enumeration or dense-scale bound exceeded */
    Z2Q_INTERNAL = 3
} z2q_status;

typedef enum z2q_boundary {
    Z2Q_TORUS = 0,
    Z2Q_CYLINDER_X = 1,
    Z2Q_CYLINDER_Y = 2,
    Z2Q_OPEN = 3
} z2q_boundary;

typedef struct z2q_lattice z2q_lattice;
typedef struct z2q_spectrum z2q_spectrum;
typedef struct z2q_report z2q_report;

const char* z2q_version(void);
const char* z2q_last_error(void);

/* ---- lattice ---- */

z2q_status z2q_lattice_create(int32_t lx, int32_t ly, z2q_boundary bc, z2q_lattice** out);
void z2q_lattice_free(z2q_lattice* lat);
int32_t z2q_lattice_sites(const z2q_lattice* lat);
int32_t z2q_lattice_plaquettes(const z2q_lattice* lat);
int32_t z2q_lattice_edge_sites(const z2q_lattice* lat);

/* ---- exact spectrum ---- */

z2q_status z2q_spectrum_compute(const z2q_lattice* lat, double g, z2q_spectrum** out);
void z2q_spectrum_free(z2q_spectrum* sp);
size_t z2q_spectrum_size(const z2q_spectrum* sp);
/* entries are sorted ascending by energy; energy = g * flux_sum */
z2q_status z2q_spectrum_entry(const z2q_spectrum* sp, size_t idx, int64_t* flux_sum,
                              double* energy, uint64_t* multiplicity);

/* witness_flux may be NULL; otherwise it must hold one int8 (+1/-1) per
 * plaquette. gap_out receives E1 - E0, or NaN at g = 0 where it is
 * undefined. */
z2q_status z2q_ground_info(const z2q_lattice* lat, double g, double* e0_out,
                           uint64_t* degeneracy_out, double* gap_out, int8_t* witness_flux);

/* number of independent operator relations (GF(2) basis size) */
z2q_status z2q_relation_count(const z2q_lattice* lat, int32_t* count_out);

/* ---- verification suites ---- */

z2q_status z2q_verify_ed(const z2q_lattice* lat, double g, double tol, z2q_report** out);
z2q_status z2q_verify_projective(const z2q_lattice* lat, double g, z2q_report** out);
z2q_status z2q_verify_psg(int32_t lx, int32_t ly, z2q_report** out);

void z2q_report_free(z2q_report* rep);
size_t z2q_report_size(const z2q_report* rep);
int32_t z2q_report_all_pass(const z2q_report* rep);
z2q_status z2q_report_check(const z2q_report* rep, size_t idx, const char** name_out,
                            double* residual_out, double* tolerance_out, int32_t* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* Z2PLAQ_H */
