#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "z2plaq/lattice.hpp"
#include "z2plaq/projective.hpp"

namespace z2plaq {

// Minimal 2x2 complex matrix for the gauge structure.
struct Mat2 {
    std::array<std::complex<double>, 4> m{};  // row-major

    static Mat2 identity();
    static Mat2 zero() { return {}; }
    static Mat2 pauli(int k);  // tau^1, tau^2, tau^3
    static Mat2 diag(std::complex<double> a, std::complex<double> b);

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(std::complex<double> s) const;
    Mat2 adjoint() const;
    Mat2 transpose() const;
    Mat2 conj() const;
    double max_abs_diff(const Mat2& o) const;
    double max_abs() const;
    bool operator==(const Mat2& o) const = default;
};

// Mean-field ansatz: two 2x2 matrices per canonical link, indexed like
// LatticeSpec::links().
struct Ansatz {
    LatticeSpec lat;
    std::vector<Mat2> chi, eta;

    static Ansatz zero(const LatticeSpec& lat);
    double max_abs_diff(const Ansatz& o) const;
};

enum class GSign { negative, positive };

// The ground-state ansatz: chi_x = 1 + tau^3, chi_y = 1 - tau^3,
// eta = -chi, with x-link matrices staggered by (-1)^{iy} for g > 0.
Ansatz ansatz_for_ground(GSign s, const LatticeSpec& lat);

// chi/eta read off a +-i link field: sign * (1 + tau^3) on x-links,
// sign * (1 - tau^3) on y-links, eta = -chi.
Ansatz ansatz_from_link_field(const LinkField& lf);

// Site-wise SU(2) gauge transformation.
struct SU2Gauge {
    std::vector<Mat2> g;  // one per site

    static SU2Gauge uniform(const LatticeSpec& lat, const Mat2& q);
    void check_su2(double tol = 1e-12) const;  // throws if not special unitary
};

enum class Symmetry { identity, translate_x, translate_y, mirror_xy, time_reversal };

struct PsgTransform {
    Symmetry sym = Symmetry::identity;
    SU2Gauge gauge;
};

// Site permutation, then gauge conjugation: chi -> G chi G^dag,
// eta -> G eta G^T. Time reversal conjugates all entries.
Ansatz act(const PsgTransform& t, const Ansatz& a);

// Entrywise equality of act(t, a) and a within 1e-12.
bool is_invariant(const Ansatz& a, const PsgTransform& t);

// Uniform gauge transformations from {+-1, +-i tau^x, +-i tau^y, +-i tau^z}
// leaving the ansatz fixed. Finite search; site-dependent elements are out of
// scope here.
struct IggElement {
    std::string name;
    Mat2 q;
};
std::vector<IggElement> compute_igg(const Ansatz& a);

enum class Z2Class { Z2A, Z2B, other };
std::string to_string(Z2Class c);

// Tests the two translation-symmetric Z2 generator sets
//   Z2A: G_x = 1, G_y = 1, G_g = -1
//   Z2B: G_x = 1, G_y = (-1)^{ix}, G_g = -1
// and returns the unique match ("other" if both or neither).
Z2Class classify_z2(const Ansatz& a);

// Searches gauge components making the ansatz P_xy-invariant, over the
// 8-element subgroup combined with simple sign staggerings. Reports the
// match by name, or nullopt if none exists in the searched family.
std::optional<std::string> find_pxy_gauge(const Ansatz& a);

}  // namespace z2plaq
