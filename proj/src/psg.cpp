#include "z2plaq/psg.hpp"

#include <cmath>
#include <stdexcept>

namespace z2plaq {

namespace {

using cplx = std::complex<double>;

}  // namespace

Mat2 Mat2::identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }

Mat2 Mat2::pauli(int k) {
    switch (k) {
        case 1: return {{cplx(0), cplx(1), cplx(1), cplx(0)}};
        case 2: return {{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}};
        case 3: return {{cplx(1), cplx(0), cplx(0), cplx(-1)}};
    }
    throw std::invalid_argument("pauli index must be 1, 2 or 3");
}

Mat2 Mat2::diag(cplx a, cplx b) { return {{a, cplx(0), cplx(0), b}}; }

Mat2 Mat2::operator*(const Mat2& o) const {
    return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
             m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return {{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
}

Mat2 Mat2::operator-(const Mat2& o) const {
    return {{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
}

Mat2 Mat2::operator*(cplx s) const { return {{m[0] * s, m[1] * s, m[2] * s, m[3] * s}}; }

Mat2 Mat2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Mat2 Mat2::transpose() const { return {{m[0], m[2], m[1], m[3]}}; }

Mat2 Mat2::conj() const {
    return {{std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])}};
}

double Mat2::max_abs_diff(const Mat2& o) const {
    double worst = 0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(m[i] - o.m[i]));
    return worst;
}

double Mat2::max_abs() const {
    double worst = 0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(m[i]));
    return worst;
}

Ansatz Ansatz::zero(const LatticeSpec& lat) {
    return {lat, std::vector<Mat2>(lat.n_links()), std::vector<Mat2>(lat.n_links())};
}

double Ansatz::max_abs_diff(const Ansatz& o) const {
    double worst = 0;
    for (int s = 0; s < lat.n_links(); ++s) {
        worst = std::max(worst, chi[s].max_abs_diff(o.chi[s]));
        worst = std::max(worst, eta[s].max_abs_diff(o.eta[s]));
    }
    return worst;
}

Ansatz ansatz_for_ground(GSign s, const LatticeSpec& lat) {
    Ansatz a = Ansatz::zero(lat);
    const Mat2 plus = Mat2::identity() + Mat2::pauli(3);   // diag(2, 0)
    const Mat2 minus = Mat2::identity() - Mat2::pauli(3);  // diag(0, 2)
    for (int l = 0; l < lat.n_links(); ++l) {
        const auto& link = lat.links()[l];
        if (link.dir == 0) {
            const double stag =
                (s == GSign::positive && (link.iy & 1)) ? -1.0 : 1.0;
            a.chi[l] = plus * stag;
            a.eta[l] = plus * (-stag);
        } else {
            a.chi[l] = minus;
            a.eta[l] = minus * (-1.0);
        }
    }
    return a;
}

Ansatz ansatz_from_link_field(const LinkField& lf) {
    Ansatz a = Ansatz::zero(lf.lat);
    const Mat2 plus = Mat2::identity() + Mat2::pauli(3);
    const Mat2 minus = Mat2::identity() - Mat2::pauli(3);
    for (int l = 0; l < lf.lat.n_links(); ++l) {
        const double s = lf.sign[l];
        const Mat2& base = lf.lat.links()[l].dir == 0 ? plus : minus;
        a.chi[l] = base * s;
        a.eta[l] = base * (-s);
    }
    return a;
}

SU2Gauge SU2Gauge::uniform(const LatticeSpec& lat, const Mat2& q) {
    return {std::vector<Mat2>(lat.n_sites(), q)};
}

void SU2Gauge::check_su2(double tol) const {
    const Mat2 id = Mat2::identity();
    for (const Mat2& q : g) {
        if ((q.adjoint() * q).max_abs_diff(id) > tol)
            throw std::invalid_argument("gauge element not unitary");
        const cplx det = q.m[0] * q.m[3] - q.m[1] * q.m[2];
        if (std::abs(det - cplx(1)) > tol)
            throw std::invalid_argument("gauge element determinant is not 1");
    }
}

namespace {

struct LinkEnds {
    int i, j;  // base and end site of a canonical link
};

LinkEnds link_ends(const LatticeSpec& lat, const LatticeSpec::Link& l) {
    if (l.dir == 0) return {lat.site(l.ix, l.iy), lat.site(l.ix + 1, l.iy)};
    return {lat.site(l.ix, l.iy), lat.site(l.ix, l.iy + 1)};
}

// The link whose image under the symmetry is the given canonical link, i.e.
// the source of the transformed value chi'_{ij} = G(i) chi_{S(i) S(j)} G'(j).
int preimage_slot(const LatticeSpec& lat, Symmetry sym, const LatticeSpec::Link& l) {
    switch (sym) {
        case Symmetry::identity:
        case Symmetry::time_reversal:
            return lat.link_slot(l.dir, l.ix, l.iy);
        case Symmetry::translate_x:  // T_x: i -> i - x
            return lat.link_slot(l.dir, l.ix - 1, l.iy);
        case Symmetry::translate_y:
            return lat.link_slot(l.dir, l.ix, l.iy - 1);
        case Symmetry::mirror_xy:
            // P_xy swaps coordinates: the image of the x-link based at
            // (iy, ix) is the y-link based at (ix, iy) and vice versa
            return lat.link_slot(1 - l.dir, l.iy, l.ix);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Ansatz act(const PsgTransform& t, const Ansatz& a) {
    const LatticeSpec& lat = a.lat;
    if (static_cast<int>(t.gauge.g.size()) != lat.n_sites())
        throw std::invalid_argument("gauge must be defined on every site");
    if (t.sym == Symmetry::mirror_xy && lat.lx() != lat.ly())
        throw std::invalid_argument("mirror_xy requires a square lattice");
    if ((t.sym == Symmetry::translate_x && !lat.x_periodic()) ||
        (t.sym == Symmetry::translate_y && !lat.y_periodic()) ||
        (t.sym == Symmetry::mirror_xy && lat.boundary() == Boundary::cylinder_x) ||
        (t.sym == Symmetry::mirror_xy && lat.boundary() == Boundary::cylinder_y))
        throw std::invalid_argument("symmetry incompatible with boundary");

    Ansatz out = Ansatz::zero(lat);
    for (int l = 0; l < lat.n_links(); ++l) {
        const auto& link = lat.links()[l];
        const int pre = preimage_slot(lat, t.sym, link);
        Mat2 chi = a.chi[pre], eta = a.eta[pre];
        if (t.sym == Symmetry::time_reversal) {
            chi = chi.conj();
            eta = eta.conj();
        }
        const auto [i, j] = link_ends(lat, link);
        out.chi[l] = t.gauge.g[i] * chi * t.gauge.g[j].adjoint();
        out.eta[l] = t.gauge.g[i] * eta * t.gauge.g[j].transpose();
    }
    return out;
}

bool is_invariant(const Ansatz& a, const PsgTransform& t) {
    return act(t, a).max_abs_diff(a) <= 1e-12;
}

namespace {

struct Candidate {
    std::string name;
    Mat2 q;
};

std::vector<Candidate> subgroup8() {
    const cplx i(0, 1);
    std::vector<Candidate> out;
    out.push_back({"+1", Mat2::identity()});
    out.push_back({"-1", Mat2::identity() * cplx(-1)});
    out.push_back({"+i*tau^x", Mat2::pauli(1) * i});
    out.push_back({"-i*tau^x", Mat2::pauli(1) * (-i)});
    out.push_back({"+i*tau^y", Mat2::pauli(2) * i});
    out.push_back({"-i*tau^y", Mat2::pauli(2) * (-i)});
    out.push_back({"+i*tau^z", Mat2::pauli(3) * i});
    out.push_back({"-i*tau^z", Mat2::pauli(3) * (-i)});
    return out;
}

}  // namespace

std::vector<IggElement> compute_igg(const Ansatz& a) {
    std::vector<IggElement> found;
    for (const auto& cand : subgroup8()) {
        PsgTransform t{Symmetry::identity, SU2Gauge::uniform(a.lat, cand.q)};
        if (is_invariant(a, t)) found.push_back({cand.name, cand.q});
    }
    return found;
}

std::string to_string(Z2Class c) {
    switch (c) {
        case Z2Class::Z2A: return "Z2A";
        case Z2Class::Z2B: return "Z2B";
        case Z2Class::other: return "other";
    }
    return "?";
}

namespace {

SU2Gauge staggered_x(const LatticeSpec& lat, const Mat2& q) {
    SU2Gauge g{std::vector<Mat2>(lat.n_sites())};
    for (int i = 0; i < lat.n_sites(); ++i)
        g.g[i] = (lat.site_x(i) & 1) ? q * cplx(-1) : q;
    return g;
}

bool matches_generators(const Ansatz& a, bool staggered_gy) {
    const LatticeSpec& lat = a.lat;
    const Mat2 id = Mat2::identity();
    const PsgTransform gx{Symmetry::translate_x, SU2Gauge::uniform(lat, id)};
    const PsgTransform gy{Symmetry::translate_y,
                          staggered_gy ? staggered_x(lat, id) : SU2Gauge::uniform(lat, id)};
    const PsgTransform gg{Symmetry::identity, SU2Gauge::uniform(lat, id * cplx(-1))};
    return is_invariant(a, gx) && is_invariant(a, gy) && is_invariant(a, gg);
}

}  // namespace

Z2Class classify_z2(const Ansatz& a) {
    const bool z2a = matches_generators(a, false);
    const bool z2b = matches_generators(a, true);
    if (z2a && !z2b) return Z2Class::Z2A;
    if (z2b && !z2a) return Z2Class::Z2B;
    return Z2Class::other;
}

std::optional<std::string> find_pxy_gauge(const Ansatz& a) {
    const LatticeSpec& lat = a.lat;
    if (lat.lx() != lat.ly()) return std::nullopt;
    struct Stagger {
        std::string name;
        int (*sign)(int, int);
    };
    static const Stagger staggers[] = {
        {"", [](int, int) { return 1; }},
        {" * (-1)^ix", [](int ix, int) { return ix & 1 ? -1 : 1; }},
        {" * (-1)^iy", [](int, int iy) { return iy & 1 ? -1 : 1; }},
        {" * (-1)^(ix+iy)", [](int ix, int iy) { return (ix + iy) & 1 ? -1 : 1; }},
        {" * (-1)^(ix*iy)", [](int ix, int iy) { return (ix * iy) & 1 ? -1 : 1; }},
    };
    for (const auto& cand : subgroup8()) {
        for (const auto& st : staggers) {
            SU2Gauge g{std::vector<Mat2>(lat.n_sites())};
            for (int i = 0; i < lat.n_sites(); ++i)
                g.g[i] = cand.q * cplx(double(st.sign(lat.site_x(i), lat.site_y(i))));
            if (is_invariant(a, PsgTransform{Symmetry::mirror_xy, g}))
                return cand.name + st.name;
        }
    }
    return std::nullopt;
}

}  // namespace z2plaq
