#include "z2plaq/projective.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "sym_eig.hpp"

namespace z2plaq {

namespace {

using cplx = std::complex<double>;

// lambda_1 / lambda_2 act as c + c^dag on a mode; lambda_3 / lambda_4 as
// i (c^dag - c). Jordan-Wigner sign counts occupied modes below.
struct MajoranaAction {
    uint64_t flip;
    // returns the amplitude factor for incoming occupation word n
    static double jw_sign(uint64_t n, int mode) {
        return std::popcount(n & ((uint64_t(1) << mode) - 1)) & 1 ? -1.0 : 1.0;
    }
};

// Applies U_link = lambda_a(base) lambda_b(end) to basis state n.
// x-link: lambda_1(base) lambda_3(end) on site modes 2i; y-link uses the
// second site mode 2i+1. Right factor acts first.
std::pair<uint64_t, cplx> link_op_on_basis(const LatticeSpec& lat, const LatticeSpec::Link& l,
                                           uint64_t n) {
    int base, end, off;
    if (l.dir == 0) {
        base = lat.site(l.ix, l.iy);
        end = lat.site(l.ix + 1, l.iy);
        off = 0;
    } else {
        base = lat.site(l.ix, l.iy);
        end = lat.site(l.ix, l.iy + 1);
        off = 1;
    }
    const int m_end = 2 * end + off;
    const int m_base = 2 * base + off;
    // lambda_{3 or 4} at end: i (c^dag - c)
    cplx f = MajoranaAction::jw_sign(n, m_end) *
             ((n >> m_end) & 1 ? cplx(0, -1) : cplx(0, 1));
    uint64_t n1 = n ^ (uint64_t(1) << m_end);
    // lambda_{1 or 2} at base: c + c^dag
    f *= MajoranaAction::jw_sign(n1, m_base);
    return {n1 ^ (uint64_t(1) << m_base), f};
}

void require_torus(const LatticeSpec& lat, const char* what) {
    if (lat.boundary() != Boundary::torus)
        throw std::invalid_argument(std::string(what) +
                                    " requires a torus (open edges leave Majorana zero modes)");
}

}  // namespace

LinkField LinkField::uniform(const LatticeSpec& lat) {
    return {lat, std::vector<int8_t>(lat.n_links(), +1)};
}

FluxConfig flux_of(const LinkField& lf) {
    const LatticeSpec& lat = lf.lat;
    FluxConfig f = FluxConfig::all_plus(lat);
    for (int p = 0; p < lat.n_plaquettes(); ++p) {
        const auto [ix, iy] = lat.plaquette_bases()[p];
        // F = s_{i,i1} s_{i1,i2} s_{i2,i3} s_{i3,i}; the two reversed links
        // contribute (-s)(-s), so the sign is the plain product of the four
        // canonical link signs and the i^4 factor drops out.
        int prod = 1;
        for (int slot : lat.plaquette_link_slots(ix, iy)) prod *= lf.sign[slot];
        f.f[p] = static_cast<int8_t>(prod);
    }
    return f;
}

LinkField gauge_transform(const LinkField& lf, const std::vector<int8_t>& site_signs) {
    const LatticeSpec& lat = lf.lat;
    if (static_cast<int>(site_signs.size()) != lat.n_sites())
        throw std::invalid_argument("gauge transform needs one sign per site");
    LinkField out = lf;
    for (int s = 0; s < lat.n_links(); ++s) {
        const auto& l = lat.links()[s];
        const int i = lat.site(l.ix, l.iy);
        const int j = l.dir == 0 ? lat.site(l.ix + 1, l.iy) : lat.site(l.ix, l.iy + 1);
        out.sign[s] = static_cast<int8_t>(site_signs[i] * lf.sign[s] * site_signs[j]);
    }
    return out;
}

std::pair<int, int> wilson_loops(const LinkField& lf) {
    require_torus(lf.lat, "wilson_loops");
    // product of (-i * s) = sign along row 0 / column 0
    int wx = 1, wy = 1;
    for (int ix = 0; ix < lf.lat.lx(); ++ix) wx *= lf.sign[lf.lat.link_slot(0, ix, 0)];
    for (int iy = 0; iy < lf.lat.ly(); ++iy) wy *= lf.sign[lf.lat.link_slot(1, 0, iy)];
    return {wx, wy};
}

LinkField flip_wilson_x(const LinkField& lf) {
    require_torus(lf.lat, "flip_wilson_x");
    LinkField out = lf;
    for (int iy = 0; iy < lf.lat.ly(); ++iy) {
        const int s = lf.lat.link_slot(0, 0, iy);
        out.sign[s] = static_cast<int8_t>(-out.sign[s]);
    }
    return out;
}

LinkField flip_wilson_y(const LinkField& lf) {
    require_torus(lf.lat, "flip_wilson_y");
    LinkField out = lf;
    for (int ix = 0; ix < lf.lat.lx(); ++ix) {
        const int s = lf.lat.link_slot(1, ix, 0);
        out.sign[s] = static_cast<int8_t>(-out.sign[s]);
    }
    return out;
}

LinkField link_field_for_flux(const LatticeSpec& lat, const FluxConfig& f) {
    if (static_cast<int>(f.f.size()) != lat.n_plaquettes())
        throw std::invalid_argument("flux configuration size mismatch");
    if (!find_relations(lat).admits(f))
        throw std::invalid_argument("infeasible flux configuration (violates a relation)");

    const int np = lat.n_plaquettes();
    bool all_plus = true, all_minus = true;
    for (int8_t v : f.f) (v > 0 ? all_minus : all_plus) = false;

    if (all_plus) return LinkField::uniform(lat);

    if (all_minus) {
        // staggered choice (-1)^{iy} on x-links; valid whenever the wrap row
        // closes consistently (checked below, general solve otherwise)
        LinkField lf = LinkField::uniform(lat);
        for (int s = 0; s < lat.n_links(); ++s) {
            const auto& l = lat.links()[s];
            if (l.dir == 0 && (l.iy & 1)) lf.sign[s] = -1;
        }
        if (flux_of(lf).f == f.f) return lf;
    }

    // GF(2) incidence solve: one unknown sign bit per canonical link, one
    // parity equation per plaquette.
    const int nl = lat.n_links();
    const int nw = (nl + 1 + 63) / 64;  // last column carries the rhs bit
    std::vector<std::vector<uint64_t>> rows;
    for (int p = 0; p < np; ++p) {
        const auto [ix, iy] = lat.plaquette_bases()[p];
        std::vector<uint64_t> row(nw, 0);
        for (int slot : lat.plaquette_link_slots(ix, iy)) row[slot >> 6] ^= uint64_t(1) << (slot & 63);
        if (f.f[p] < 0) row[nl >> 6] ^= uint64_t(1) << (nl & 63);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    std::vector<std::vector<uint64_t>> pivots;
    for (auto& row : rows) {
        for (size_t r = 0; r < pivots.size(); ++r) {
            const int c = pivot_col[r];
            if ((row[c >> 6] >> (c & 63)) & 1)
                for (int w = 0; w < nw; ++w) row[w] ^= pivots[r][w];
        }
        int lead = -1;
        for (int c = 0; c < nl && lead < 0; ++c)
            if ((row[c >> 6] >> (c & 63)) & 1) lead = c;
        if (lead >= 0) {
            pivot_col.push_back(lead);
            pivots.push_back(row);
        } else if ((row[nl >> 6] >> (nl & 63)) & 1) {
            throw std::invalid_argument("infeasible flux configuration (incidence system)");
        }
    }
    // particular solution: free links +1, pivot links from back-substitution
    std::vector<int8_t> bits(nl, 0);
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        int v = (pivots[r][nl >> 6] >> (nl & 63)) & 1;
        for (int c = pivot_col[r] + 1; c < nl; ++c)
            if ((pivots[r][c >> 6] >> (c & 63)) & 1) v ^= bits[c];
        bits[pivot_col[r]] = static_cast<int8_t>(v);
    }
    LinkField lf{lat, {}};
    lf.sign.resize(nl);
    for (int s = 0; s < nl; ++s) lf.sign[s] = bits[s] ? -1 : +1;
    if (!(flux_of(lf).f == f.f)) throw std::logic_error("link field does not reproduce flux");
    return lf;
}

double FockState::norm() const {
    double s = 0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void FockState::normalize() {
    const double n = norm();
    if (n == 0) throw std::domain_error("cannot normalize zero state");
    for (auto& a : amp) a /= n;
}

void FockState::fix_phase() {
    for (const auto& a : amp) {
        if (std::abs(a) > 1e-12) {
            const cplx rot = std::conj(a) / std::abs(a);
            for (auto& b : amp) b *= rot;
            return;
        }
    }
}

std::complex<double> FockState::inner(const FockState& o) const {
    cplx s = 0;
    for (size_t i = 0; i < amp.size(); ++i) s += std::conj(amp[i]) * o.amp[i];
    return s;
}

FockState apply_link_operator(const LatticeSpec& lat, LatticeSpec::Link link,
                              const FockState& st) {
    FockState out(st.n_sites);
    for (uint64_t n = 0; n < st.amp.size(); ++n) {
        if (st.amp[n] == cplx(0)) continue;
        const auto [n2, f] = link_op_on_basis(lat, link, n);
        out.amp[n2] += f * st.amp[n];
    }
    return out;
}

FockState apply_link_operator(const LinkField& lf, int link_slot, const FockState& st) {
    return apply_link_operator(lf.lat, lf.lat.links()[link_slot], st);
}

MeanFieldGround mean_field_ground_state(const LatticeSpec& lat, const LinkField& lf) {
    require_torus(lat, "mean_field_ground_state");
    if (lat.n_sites() > 6) throw std::domain_error("Fock-space diagonalization limited to 6 sites");

    const int nmodes = 2 * lat.n_sites();
    const uint64_t dim = uint64_t(1) << nmodes;
    // H_mean = sum (s U + h.c.) = sum 2 i sign U; real symmetric in this
    // representation (each U pairs one real with one imaginary Majorana).
    std::vector<double> h(dim * dim, 0.0);
    for (int s = 0; s < lat.n_links(); ++s) {
        const auto& l = lat.links()[s];
        for (uint64_t c = 0; c < dim; ++c) {
            const auto [r, f] = link_op_on_basis(lat, l, c);
            const cplx v = 2.0 * cplx(0, 1) * double(lf.sign[s]) * f;
            if (std::abs(v.imag()) > 1e-12) throw std::logic_error("H_mean not real");
            h[r * dim + c] += v.real();
        }
    }

    const auto eig = detail::sym_lowest_eigenpairs(h, static_cast<int>(dim), 2);
    const double gap = eig.values[1] - eig.values[0];
    if (gap < 1e-9) throw std::logic_error("mean-field ground state unexpectedly degenerate");

    MeanFieldGround out{FockState(lat.n_sites()), eig.values[0], gap};
    for (uint64_t i = 0; i < dim; ++i) out.state.amp[i] = eig.vectors[i];
    out.state.normalize();
    out.state.fix_phase();
    return out;
}

FockState joint_eigenstate(const LinkField& lf) {
    const LatticeSpec& lat = lf.lat;
    require_torus(lat, "joint_eigenstate");
    if (lat.n_sites() > 6) throw std::domain_error("Fock-space construction limited to 6 sites");
    const uint64_t dim = uint64_t(1) << (2 * lat.n_sites());

    // P_l = (1 + U_l / s_l) / 2 are commuting projectors with a rank-1
    // product; the first basis vector with nonzero image gives the state.
    for (uint64_t start = 0; start < dim; ++start) {
        FockState v(lat.n_sites());
        v.amp[start] = 1.0;
        for (int s = 0; s < lat.n_links(); ++s) {
            const FockState u = apply_link_operator(lf, s, v);
            const cplx inv_s = 1.0 / lf.value(s);
            for (uint64_t i = 0; i < dim; ++i) v.amp[i] = 0.5 * (v.amp[i] + inv_s * u.amp[i]);
        }
        const double n = v.norm();
        if (n > 1e-6) {
            for (auto& a : v.amp) a /= n;
            v.fix_phase();
            return v;
        }
    }
    throw std::logic_error("projector chain annihilated every basis vector");
}

int fermion_parity(const FockState& st) {
    int parity = 0;
    bool found = false;
    for (uint64_t n = 0; n < st.amp.size(); ++n) {
        if (std::abs(st.amp[n]) <= 1e-10) continue;
        const int p = std::popcount(n) & 1;
        if (!found) {
            parity = p;
            found = true;
        } else if (p != parity) {
            throw std::invalid_argument("state has mixed fermion parity");
        }
    }
    if (!found) throw std::invalid_argument("zero state has no parity");
    return parity ? -1 : +1;
}

SpinState project_physical(const FockState& st) {
    const int ns = st.n_sites;
    SpinState out(ns);
    for (uint64_t n = 0; n < st.amp.size(); ++n) {
        if (st.amp[n] == cplx(0)) continue;
        uint64_t b = 0;
        bool even = true;
        for (int i = 0; i < ns && even; ++i) {
            const int b1 = (n >> (2 * i)) & 1, b2 = (n >> (2 * i + 1)) & 1;
            if (b1 != b2) even = false;
            if (b1) b |= uint64_t(1) << i;
        }
        if (even) out.amp[b] += st.amp[n];
    }
    return out;
}

SpinState gauge_project(const FockState& st) {
    SpinState out = project_physical(st);
    if (out.norm() < 1e-12)
        throw std::domain_error("state projects to zero (odd-parity, unphysical sector)");
    out.normalize();
    return out;
}

FockState apply_gauge(const FockState& st, const std::vector<int8_t>& site_signs) {
    if (static_cast<int>(site_signs.size()) != st.n_sites)
        throw std::invalid_argument("gauge transform needs one sign per site");
    FockState out = st;
    for (uint64_t n = 0; n < st.amp.size(); ++n) {
        int sgn = 1;
        for (int i = 0; i < st.n_sites; ++i) {
            const int nf = ((n >> (2 * i)) & 1) + ((n >> (2 * i + 1)) & 1);
            if (site_signs[i] < 0 && (nf & 1)) sgn = -sgn;
        }
        out.amp[n] = double(sgn) * st.amp[n];
    }
    return out;
}

}  // namespace z2plaq
