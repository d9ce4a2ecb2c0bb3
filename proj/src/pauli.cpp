#include "z2plaq/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace z2plaq {

namespace {

int popcount_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    int c = 0;
    for (size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(int n_sites)
    : n_(n_sites), xbits_((n_sites + 63) / 64, 0), zbits_((n_sites + 63) / 64, 0), phase_(0) {
    if (n_sites <= 0) throw std::invalid_argument("PauliString needs at least one site");
}

PauliString PauliString::x_at(int n_sites, int site) {
    PauliString p(n_sites);
    p.xbits_[site >> 6] |= uint64_t(1) << (site & 63);
    return p;
}

PauliString PauliString::z_at(int n_sites, int site) {
    PauliString p(n_sites);
    p.zbits_[site >> 6] |= uint64_t(1) << (site & 63);
    return p;
}

PauliString PauliString::y_at(int n_sites, int site) {
    PauliString p = x_at(n_sites, site);
    p.zbits_[site >> 6] |= uint64_t(1) << (site & 63);
    p.phase_ = 1;
    return p;
}

bool PauliString::is_identity_bits() const {
    for (size_t w = 0; w < xbits_.size(); ++w)
        if (xbits_[w] || zbits_[w]) return false;
    return true;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("PauliString length mismatch");
    PauliString out(n_);
    // Z^{z1} commuted past X^{x2} picks up (-1)^{|z1 & x2|}.
    out.phase_ = (phase_ + rhs.phase_ + 2 * popcount_and(zbits_, rhs.xbits_)) % 4;
    for (size_t w = 0; w < xbits_.size(); ++w) {
        out.xbits_[w] = xbits_[w] ^ rhs.xbits_[w];
        out.zbits_[w] = zbits_[w] ^ rhs.zbits_[w];
    }
    return out;
}

bool PauliString::commutes(const PauliString& other) const {
    if (n_ != other.n_) throw std::invalid_argument("PauliString length mismatch");
    return (popcount_and(xbits_, other.zbits_) + popcount_and(zbits_, other.xbits_)) % 2 == 0;
}

bool PauliString::is_hermitian() const {
    // dagger flips phase to (-phase + 2|x&z|) mod 4.
    return ((2 * phase_) % 4) == ((2 * popcount_and(xbits_, zbits_)) % 4);
}

PauliString PauliString::inverse() const {
    PauliString out = *this;
    out.phase_ = ((-phase_ % 4) + 4 + 2 * popcount_and(xbits_, zbits_)) % 4;
    return out;
}

std::pair<uint64_t, std::complex<double>> PauliString::apply(uint64_t basis) const {
    if (n_ > 64) throw std::invalid_argument("apply requires at most 64 sites");
    if (n_ < 64 && basis >> n_) throw std::out_of_range("basis index out of range");
    int ph = phase_;
    if (std::popcount(zbits_[0] & basis) & 1) ph += 2;
    return {basis ^ xbits_[0], kPhase[ph % 4]};
}

std::string PauliString::str() const {
    static const char* kSign[4] = {"+", "+i", "-", "-i"};
    // report the phase relative to letters (Y = i XZ absorbs one factor of i)
    int ph = phase_;
    std::string body;
    for (int s = 0; s < n_; ++s) {
        const bool x = x_bit(s), z = z_bit(s);
        if (x && z) {
            body += 'Y';
            ph = (ph + 3) % 4;  // Y contributes i; displayed letter absorbs it
        } else {
            body += x ? 'X' : (z ? 'Z' : 'I');
        }
    }
    return std::string(kSign[ph]) + body;
}

PauliString plaquette_operator(const LatticeSpec& lat, int ix, int iy) {
    const auto sites = lat.plaquette_sites(ix, iy);  // throws "no such plaquette"
    const int n = lat.n_sites();
    return PauliString::y_at(n, sites[0]) * PauliString::x_at(n, sites[1]) *
           PauliString::y_at(n, sites[2]) * PauliString::x_at(n, sites[3]);
}

double SpinState::norm() const {
    double s = 0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

void SpinState::normalize() {
    const double n = norm();
    if (n == 0) throw std::domain_error("cannot normalize zero state");
    for (auto& a : amp) a /= n;
}

std::complex<double> SpinState::inner(const SpinState& other) const {
    if (amp.size() != other.amp.size()) throw std::invalid_argument("state dimension mismatch");
    std::complex<double> s = 0;
    for (size_t i = 0; i < amp.size(); ++i) s += std::conj(amp[i]) * other.amp[i];
    return s;
}

SpinState apply(const PauliString& p, const SpinState& st) {
    SpinState out(p.n_sites());
    if (out.amp.size() != st.amp.size()) throw std::invalid_argument("state dimension mismatch");
    for (uint64_t b = 0; b < st.amp.size(); ++b) {
        if (st.amp[b] == std::complex<double>(0)) continue;
        auto [b2, ph] = p.apply(b);
        out.amp[b2] += ph * st.amp[b];
    }
    return out;
}

}  // namespace z2plaq
