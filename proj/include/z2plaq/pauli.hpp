#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "z2plaq/lattice.hpp"

namespace z2plaq {

// n-qubit Pauli operator i^phase_exp * prod_s X_s^{x_s} Z_s^{z_s}, phase
// tracked exactly as an integer mod 4. Site s lives at bit s of the packed
// words. Basis convention: bit b = 1 means spin up (one boson), Z|b> = (-1)^b.
class PauliString {
public:
    explicit PauliString(int n_sites);  // identity

    static PauliString x_at(int n_sites, int site);
    static PauliString y_at(int n_sites, int site);  // Y = i XZ
    static PauliString z_at(int n_sites, int site);

    int n_sites() const { return n_; }
    int phase_exp() const { return phase_; }
    bool x_bit(int site) const { return (xbits_[site >> 6] >> (site & 63)) & 1; }
    bool z_bit(int site) const { return (zbits_[site >> 6] >> (site & 63)) & 1; }
    bool is_identity_bits() const;

    PauliString operator*(const PauliString& rhs) const;
    bool commutes(const PauliString& other) const;
    bool is_hermitian() const;
    PauliString inverse() const;

    // Maps one computational basis state to another with a power-of-i phase.
    // Requires n_sites <= 64.
    std::pair<uint64_t, std::complex<double>> apply(uint64_t basis) const;

    std::string str() const;  // e.g. "+YXIXY"
    bool operator==(const PauliString& o) const = default;

private:
    int n_;
    std::vector<uint64_t> xbits_, zbits_;
    int phase_;  // mod 4
};

// Hermitian 4-site plaquette string Y_i X_{i+x} Y_{i+x+y} X_{i+y}.
PauliString plaquette_operator(const LatticeSpec& lat, int ix, int iy);

// Dense state over the 2^{N_s} spin basis.
struct SpinState {
    std::vector<std::complex<double>> amp;

    explicit SpinState(int n_sites) : amp(uint64_t(1) << n_sites) {}
    double norm() const;
    void normalize();
    std::complex<double> inner(const SpinState& other) const;  // <this|other>
};

SpinState apply(const PauliString& p, const SpinState& st);

}  // namespace z2plaq
