#include "z2plaq/lattice.hpp"

#include <stdexcept>

namespace z2plaq {

std::string to_string(Boundary bc) {
    switch (bc) {
        case Boundary::torus: return "torus";
        case Boundary::cylinder_x: return "cylinder-x";
        case Boundary::cylinder_y: return "cylinder-y";
        case Boundary::open: return "open";
    }
    return "?";
}

Boundary boundary_from_string(const std::string& name) {
    if (name == "torus") return Boundary::torus;
    if (name == "cylinder-x" || name == "cylinder_x") return Boundary::cylinder_x;
    if (name == "cylinder-y" || name == "cylinder_y") return Boundary::cylinder_y;
    if (name == "open") return Boundary::open;
    throw std::invalid_argument("unknown boundary type: " + name);
}

LatticeSpec::LatticeSpec(int lx, int ly, Boundary bc) : lx_(lx), ly_(ly), bc_(bc) {
    if (lx < 2 || ly < 2) throw std::invalid_argument("lattice requires lx >= 2 and ly >= 2");

    plaq_slot_.assign(n_sites(), -1);
    const int py = y_periodic() ? ly_ : ly_ - 1;
    const int px = x_periodic() ? lx_ : lx_ - 1;
    for (int iy = 0; iy < py; ++iy)
        for (int ix = 0; ix < px; ++ix) {
            plaq_slot_[ix + lx_ * iy] = static_cast<int>(plaq_bases_.size());
            plaq_bases_.push_back({ix, iy});
        }

    xlink_slot_.assign(n_sites(), -1);
    ylink_slot_.assign(n_sites(), -1);
    for (int iy = 0; iy < ly_; ++iy)
        for (int ix = 0; ix < px; ++ix) {
            xlink_slot_[ix + lx_ * iy] = static_cast<int>(links_.size());
            links_.push_back({0, ix, iy});
        }
    for (int iy = 0; iy < py; ++iy)
        for (int ix = 0; ix < lx_; ++ix) {
            ylink_slot_[ix + lx_ * iy] = static_cast<int>(links_.size());
            links_.push_back({1, ix, iy});
        }
}

int LatticeSpec::site(int ix, int iy) const {
    if (x_periodic()) {
        ix %= lx_;
        if (ix < 0) ix += lx_;
    } else if (ix < 0 || ix >= lx_) {
        throw std::out_of_range("x coordinate outside open boundary");
    }
    if (y_periodic()) {
        iy %= ly_;
        if (iy < 0) iy += ly_;
    } else if (iy < 0 || iy >= ly_) {
        throw std::out_of_range("y coordinate outside open boundary");
    }
    return ix + lx_ * iy;
}

bool LatticeSpec::plaquette_exists(int ix, int iy) const {
    if (ix < 0 || ix >= lx_ || iy < 0 || iy >= ly_) return false;
    return plaq_slot_[ix + lx_ * iy] >= 0;
}

int LatticeSpec::plaquette_slot(int ix, int iy) const {
    if (!plaquette_exists(ix, iy)) throw std::invalid_argument("no such plaquette");
    return plaq_slot_[ix + lx_ * iy];
}

std::array<int, 4> LatticeSpec::plaquette_sites(int ix, int iy) const {
    if (!plaquette_exists(ix, iy)) throw std::invalid_argument("no such plaquette");
    return {site(ix, iy), site(ix + 1, iy), site(ix + 1, iy + 1), site(ix, iy + 1)};
}

std::vector<int> LatticeSpec::edge_sites() const {
    std::vector<int> out;
    for (int iy = 0; iy < ly_; ++iy)
        for (int ix = 0; ix < lx_; ++ix) {
            const bool x_edge = !x_periodic() && (ix == 0 || ix == lx_ - 1);
            const bool y_edge = !y_periodic() && (iy == 0 || iy == ly_ - 1);
            if (x_edge || y_edge) out.push_back(ix + lx_ * iy);
        }
    return out;
}

int LatticeSpec::link_slot(int dir, int ix, int iy) const {
    const int i = site(ix, iy);
    const int slot = dir == 0 ? xlink_slot_[i] : ylink_slot_[i];
    if (slot < 0) throw std::invalid_argument("no such link");
    return slot;
}

std::array<int, 4> LatticeSpec::plaquette_link_slots(int ix, int iy) const {
    if (!plaquette_exists(ix, iy)) throw std::invalid_argument("no such plaquette");
    return {link_slot(0, ix, iy), link_slot(1, ix + 1, iy), link_slot(0, ix, iy + 1),
            link_slot(1, ix, iy)};
}

}  // namespace z2plaq
