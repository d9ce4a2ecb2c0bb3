#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace z2plaq {

enum class Boundary { torus, cylinder_x, cylinder_y, open };

std::string to_string(Boundary bc);
Boundary boundary_from_string(const std::string& name);

// Square lattice with row-major site indexing i = ix + lx*iy.
// Plaquettes are labelled by their base (lower-left) site and exist iff all
// four corners exist under the boundary rule. Canonical directed links point
// in +x / +y; reversed links are handled by the consumers via antisymmetry.
class LatticeSpec {
public:
    LatticeSpec(int lx, int ly, Boundary bc);

    int lx() const { return lx_; }
    int ly() const { return ly_; }
    Boundary boundary() const { return bc_; }

    int n_sites() const { return lx_ * ly_; }
    bool x_periodic() const { return bc_ == Boundary::torus || bc_ == Boundary::cylinder_x; }
    bool y_periodic() const { return bc_ == Boundary::torus || bc_ == Boundary::cylinder_y; }

    // Wraps periodic directions; coordinates must be within range on open ones.
    int site(int ix, int iy) const;
    int site_x(int i) const { return i % lx_; }
    int site_y(int i) const { return i / lx_; }

    bool plaquette_exists(int ix, int iy) const;
    // Base coordinates of all plaquettes, iy-major then ix (fixed enumeration
    // order used by FluxConfig and the flux solver).
    const std::vector<std::array<int, 2>>& plaquette_bases() const { return plaq_bases_; }
    int n_plaquettes() const { return static_cast<int>(plaq_bases_.size()); }
    int plaquette_slot(int ix, int iy) const;  // index into plaquette_bases()

    // Corner sites (i, i+x, i+x+y, i+y) with wrap-around. Throws if the
    // plaquette does not exist.
    std::array<int, 4> plaquette_sites(int ix, int iy) const;

    std::vector<int> edge_sites() const;
    int n_edge() const { return static_cast<int>(edge_sites().size()); }

    // Canonical directed links. dir 0 = +x, dir 1 = +y.
    struct Link {
        int dir;
        int ix, iy;  // base site coordinates
    };
    const std::vector<Link>& links() const { return links_; }
    int n_links() const { return static_cast<int>(links_.size()); }
    int link_slot(int dir, int ix, int iy) const;
    // The four boundary links of a plaquette: bottom x, right y, top x, left y.
    std::array<int, 4> plaquette_link_slots(int ix, int iy) const;

    bool operator==(const LatticeSpec& o) const {
        return lx_ == o.lx_ && ly_ == o.ly_ && bc_ == o.bc_;
    }

private:
    int lx_, ly_;
    Boundary bc_;
    std::vector<std::array<int, 2>> plaq_bases_;
    std::vector<int> plaq_slot_;  // per base site, -1 if absent
    std::vector<Link> links_;
    std::vector<int> xlink_slot_, ylink_slot_;  // per base site, -1 if absent
};

}  // namespace z2plaq
