#pragma once

#include <string>
#include <vector>

#include "z2plaq/lattice.hpp"

namespace z2plaq {

struct RunCheck {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct RunReport {
    std::vector<RunCheck> checks;

    bool all_pass() const;
    RunCheck& add(const std::string& name, double residual, double tolerance);
};

// Combinatorial spectrum against the dense ED oracle (multiset equality,
// state count, ground energy/degeneracy, gap). Needs N_s <= 14.
RunReport verify_ed(const LatticeSpec& lat, double g, double tol);

// Projective construction for the ground flux sector of the given coupling:
// walks the Wilson classes of the sector, projects the even-parity
// mean-field ground states, and checks them against the ED ground space.
// Torus with N_s <= 6, g != 0.
RunReport verify_projective(const LatticeSpec& lat, double g);

// Z2A / Z2B classification of the two ground ansaetze on an lx x ly torus
// (even dimensions), IGG content, time reversal, ansatz/link-field
// correspondence, and the P_xy gauge search.
RunReport verify_psg(int lx, int ly);

}  // namespace z2plaq
