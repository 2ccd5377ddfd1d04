#pragma once

#include <vector>

#include "slicesieve/gf2poly.hpp"

namespace slicesieve {

// Finitely generated torsion module over F_2[t], described by its Smith
// invariant factors (nonunit, each dividing the next).
struct GF2ModuleStructure {
    std::vector<GF2Poly> invariant_factors;
    bool cyclic = false;     // at most one invariant factor
    long f2_dimension = 0;   // sum of the factor degrees
    bool iso_to_vp = false;  // exactly one factor, equal to 1 + t + ... + t^{p-1}

    bool operator==(const GF2ModuleStructure& o) const {
        return invariant_factors == o.invariant_factors;
    }
};

// Cokernel of the row span: the module F_2[t]^cols / <rows>. Throws when the
// quotient is not torsion (every use here adjoins annihilator rows).
GF2ModuleStructure gf2t_module_reduce(std::vector<std::vector<GF2Poly>> rows, long p);

}  // namespace slicesieve
