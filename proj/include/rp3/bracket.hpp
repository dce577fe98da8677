#pragma once

#include <optional>

#include "rp3/diagram.hpp"
#include "rp3/laurent.hpp"

namespace rp3 {

// Sum over smoothing words of A^(#A - #B) d^(#loops), d = -A^2 - A^-2.
// A-smoothing joins slots (0,1),(2,3); B-smoothing joins (0,3),(1,2).
Laurent kauffman_bracket(const VirtualDiagram& d, int threads = 1);

// (-A^3)^(-w) <K> / d. Requires an oriented diagram.
Laurent normalized_bracket(const VirtualDiagram& d, int threads = 1);

Laurent f_projective(const ProjectiveDiagram& d, int threads = 1);

// Witness exponent not divisible by 4: the one closest to zero, the negative
// one on ties. A witness proves the knot is not affine; none proves nothing.
std::optional<int> non_affine_obstruction(const Laurent& p);

struct GenusReport {
    int crossings = 0;
    int seifert_circuits = 0;
    bool positive = false;
    // (C + 1 - S) / 2 as a numerator over 2
    int twice_genus() const { return crossings + 1 - seifert_circuits; }
};

GenusReport seifert_genus_data(const VirtualDiagram& d);
// Throws DiagramError unless every crossing is positive.
GenusReport positive_seifert_genus(const VirtualDiagram& d);

}  // namespace rp3
