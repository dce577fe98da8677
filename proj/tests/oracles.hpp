#pragma once

// Reference computations that share no code with the library beyond the
// diagram data types. They favour plainness over speed.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rp3/diagram.hpp"

namespace oracle {

using Poly = std::map<int, long long>;  // exponent of A -> coefficient, no zeros

std::string poly_str(const Poly& p);

// Signed Gauss code: one cyclic list of passages per component.
struct Passage {
    int crossing = 0;  // index into the diagram's crossing list
    bool over = false;
};
struct GaussCode {
    std::vector<std::vector<Passage>> components;
    std::vector<int> sign;  // per crossing
    int free_loops = 0;
};

// Follows strands through crossings, directing each component by the
// diagram's stored orientation when present and otherwise by the under
// strand (slot 0 is its incoming end).
GaussCode gauss_code(const rp3::VirtualDiagram& d);

// Bracket and normalized bracket from the Gauss code alone. Positive
// crossings take A on the oriented smoothing, negative ones on the
// unoriented smoothing.
Poly bracket(const GaussCode& g);
Poly normalized(const GaussCode& g);

using Betti = std::map<std::pair<int, int>, int>;

// Textbook Khovanov homology of a planar diagram over Q: circles from the
// slot pairings, standard cube signs, dense elimination.
Betti classical_khovanov(const rp3::VirtualDiagram& d);

// Planar closure of a braid word on n strands (+i: strand i over i+1).
rp3::VirtualDiagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace oracle
