#pragma once

#include <vector>

#include "rp3/diagram.hpp"

namespace rp3 {

// Glue boundary position k to k+n and fuse the incident arcs. Fused arcs keep
// the smallest id among their pieces.
VirtualDiagram pi(const ProjectiveDiagram& d);

// Chord pairs {k,k+n}, {l,l+n} whose endpoints alternate around the circle.
int interleaved_chord_pairs(int boundary_length);

enum class SlideKind { I, II };

struct SlideSite {
    SlideKind kind = SlideKind::I;
    bool inverse = false;
    // I apply: arc + gap (0..n, insertion point within the first half) + variant 0/1.
    // I inverse: position of the first of two adjacent positions holding one arc.
    // II: crossing index + slot (first of two adjacent slots) + boundary position.
    ArcId arc = 0;
    int crossing = 0;
    int slot = 0;
    int position = 0;
    int variant = 0;
};

std::vector<SlideSite> slide_sites(const ProjectiveDiagram& d, SlideKind kind, bool inverse);
// Throws DiagramError when the site does not admit the move.
ProjectiveDiagram slide_move(const ProjectiveDiagram& d, const SlideSite& site);

// Canonical double cover: copy 0 and a mirrored copy 1 with over/under
// exchanged so crossing signs agree; boundary k of one copy meets k+n of
// the other.
VirtualDiagram double_cover(const ProjectiveDiagram& d);

struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int lift_linking_number(const ProjectiveDiagram& d);

}  // namespace rp3
