#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rp3/diagram.hpp"

namespace rp3 {

enum class MoveKind { R1, R2, R3, vR1, vR2, vR3, mixed, detour, flype, slideI, slideII };

const std::vector<MoveKind>& virtual_move_kinds();
const std::vector<MoveKind>& projective_move_kinds();
std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// Loci are lists of ids whose meaning depends on the kind:
//   R1 apply: {arc} or {} for a free loop      R1 inverse: {crossing, loop slot}
//   R2 apply: {arc, arc}                       R2 inverse: {crossing, crossing, under arc, over arc}
//   R3: {three crossings, three side arcs}     flype: {crossing}
//   detour: {shift}                            vR1/vR2/vR3/mixed: {}
//   slideI/slideII: {arc, crossing index, slot, position}
struct MoveSite {
    std::vector<long long> loc;
    bool operator==(const MoveSite&) const = default;
};

struct MoveSpec {
    MoveKind kind = MoveKind::R1;
    bool inverse = false;
    MoveSite site;
    int variant = 0;
    bool operator==(const MoveSpec&) const = default;
    // "kind site direction", site written as comma-separated ids with an
    // optional /variant suffix.
    std::string str() const;
    static MoveSpec parse(const std::string& line);
};

// Number of shape variants a site admits for the given move.
int variant_count(MoveKind kind, bool inverse);

std::vector<MoveSite> enumerate_sites(const VirtualDiagram& d, MoveKind kind, bool inverse);
std::vector<MoveSite> enumerate_sites(const ProjectiveDiagram& d, MoveKind kind, bool inverse);

// Throws DiagramError when the site is stale or does not match the pattern.
VirtualDiagram apply_move(const VirtualDiagram& d, const MoveSpec& m);
ProjectiveDiagram apply_move(const ProjectiveDiagram& d, const MoveSpec& m);

struct WalkOptions {
    int crossing_cap_margin = 3;   // cap = input crossings + margin
    std::vector<MoveKind> kinds;   // empty: every kind valid for the diagram type
};

template <class D>
struct Walk {
    D diagram;
    std::vector<MoveSpec> trace;
};

Walk<VirtualDiagram> random_walk(const VirtualDiagram& d, int steps, std::uint64_t seed, const WalkOptions& opt = {});
Walk<ProjectiveDiagram> random_walk(const ProjectiveDiagram& d, int steps, std::uint64_t seed,
                                    const WalkOptions& opt = {});

// A single move (or none, when the Gauss data already agree) carrying a to b.
std::optional<MoveSpec> related_by_single_move(const VirtualDiagram& a, const VirtualDiagram& b);

}  // namespace rp3
