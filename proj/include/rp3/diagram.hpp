#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rp3 {

using ArcId = long long;
using CrossingId = long long;

// Slots are listed counterclockwise starting at the incoming under-strand end;
// slots 0/2 carry the under strand, 1/3 the over strand.
struct Crossing {
    CrossingId id = 0;
    std::array<ArcId, 4> arcs{};
    bool operator==(const Crossing&) const = default;
};

// One end of an arc: a crossing slot or a boundary position.
struct End {
    enum Kind : int { Slot = 0, Boundary = 1 };
    Kind kind = Slot;
    long long where = 0;  // crossing id or boundary position
    int slot = 0;
    auto operator<=>(const End&) const = default;
};

// Orientation as the arriving end of every arc.
using Orientation = std::map<ArcId, End>;

struct Tangle {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::optional<Orientation> orientation;
    bool oriented() const { return orientation.has_value(); }
};

struct ProjectiveDiagram : Tangle {
    std::vector<ArcId> boundary;  // cyclic; position k is antipodal to k + n
};

struct VirtualDiagram : Tangle {
    int virtual_crossings = 0;  // display only
    // Boundary passages of each arc when produced by pi; feeds marked circles.
    std::map<ArcId, int> passages;
    int marked_loops = 0;  // free loops of odd passage count (subset of free_loops)
};

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat incidence view. Ends 0..4C-1 are crossing slots (4*index + slot),
// ends 4C..4C+B-1 are boundary positions.
struct Skeleton {
    int C = 0;
    int B = 0;
    std::vector<int> mate;
    std::vector<ArcId> arc;
    std::vector<char> in;  // orientation: arc arrives at this end

    int size() const { return 4 * C + B; }
    bool is_slot(int e) const { return e < 4 * C; }
    int through(int e) const {
        if (e < 4 * C) return (e & ~3) | ((e + 2) & 3);
        return 4 * C + (e - 4 * C + B / 2) % B;
    }
    End ref(int e, const Tangle& t) const {
        if (e < 4 * C) return {End::Slot, t.crossings[e / 4].id, e % 4};
        return {End::Boundary, e - 4 * C, 0};
    }
};

Skeleton skeleton(const Tangle& t, const std::vector<ArcId>& boundary = {});
Skeleton skeleton(const ProjectiveDiagram& d);

std::vector<std::string> validate(const ProjectiveDiagram& d);
std::vector<std::string> validate(const VirtualDiagram& d);

int homotopy_class(const ProjectiveDiagram& d);

// Components of the incidence structure as cyclic end sequences; each entry
// alternates (arrival end, departure end). Free loops are not included.
std::vector<std::vector<int>> components(const Skeleton& s);
int component_count(const ProjectiveDiagram& d);
int component_count(const VirtualDiagram& d);

// Keeps an existing orientation; otherwise the lowest arc id of each
// component is directed toward its smaller end.
ProjectiveDiagram orient(ProjectiveDiagram d);
VirtualDiagram orient(VirtualDiagram d);
ProjectiveDiagram default_orientation(ProjectiveDiagram d);
VirtualDiagram default_orientation(VirtualDiagram d);

// Reverses the direction of every arc in the component containing `arc`.
void reverse_component(Tangle& t, const std::vector<ArcId>& boundary, ArcId arc);

std::vector<int> crossing_signs(const Tangle& t, const std::vector<ArcId>& boundary = {});
int writhe(const VirtualDiagram& d);
int seifert_circuit_count(const VirtualDiagram& d);

// Relabelling-invariant code; equal codes mean isomorphic diagrams.
std::string canonical_code(const VirtualDiagram& d, bool with_orientation = false);

// Orients `neu` to agree with `old`: each component is anchored at an arc
// that survives with one end mapped by `endmap`; unanchored components get
// the default orientation.
using EndMap = std::function<std::optional<End>(const End&)>;
void transport_orientation(const Tangle& old, const std::vector<ArcId>& old_boundary, Tangle& neu,
                           const std::vector<ArcId>& new_boundary, const EndMap& endmap = {});

ArcId max_arc_id(const Tangle& t, const std::vector<ArcId>& boundary = {});
CrossingId max_crossing_id(const Tangle& t);

}  // namespace rp3
