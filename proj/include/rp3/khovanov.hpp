#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rp3/diagram.hpp"
#include "rp3/linalg.hpp"

namespace rp3 {

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Under-strand half-edges point into the crossing, over-strand half-edges
// point out. An arc whose two half-edges both point in, or both out, carries
// a cut point.
struct SourceSink {
    std::vector<std::array<bool, 4>> in;  // per crossing, per slot
    std::vector<ArcId> cut_arcs;          // sorted
};
SourceSink source_sink_decoration(const VirtualDiagram& d);

enum class Bifurcation { Merge, Split, Eta };  // 2->1, 1->2, 1->1

struct StateCircle {
    std::vector<ArcId> arcs;  // sorted; empty for a crossing-free loop
    ArcId key = 0;            // least arc id (identifies the circle across states)
    int base_end = -1;        // slot end where the base point sits
    int cut_points = 0;
    bool marked = false;      // odd number of boundary passages
};

struct CubeState {
    std::vector<StateCircle> circles;  // in numbering order
    std::vector<int> circle_of_end;    // slot end -> circle index
    std::vector<char> parity;          // slot end -> cut points passed since the base point
};

struct CubeOptions {
    // Nonzero seeds replace the deterministic choices (least arc id for base
    // points and circle numbering) by pseudo-random ones.
    std::uint64_t base_seed = 0;
    std::uint64_t numbering_seed = 0;
};

struct ResolutionCube {
    int C = 0;
    int n_plus = 0;
    int n_minus = 0;
    std::vector<CubeState> states;  // indexed by smoothing word; bit i set = B at crossing i
    Bifurcation bifurcation(unsigned v, int i) const;
    int max_marked_per_state() const;
};

ResolutionCube build_cube(const VirtualDiagram& d, const CubeOptions& opt = {});

struct BettiTable {
    std::map<std::pair<int, int>, int> dims;  // (i, j) -> dimension
    bool operator==(const BettiTable&) const = default;
    int total() const;
    std::string rows() const;  // "i j dim" lines
    std::string grid() const;
};

// Bigraded complex. Generators of homological degree r (= number of B
// smoothings) carry quantum degrees; d[r] maps degree r to r + 1 with integer
// entries.
struct ChainComplex {
    int n_plus = 0, n_minus = 0;
    std::vector<std::vector<int>> qdeg;
    // d[r][col] = (row, value) entries of the column
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> d;
    std::vector<std::vector<char>> marked;  // generator lives on a state with a marked circle
};

struct ComplexOptions {
    bool lee = false;
    CubeOptions cube;
};

ChainComplex build_complex(const ResolutionCube& cube, bool lee);
// Exhaustive exact check of d o d = 0.
bool d_squared_zero(const ChainComplex& c);

BettiTable homology(const ChainComplex& c, int threads = 1);

// Unoriented inputs receive the default orientation. Throws std::logic_error
// if d o d != 0 (a sign-rule defect, never expected).
BettiTable khovanov_betti(const VirtualDiagram& d, const ComplexOptions& opt = {}, int threads = 1);
BettiTable khovanov_betti(const ProjectiveDiagram& d, const ComplexOptions& opt = {}, int threads = 1);

struct MarkedBetti {
    BettiTable table;
    int max_marked_per_state = 0;
    std::map<std::pair<int, int>, int> marked_generators;  // chain-level count per bidegree
};
MarkedBetti marked_betti(const ProjectiveDiagram& d, int threads = 1);

struct LeeResult {
    int total = 0;
    std::map<int, int> by_degree;  // homological degree -> dimension
    // Degree-0 filtration: (k, dim of classes representable in quantum filtration >= k)
    std::vector<std::pair<int, int>> filtration;
};
LeeResult lee_homology(const VirtualDiagram& d, int threads = 1);
LeeResult lee_homology(const ProjectiveDiagram& d, int threads = 1);

// s = (s_min + s_max) / 2 from the degree-0 Lee filtration. Throws
// Unsupported when the Lee complex fails d o d = 0 or the homology is not
// two-dimensional; throws DiagramError for links.
int rasmussen_s(const VirtualDiagram& d, int threads = 1);
int rasmussen_s(const ProjectiveDiagram& d, int threads = 1);

}  // namespace rp3
