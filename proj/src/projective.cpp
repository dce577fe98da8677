#include "rp3/projective.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace rp3 {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int interleaved_chord_pairs(int boundary_length) {
    const int n = boundary_length / 2;
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto inside = [&](int x) { return x > i && x < i + n; };
            if (inside(j) != inside(j + n)) ++count;
        }
    return count;
}

VirtualDiagram pi(const ProjectiveDiagram& d) {
    Skeleton s = skeleton(d);
    const int n = s.B / 2;
    std::unordered_map<ArcId, int> idx;
    std::vector<ArcId> ids;
    for (int e = 0; e < s.size(); ++e)
        if (idx.try_emplace(s.arc[e], static_cast<int>(ids.size())).second) ids.push_back(s.arc[e]);
    UnionFind uf(static_cast<int>(ids.size()));
    for (int k = 0; k < n; ++k) uf.join(idx[d.boundary[k]], idx[d.boundary[k + n]]);

    const int m = static_cast<int>(ids.size());
    std::vector<ArcId> name(m, 0);
    std::vector<int> slots(m, 0), pairs(m, 0);
    std::vector<char> named(m, 0);
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (!named[r] || ids[i] < name[r]) name[r] = ids[i];
        named[r] = 1;
    }
    for (int e = 0; e < 4 * s.C; ++e) ++slots[uf.find(idx[s.arc[e]])];
    for (int k = 0; k < n; ++k) ++pairs[uf.find(idx[d.boundary[k]])];

    VirtualDiagram v;
    v.free_loops = d.free_loops;
    v.virtual_crossings = interleaved_chord_pairs(s.B);
    for (int r = 0; r < m; ++r) {
        if (uf.find(r) != r) continue;
        if (slots[r] == 0) {
            ++v.free_loops;
            if (pairs[r] % 2) ++v.marked_loops;
        } else {
            v.passages[name[r]] = pairs[r];
        }
    }
    for (const auto& c : d.crossings) {
        Crossing x{c.id, {}};
        for (int k = 0; k < 4; ++k) x.arcs[k] = name[uf.find(idx[c.arcs[k]])];
        v.crossings.push_back(x);
    }
    if (d.orientation) {
        Orientation o;
        for (int e = 0; e < 4 * s.C; ++e)
            if (s.in[e]) o[name[uf.find(idx[s.arc[e]])]] = s.ref(e, d);
        v.orientation = std::move(o);
    }
    return v;
}

std::vector<SlideSite> slide_sites(const ProjectiveDiagram& d, SlideKind kind, bool inverse) {
    std::vector<SlideSite> out;
    const int B = static_cast<int>(d.boundary.size());
    const int n = B / 2;
    if (kind == SlideKind::I && !inverse) {
        std::vector<ArcId> arcs;
        for (const auto& c : d.crossings) arcs.insert(arcs.end(), c.arcs.begin(), c.arcs.end());
        arcs.insert(arcs.end(), d.boundary.begin(), d.boundary.end());
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        for (ArcId a : arcs)
            for (int g = 0; g <= n; ++g) out.push_back({SlideKind::I, false, a, 0, 0, g, 0});
        return out;
    }
    if (kind == SlideKind::I) {
        if (n < 2) return out;
        for (int j = 0; j < B; ++j)
            if (d.boundary[j] == d.boundary[(j + 1) % B]) out.push_back({SlideKind::I, true, 0, 0, 0, j, 0});
        return out;
    }
    if (n < 2) return out;
    Skeleton s = skeleton(d);
    for (int i = 0; i < s.C; ++i)
        for (int s1 = 0; s1 < 4; ++s1) {
            int ex = s.mate[4 * i + s1], ey = s.mate[4 * i + (s1 + 1) % 4];
            if (s.is_slot(ex) || s.is_slot(ey)) continue;
            int k = ex - 4 * s.C, k1 = ey - 4 * s.C;
            if (k1 != (k + 1) % B) continue;
            out.push_back({SlideKind::II, inverse, 0, i, s1, k, 0});
        }
    return out;
}

namespace {

ProjectiveDiagram slide_one_apply(const ProjectiveDiagram& d, const SlideSite& st) {
    const int B = static_cast<int>(d.boundary.size());
    const int n = B / 2;
    const int g = st.position;
    if (g < 0 || g > n) throw DiagramError("slide I: gap out of range");
    ProjectiveDiagram bare = d;
    bare.orientation.reset();
    Skeleton s = skeleton(bare);
    std::vector<int> ends;
    for (int e = 0; e < s.size(); ++e)
        if (s.arc[e] == st.arc) ends.push_back(e);
    if (ends.size() != 2) throw DiagramError("slide I: unknown arc " + std::to_string(st.arc));
    if (s.ref(ends[1], d) < s.ref(ends[0], d)) std::swap(ends[0], ends[1]);
    if (st.variant) std::swap(ends[0], ends[1]);
    const int e2 = ends[1];

    const ArcId top = max_arc_id(d, d.boundary);
    const ArcId a2 = top + 1, mid = top + 2;
    auto newpos = [&](int p) {
        if (p < g) return p;
        if (p < n + g) return p + 2;
        return p + 4;
    };
    ProjectiveDiagram r = d;
    r.orientation.reset();
    r.boundary.assign(B + 4, 0);
    for (int p = 0; p < B; ++p) r.boundary[newpos(p)] = d.boundary[p];
    r.boundary[g] = st.arc;
    r.boundary[g + 1] = a2;
    r.boundary[n + g + 2] = mid;
    r.boundary[n + g + 3] = mid;
    if (s.is_slot(e2))
        r.crossings[e2 / 4].arcs[e2 % 4] = a2;
    else
        r.boundary[newpos(e2 - 4 * s.C)] = a2;
    transport_orientation(d, d.boundary, r, r.boundary, [&](const End& x) -> std::optional<End> {
        if (x.kind == End::Slot) return x;
        return End{End::Boundary, newpos(static_cast<int>(x.where)), 0};
    });
    return r;
}

ProjectiveDiagram slide_one_inverse(const ProjectiveDiagram& d, const SlideSite& st) {
    const int B = static_cast<int>(d.boundary.size());
    const int n = B / 2;
    const int j = st.position, j1 = (j + 1) % B;
    if (n < 2 || j < 0 || j >= B || d.boundary[j] != d.boundary[j1])
        throw DiagramError("slide I inverse: no boundary cap at position " + std::to_string(j));
    const int jn = (j + n) % B, j1n = (j1 + n) % B;
    const ArcId a1 = d.boundary[jn], a2 = d.boundary[j1n];
    std::vector<int> newpos(B, -1);
    ProjectiveDiagram r = d;
    r.orientation.reset();
    r.boundary.clear();
    for (int p = 0; p < B; ++p) {
        if (p == j || p == j1 || p == jn || p == j1n) continue;
        newpos[p] = static_cast<int>(r.boundary.size());
        r.boundary.push_back(d.boundary[p]);
    }
    if (a1 == a2) {
        ++r.free_loops;
    } else {
        for (auto& c : r.crossings)
            for (auto& a : c.arcs)
                if (a == a2) a = a1;
        for (auto& a : r.boundary)
            if (a == a2) a = a1;
    }
    transport_orientation(d, d.boundary, r, r.boundary, [&](const End& x) -> std::optional<End> {
        if (x.kind == End::Slot) return x;
        int p = newpos[x.where];
        if (p < 0) return std::nullopt;
        return End{End::Boundary, p, 0};
    });
    return r;
}

ProjectiveDiagram slide_two(const ProjectiveDiagram& d, const SlideSite& st) {
    const int B = static_cast<int>(d.boundary.size());
    const int n = B / 2;
    auto sites = slide_sites(d, SlideKind::II, st.inverse);
    bool ok = std::any_of(sites.begin(), sites.end(), [&](const SlideSite& x) {
        return x.crossing == st.crossing && x.slot == st.slot && x.position == st.position;
    });
    if (!ok) throw DiagramError("slide II: site does not match");
    const Crossing X = d.crossings[st.crossing];
    const int s1 = st.slot;
    const int k = st.position, k1 = (k + 1) % B, kn = (k + n) % B, k1n = (k1 + n) % B;
    const ArcId u = X.arcs[(s1 + 2) % 4], v = X.arcs[(s1 + 3) % 4];
    const ArcId xp = d.boundary[kn], yp = d.boundary[k1n];
    const ArcId top = max_arc_id(d, d.boundary);
    const ArcId p = top + 1, q = top + 2;

    ProjectiveDiagram r = d;
    r.orientation.reset();
    r.boundary[k] = v;
    r.boundary[k1] = u;
    r.boundary[kn] = p;
    r.boundary[k1n] = q;
    // the crossing reappears mirrored with over and under exchanged
    Crossing Y{X.id, {}};
    int slot_xp, slot_yp;
    if (s1 % 2 == 0) {
        Y.arcs = {yp, xp, p, q};
        slot_yp = 0;
        slot_xp = 1;
    } else {
        Y.arcs = {xp, p, q, yp};
        slot_xp = 0;
        slot_yp = 3;
    }
    r.crossings[st.crossing] = Y;
    const End su{End::Slot, X.id, (s1 + 2) % 4}, sv{End::Slot, X.id, (s1 + 3) % 4};
    transport_orientation(d, d.boundary, r, r.boundary, [&](const End& x) -> std::optional<End> {
        if (x == su) return End{End::Boundary, k1, 0};
        if (x == sv) return End{End::Boundary, k, 0};
        if (x.kind == End::Slot) {
            if (x.where == X.id) return std::nullopt;
            return x;
        }
        if (x.where == kn) return End{End::Slot, X.id, slot_xp};
        if (x.where == k1n) return End{End::Slot, X.id, slot_yp};
        if (x.where == k || x.where == k1) return std::nullopt;
        return x;
    });
    return r;
}

}  // namespace

ProjectiveDiagram slide_move(const ProjectiveDiagram& d, const SlideSite& site) {
    if (site.kind == SlideKind::I) return site.inverse ? slide_one_inverse(d, site) : slide_one_apply(d, site);
    return slide_two(d, site);
}

VirtualDiagram double_cover(const ProjectiveDiagram& d) {
    Skeleton s = skeleton(d);
    const int B = s.B, n = B / 2;
    std::unordered_map<ArcId, int> idx;
    std::vector<ArcId> ids;
    for (int e = 0; e < s.size(); ++e)
        if (idx.try_emplace(s.arc[e], static_cast<int>(ids.size())).second) ids.push_back(s.arc[e]);
    const int m = static_cast<int>(ids.size());
    auto node = [&](ArcId a, int copy) { return 2 * idx[a] + copy; };
    UnionFind uf(2 * m);
    for (int k = 0; k < B; ++k) uf.join(node(d.boundary[k], 0), node(d.boundary[(k + n) % B], 1));
    std::vector<int> slots(2 * m, 0), lowest(2 * m, -1);
    for (int x = 0; x < 2 * m; ++x) {
        int r = uf.find(x);
        if (lowest[r] < 0 || x < lowest[r]) lowest[r] = x;
    }
    for (const auto& c : d.crossings)
        for (ArcId a : c.arcs)
            for (int copy : {0, 1}) ++slots[uf.find(node(a, copy))];
    auto name = [&](ArcId a, int copy) -> ArcId { return lowest[uf.find(node(a, copy))]; };

    VirtualDiagram v;
    v.free_loops = 2 * d.free_loops;
    for (int x = 0; x < 2 * m; ++x)
        if (uf.find(x) == x && slots[x] == 0) ++v.free_loops;
    for (const auto& c : d.crossings) {
        v.crossings.push_back({2 * c.id, {name(c.arcs[0], 0), name(c.arcs[1], 0), name(c.arcs[2], 0), name(c.arcs[3], 0)}});
    }
    for (const auto& c : d.crossings) {
        v.crossings.push_back(
            {2 * c.id + 1, {name(c.arcs[3], 1), name(c.arcs[2], 1), name(c.arcs[1], 1), name(c.arcs[0], 1)}});
    }
    if (d.orientation) {
        Orientation o;
        for (int e = 0; e < 4 * s.C; ++e) {
            if (!s.in[e]) continue;
            const CrossingId id = d.crossings[e / 4].id;
            o[name(s.arc[e], 0)] = End{End::Slot, 2 * id, e % 4};
            o[name(s.arc[e], 1)] = End{End::Slot, 2 * id + 1, 3 - e % 4};
        }
        v.orientation = std::move(o);
    }
    return v;
}

int lift_linking_number(const ProjectiveDiagram& d) {
    if (homotopy_class(d) != 0) throw NotApplicable("class-1 diagram: the lift is connected");
    if (component_count(d) != 1) throw NotApplicable("linking number of the lift needs a knot");
    VirtualDiagram cover = double_cover(orient(d));
    Skeleton s = skeleton(cover);
    auto comps = components(s);
    if (comps.size() + cover.free_loops != 2) throw NotApplicable("lift does not have two components");
    std::vector<int> comp_of(s.size(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int e : comps[c]) comp_of[e] = static_cast<int>(c);
    auto sg = crossing_signs(cover);
    int total = 0;
    for (int i = 0; i < s.C; ++i)
        if (comp_of[4 * i] != comp_of[4 * i + 1]) total += sg[i];
    return total / 2;
}

}  // namespace rp3
