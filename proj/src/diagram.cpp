#include "rp3/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rp3 {

namespace {

std::vector<std::string> arc_count_violations(const Tangle& t, const std::vector<ArcId>& boundary) {
    std::map<ArcId, int> count;
    for (const auto& c : t.crossings)
        for (ArcId a : c.arcs) ++count[a];
    for (ArcId a : boundary) ++count[a];
    std::vector<std::string> out;
    for (const auto& [a, n] : count)
        if (n != 2) out.push_back("arc " + std::to_string(a) + " has " + std::to_string(n) + " ends");
    return out;
}

}  // namespace

Skeleton skeleton(const Tangle& t, const std::vector<ArcId>& boundary) {
    Skeleton s;
    s.C = static_cast<int>(t.crossings.size());
    s.B = static_cast<int>(boundary.size());
    if (s.B % 2) throw DiagramError("odd boundary length");
    s.mate.assign(s.size(), -1);
    s.arc.resize(s.size());
    std::unordered_map<ArcId, int> first;
    auto add = [&](int e, ArcId a) {
        s.arc[e] = a;
        auto [it, fresh] = first.try_emplace(a, e);
        if (fresh) return;
        if (it->second < 0) throw DiagramError("arc " + std::to_string(a) + " has more than 2 ends");
        s.mate[e] = it->second;
        s.mate[it->second] = e;
        it->second = -1;
    };
    for (int i = 0; i < s.C; ++i)
        for (int k = 0; k < 4; ++k) add(4 * i + k, t.crossings[i].arcs[k]);
    for (int k = 0; k < s.B; ++k) add(4 * s.C + k, boundary[k]);
    for (const auto& [a, e] : first)
        if (e >= 0) throw DiagramError("arc " + std::to_string(a) + " has a single end");
    if (t.orientation) {
        s.in.assign(s.size(), 0);
        for (int e = 0; e < s.size(); ++e) {
            auto it = t.orientation->find(s.arc[e]);
            if (it == t.orientation->end())
                throw DiagramError("arc " + std::to_string(s.arc[e]) + " has no orientation");
            s.in[e] = it->second == s.ref(e, t);
        }
    }
    return s;
}

Skeleton skeleton(const ProjectiveDiagram& d) { return skeleton(d, d.boundary); }

namespace {

std::vector<std::string> common_violations(const Tangle& t, const std::vector<ArcId>& boundary) {
    std::vector<std::string> out;
    if (boundary.size() % 2) out.push_back("boundary length " + std::to_string(boundary.size()) + " is odd");
    std::set<CrossingId> ids;
    for (const auto& c : t.crossings)
        if (!ids.insert(c.id).second) out.push_back("duplicate crossing id " + std::to_string(c.id));
    if (t.free_loops < 0) out.push_back("negative loop count");
    auto arcs = arc_count_violations(t, boundary);
    out.insert(out.end(), arcs.begin(), arcs.end());
    if (!out.empty() || !t.orientation) return out;

    Tangle bare = t;
    bare.orientation.reset();
    Skeleton s = skeleton(bare, boundary);
    std::map<ArcId, std::vector<End>> ends;
    for (int e = 0; e < s.size(); ++e) ends[s.arc[e]].push_back(s.ref(e, t));
    for (const auto& [a, es] : ends) {
        auto it = t.orientation->find(a);
        if (it == t.orientation->end()) {
            out.push_back("arc " + std::to_string(a) + " is not oriented");
        } else if (it->second != es[0] && it->second != es[1]) {
            out.push_back("orientation of arc " + std::to_string(a) + " names a foreign end");
        }
    }
    for (const auto& [a, e] : *t.orientation)
        if (!ends.count(a)) out.push_back("orientation given for unknown arc " + std::to_string(a));
    if (!out.empty()) return out;
    s = skeleton(t, boundary);
    for (int i = 0; i < s.C; ++i)
        for (int k = 0; k < 2; ++k)
            if (s.in[4 * i + k] == s.in[4 * i + k + 2])
                out.push_back("crossing " + std::to_string(t.crossings[i].id) + " has an inconsistently oriented strand");
    for (int k = 0; k < s.B / 2; ++k)
        if (s.in[4 * s.C + k] == s.in[4 * s.C + k + s.B / 2])
            out.push_back("boundary positions " + std::to_string(k) + " and " + std::to_string(k + s.B / 2) +
                          " are inconsistently oriented");
    return out;
}

}  // namespace

std::vector<std::string> validate(const ProjectiveDiagram& d) { return common_violations(d, d.boundary); }

std::vector<std::string> validate(const VirtualDiagram& d) {
    auto out = common_violations(d, {});
    if (d.virtual_crossings < 0) out.push_back("negative virtual crossing count");
    if (d.marked_loops < 0 || d.marked_loops > d.free_loops) out.push_back("marked loop count out of range");
    return out;
}

int homotopy_class(const ProjectiveDiagram& d) { return static_cast<int>(d.boundary.size() / 2) % 2; }

std::vector<std::vector<int>> components(const Skeleton& s) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(s.size(), 0);
    for (int e0 = 0; e0 < s.size(); ++e0) {
        if (seen[e0]) continue;
        int start = e0;
        if (!s.in.empty() && !s.in[e0]) start = s.mate[e0];
        std::vector<int> comp;
        int e = start;
        do {
            int f = s.through(e);
            seen[e] = seen[f] = 1;
            comp.push_back(e);
            comp.push_back(f);
            e = s.mate[f];
        } while (e != start);
        out.push_back(std::move(comp));
    }
    return out;
}

int component_count(const ProjectiveDiagram& d) {
    ProjectiveDiagram bare = d;
    bare.orientation.reset();
    return static_cast<int>(components(skeleton(bare)).size()) + d.free_loops;
}

int component_count(const VirtualDiagram& d) {
    Tangle bare = d;
    bare.orientation.reset();
    return static_cast<int>(components(skeleton(bare)).size()) + d.free_loops;
}

namespace {

Orientation default_heads(const Tangle& t, const std::vector<ArcId>& boundary) {
    Tangle bare = t;
    bare.orientation.reset();
    Skeleton s = skeleton(bare, boundary);
    Orientation o;
    for (const auto& comp : components(s)) {
        // lowest arc of the component, directed toward its smaller end
        int best = -1;
        for (int e : comp) {
            if (best < 0 || s.arc[e] < s.arc[best] ||
                (s.arc[e] == s.arc[best] && s.ref(e, t) < s.ref(best, t)))
                best = e;
        }
        int e = best;
        do {
            o[s.arc[e]] = s.ref(e, t);
            e = s.mate[s.through(e)];
        } while (e != best);
    }
    return o;
}

}  // namespace

ProjectiveDiagram default_orientation(ProjectiveDiagram d) {
    d.orientation = default_heads(d, d.boundary);
    return d;
}

VirtualDiagram default_orientation(VirtualDiagram d) {
    d.orientation = default_heads(d, {});
    return d;
}

ProjectiveDiagram orient(ProjectiveDiagram d) {
    return d.orientation ? d : default_orientation(std::move(d));
}

VirtualDiagram orient(VirtualDiagram d) { return d.orientation ? d : default_orientation(std::move(d)); }

void reverse_component(Tangle& t, const std::vector<ArcId>& boundary, ArcId arc) {
    if (!t.orientation) throw DiagramError("diagram is not oriented");
    Skeleton s = skeleton(t, boundary);
    for (const auto& comp : components(s)) {
        bool hit = std::any_of(comp.begin(), comp.end(), [&](int e) { return s.arc[e] == arc; });
        if (!hit) continue;
        // even offsets are arrival ends, so the departure ends become the heads
        for (size_t k = 1; k < comp.size(); k += 2) (*t.orientation)[s.arc[comp[k]]] = s.ref(comp[k], t);
        return;
    }
    throw DiagramError("arc " + std::to_string(arc) + " not found");
}

std::vector<int> crossing_signs(const Tangle& t, const std::vector<ArcId>& boundary) {
    if (!t.orientation) throw DiagramError("crossing signs need an oriented diagram");
    Skeleton s = skeleton(t, boundary);
    std::vector<int> sg(s.C);
    for (int i = 0; i < s.C; ++i) {
        int r = s.in[4 * i] ? 0 : 2;
        int o = s.in[4 * i + 1] ? 1 : 3;
        sg[i] = ((o - r + 4) % 4 == 3) ? 1 : -1;
    }
    return sg;
}

int writhe(const VirtualDiagram& d) {
    auto sg = crossing_signs(d);
    return std::accumulate(sg.begin(), sg.end(), 0);
}

int seifert_circuit_count(const VirtualDiagram& d) {
    auto sg = crossing_signs(d);
    Skeleton s = skeleton(d);
    std::vector<int> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    auto join = [&](int a, int b) { p[find(a)] = find(b); };
    for (int e = 0; e < s.size(); ++e) join(e, s.mate[e]);
    for (int i = 0; i < s.C; ++i) {
        // oriented smoothing: A at positive crossings, B at negative ones
        if (sg[i] > 0) {
            join(4 * i, 4 * i + 1);
            join(4 * i + 2, 4 * i + 3);
        } else {
            join(4 * i, 4 * i + 3);
            join(4 * i + 1, 4 * i + 2);
        }
    }
    int n = 0;
    for (int e = 0; e < s.size(); ++e) n += find(e) == e;
    return n + d.free_loops;
}

std::string canonical_code(const VirtualDiagram& d, bool with_orientation) {
    Tangle t = d;
    if (!with_orientation) t.orientation.reset();
    Skeleton s = skeleton(t);
    const int C = s.C;
    // crossing-connected pieces
    std::vector<int> piece(C, -1);
    int npieces = 0;
    for (int i = 0; i < C; ++i) {
        if (piece[i] >= 0) continue;
        std::vector<int> st{i};
        piece[i] = npieces;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int k = 0; k < 4; ++k) {
                int y = s.mate[4 * x + k] / 4;
                if (piece[y] < 0) {
                    piece[y] = npieces;
                    st.push_back(y);
                }
            }
        }
        ++npieces;
    }
    std::vector<std::string> codes;
    for (int pc = 0; pc < npieces; ++pc) {
        std::string best;
        for (int i0 = 0; i0 < C; ++i0) {
            if (piece[i0] != pc) continue;
            for (int r0 : {0, 2}) {
                std::vector<int> label(C, -1), rot(C, 0), order;
                std::unordered_map<ArcId, int> alab;
                label[i0] = 0;
                rot[i0] = r0;
                order.push_back(i0);
                std::string code;
                for (size_t q = 0; q < order.size(); ++q) {
                    int x = order[q];
                    for (int k = 0; k < 4; ++k) {
                        int e = 4 * x + (rot[x] + k) % 4;
                        auto [it, fresh] = alab.try_emplace(s.arc[e], static_cast<int>(alab.size()));
                        code += std::to_string(it->second);
                        if (!s.in.empty()) code += s.in[e] ? '>' : '<';
                        code += ',';
                        int m = s.mate[e];
                        int y = m / 4;
                        if (label[y] < 0) {
                            label[y] = static_cast<int>(order.size());
                            rot[y] = (m % 4) & 2;
                            order.push_back(y);
                        }
                    }
                    code += ';';
                }
                if (best.empty() || code < best) best = code;
            }
        }
        codes.push_back(best);
    }
    std::sort(codes.begin(), codes.end());
    std::string out = "L" + std::to_string(d.free_loops) + "|";
    for (auto& c : codes) out += c + "|";
    return out;
}

ArcId max_arc_id(const Tangle& t, const std::vector<ArcId>& boundary) {
    ArcId m = -1;
    for (const auto& c : t.crossings)
        for (ArcId a : c.arcs) m = std::max(m, a);
    for (ArcId a : boundary) m = std::max(m, a);
    return m;
}

CrossingId max_crossing_id(const Tangle& t) {
    CrossingId m = -1;
    for (const auto& c : t.crossings) m = std::max(m, c.id);
    return m;
}

}  // namespace rp3

namespace rp3 {

void transport_orientation(const Tangle& old, const std::vector<ArcId>& old_boundary, Tangle& neu,
                           const std::vector<ArcId>& new_boundary, const EndMap& endmap) {
    if (!old.orientation) {
        neu.orientation.reset();
        return;
    }
    neu.orientation.reset();
    Skeleton os = skeleton(old, old_boundary);
    Skeleton ns = skeleton(neu, new_boundary);
    std::map<ArcId, std::array<End, 2>> old_ends;  // (head, tail)
    for (int e = 0; e < os.size(); ++e)
        if (os.in[e]) old_ends[os.arc[e]] = {os.ref(e, old), os.ref(os.mate[e], old)};
    auto mapped = [&](const End& x) -> std::optional<End> { return endmap ? endmap(x) : std::optional<End>(x); };
    Orientation o;
    for (const auto& comp : components(ns)) {
        int anchor = -1;  // a new end that must be a head
        for (int e : comp) {
            auto it = old_ends.find(ns.arc[e]);
            if (it == old_ends.end()) continue;
            End here = ns.ref(e, neu), there = ns.ref(ns.mate[e], neu);
            auto h = mapped(it->second[0]);
            auto t = mapped(it->second[1]);
            if (h && *h == here) anchor = e;
            else if (t && *t == here) anchor = ns.mate[e];
            else if (h && *h == there) anchor = ns.mate[e];
            else if (t && *t == there) anchor = e;
            if (anchor >= 0) break;
        }
        if (anchor < 0) {
            anchor = comp[0];
            for (int e : comp)
                if (ns.arc[e] < ns.arc[anchor] || (ns.arc[e] == ns.arc[anchor] && ns.ref(e, neu) < ns.ref(anchor, neu)))
                    anchor = e;
        }
        int e = anchor;
        do {
            o[ns.arc[e]] = ns.ref(e, neu);
            e = ns.mate[ns.through(e)];
        } while (e != anchor);
    }
    neu.orientation = std::move(o);
}

}  // namespace rp3
