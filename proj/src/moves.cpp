#include "rp3/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rp3/projective.hpp"

namespace rp3 {

namespace {

// Shared working form for both diagram types.
struct Model {
    std::vector<Crossing> crossings;
    std::vector<ArcId> boundary;
    int free_loops = 0;
    int marked_loops = 0;
    int virtual_crossings = 0;
    std::map<ArcId, int> passages;
    std::optional<Orientation> orientation;

    Tangle tangle() const {
        Tangle t;
        t.crossings = crossings;
        t.free_loops = free_loops;
        t.orientation = orientation;
        return t;
    }
    int index_of(CrossingId id) const {
        for (size_t i = 0; i < crossings.size(); ++i)
            if (crossings[i].id == id) return static_cast<int>(i);
        throw DiagramError("move: no crossing " + std::to_string(id));
    }
    void set_end(const End& e, ArcId a) {
        if (e.kind == End::Boundary) boundary[e.where] = a;
        else crossings[index_of(e.where)].arcs[e.slot] = a;
    }
    std::map<ArcId, std::vector<End>> ends() const {
        std::map<ArcId, std::vector<End>> out;
        for (const auto& c : crossings)
            for (int k = 0; k < 4; ++k) out[c.arcs[k]].push_back({End::Slot, c.id, k});
        for (size_t k = 0; k < boundary.size(); ++k)
            out[boundary[k]].push_back({End::Boundary, static_cast<long long>(k), 0});
        for (auto& [a, v] : out) std::sort(v.begin(), v.end());
        return out;
    }
    ArcId fresh_arc() const { return max_arc_id(tangle(), boundary) + 1; }
    CrossingId fresh_crossing() const {
        CrossingId m = 0;
        for (const auto& c : crossings) m = std::max(m, c.id);
        return m + 1;
    }
};

Model from(const VirtualDiagram& d) {
    Model m;
    m.crossings = d.crossings;
    m.free_loops = d.free_loops;
    m.marked_loops = d.marked_loops;
    m.virtual_crossings = d.virtual_crossings;
    m.passages = d.passages;
    m.orientation = d.orientation;
    return m;
}

Model from(const ProjectiveDiagram& d) {
    Model m;
    m.crossings = d.crossings;
    m.boundary = d.boundary;
    m.free_loops = d.free_loops;
    m.orientation = d.orientation;
    return m;
}

void clean_passages(Model& m) {
    auto e = m.ends();
    std::erase_if(m.passages, [&](const auto& kv) { return kv.second == 0 || !e.count(kv.first); });
}

VirtualDiagram to_virtual(Model m, const Model& old, const EndMap& endmap = {}) {
    clean_passages(m);
    VirtualDiagram d;
    d.crossings = m.crossings;
    d.free_loops = m.free_loops;
    d.marked_loops = m.marked_loops;
    d.virtual_crossings = m.virtual_crossings;
    d.passages = m.passages;
    transport_orientation(old.tangle(), {}, d, {}, endmap);
    return d;
}

ProjectiveDiagram to_projective(const Model& m, const Model& old, const EndMap& endmap = {}) {
    ProjectiveDiagram d;
    d.crossings = m.crossings;
    d.boundary = m.boundary;
    d.free_loops = m.free_loops;
    transport_orientation(old.tangle(), old.boundary, d, d.boundary, endmap);
    return d;
}

int popmod4(int x) { return ((x % 4) + 4) % 4; }

// Deletes crossings, joining each deleted slot to its opposite slot. Arcs
// chained through deleted crossings fuse to their least id; closed chains
// become free loops.
Model delete_through(const Model& m, const std::set<CrossingId>& gone) {
    Tangle t = m.tangle();
    t.orientation.reset();
    Skeleton s = skeleton(t, m.boundary);
    auto removed = [&](int e) { return s.is_slot(e) && gone.count(m.crossings[e / 4].id); };
    auto pass = [&](ArcId a) {
        auto it = m.passages.find(a);
        return it == m.passages.end() ? 0 : it->second;
    };
    Model r = m;
    r.crossings.clear();
    for (const auto& c : m.crossings)
        if (!gone.count(c.id)) r.crossings.push_back(c);
    r.passages.clear();
    std::vector<char> seen(s.size(), 0);
    std::map<ArcId, int> newpass;
    for (int e = 0; e < s.size(); ++e) {
        if (removed(e) || seen[e]) continue;
        std::vector<ArcId> chain{s.arc[e]};
        int f = s.mate[e];
        while (removed(f)) {
            seen[f] = 1;
            int g = s.through(f);
            seen[g] = 1;
            chain.push_back(s.arc[g]);
            f = s.mate[g];
        }
        seen[e] = seen[f] = 1;
        const ArcId id = *std::min_element(chain.begin(), chain.end());
        int p = 0;
        for (ArcId a : chain) p += pass(a);
        r.set_end(s.ref(e, t), id);
        r.set_end(s.ref(f, t), id);
        if (p) newpass[id] = p;
    }
    for (int e = 0; e < s.size(); ++e) {
        if (seen[e]) continue;
        int p = 0, f = e;
        do {
            seen[f] = 1;
            int g = s.mate[f];
            seen[g] = 1;
            p += pass(s.arc[f]);
            f = s.through(g);
        } while (f != e);
        ++r.free_loops;
        if (p % 2) ++r.marked_loops;
    }
    r.passages = std::move(newpass);
    return r;
}

// ---------------------------------------------------------------- sites

std::vector<ArcId> all_arcs(const Model& m) {
    std::vector<ArcId> v;
    for (const auto& [a, e] : m.ends()) v.push_back(a);
    return v;
}

std::vector<MoveSite> r1_sites(const Model& m, bool inverse) {
    std::vector<MoveSite> out;
    if (!inverse) {
        for (ArcId a : all_arcs(m)) out.push_back({{a}});
        if (m.free_loops > 0) out.push_back({{}});
        return out;
    }
    for (const auto& c : m.crossings)
        for (int v = 0; v < 4; ++v)
            if (c.arcs[v] == c.arcs[(v + 1) % 4]) out.push_back({{c.id, v}});
    return out;
}

std::vector<MoveSite> r2_apply_sites(const Model& m) {
    std::vector<MoveSite> out;
    auto arcs = all_arcs(m);
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) out.push_back({{arcs[i], arcs[j]}});
    return out;
}

struct Bigon {
    int x1, x2;  // crossing indices
    int i, j;    // under arc slots at x1, x2
    int k, l;    // over arc slots at x1, x2
};

std::vector<Bigon> bigons(const Model& m) {
    std::vector<Bigon> out;
    auto ends = m.ends();
    for (const auto& [p, pe] : ends) {
        if (pe.size() != 2 || pe[0].kind != End::Slot || pe[1].kind != End::Slot) continue;
        if (pe[0].where == pe[1].where || pe[0].slot % 2 || pe[1].slot % 2) continue;
        const int x1 = m.index_of(pe[0].where), x2 = m.index_of(pe[1].where);
        const Crossing &A = m.crossings[x1], &B = m.crossings[x2];
        for (int k : {1, 3})
            for (int l : {1, 3}) {
                if (A.arcs[k] != B.arcs[l] || A.arcs[k] == A.arcs[(k + 2) % 4]) continue;
                const int s1 = popmod4(k - pe[0].slot), s2 = popmod4(l - pe[1].slot);
                if (popmod4(s1 + s2) != 0) continue;
                out.push_back({x1, x2, pe[0].slot, pe[1].slot, k, l});
            }
    }
    return out;
}

MoveSite bigon_site(const Model& m, const Bigon& b) {
    const Crossing &A = m.crossings[b.x1], &B = m.crossings[b.x2];
    return {{A.id, B.id, A.arcs[b.i], A.arcs[b.k]}};
}

struct Triangle {
    int x[3];     // crossing indices, in traversal order
    int in[3];    // slot where the side from the previous corner arrives
    int out[3];   // slot where the side to the next corner leaves
    ArcId side[3];  // side[c] joins corner c to corner c+1
};

std::vector<long long> triangle_key(const Model& m, const Triangle& t) {
    std::vector<long long> ids, sides;
    for (int c = 0; c < 3; ++c) {
        ids.push_back(m.crossings[t.x[c]].id);
        sides.push_back(t.side[c]);
    }
    std::sort(ids.begin(), ids.end());
    std::sort(sides.begin(), sides.end());
    ids.insert(ids.end(), sides.begin(), sides.end());
    return ids;
}

std::vector<Triangle> triangles(const Model& m) {
    std::vector<Triangle> out;
    std::set<std::vector<long long>> keys;
    auto ends = m.ends();
    auto other = [&](ArcId a, const End& here) -> std::optional<End> {
        const auto& v = ends.at(a);
        if (v.size() != 2) return std::nullopt;
        const End& o = v[0] == here ? v[1] : v[0];
        if (o.kind != End::Slot) return std::nullopt;
        return o;
    };
    const int C = static_cast<int>(m.crossings.size());
    for (int x0 = 0; x0 < C; ++x0)
        for (int s0 = 0; s0 < 4; ++s0)
            for (int sigma : {1, 3}) {
                Triangle t{};
                int cur = x0, slot = s0;
                bool ok = true;
                for (int c = 0; c < 3 && ok; ++c) {
                    const Crossing& X = m.crossings[cur];
                    t.x[c] = cur;
                    t.out[c] = slot;
                    t.side[c] = X.arcs[slot];
                    auto nx = other(X.arcs[slot], {End::Slot, X.id, slot});
                    if (!nx) {
                        ok = false;
                        break;
                    }
                    cur = m.index_of(nx->where);
                    t.in[(c + 1) % 3] = nx->slot;
                    slot = popmod4(nx->slot + sigma);
                }
                if (!ok || cur != x0 || t.in[0] != popmod4(s0 - sigma)) continue;
                if (t.x[0] == t.x[1] || t.x[1] == t.x[2] || t.x[0] == t.x[2]) continue;
                if (t.side[0] == t.side[1] || t.side[1] == t.side[2] || t.side[0] == t.side[2]) continue;
                // side c lies on one line through corners c and c+1; count its over slots
                int overs[3], top = 0, bottom = 0;
                for (int c = 0; c < 3; ++c) {
                    overs[c] = (t.out[c] % 2) + (t.in[(c + 1) % 3] % 2);
                    top += overs[c] == 2;
                    bottom += overs[c] == 0;
                }
                if (top != 1 || bottom != 1) continue;
                if (keys.insert(triangle_key(m, t)).second) out.push_back(t);
            }
    return out;
}

// ---------------------------------------------------------------- rewrites

Model r1_apply(const Model& m, const MoveSite& s, int v) {
    Model r = m;
    const ArcId l = m.fresh_arc();
    Crossing K{m.fresh_crossing(), {}};
    if (s.loc.empty()) {
        if (m.free_loops == 0) throw DiagramError("R1: no free loop");
        const bool marked = m.marked_loops == m.free_loops;
        --r.free_loops;
        if (marked) {
            --r.marked_loops;
            r.passages[l] = 1;
        }
        K.arcs[v] = K.arcs[(v + 1) % 4] = l;
        K.arcs[(v + 2) % 4] = K.arcs[(v + 3) % 4] = l + 1;
    } else {
        const ArcId a = s.loc[0], a2 = l + 1;
        const auto e = m.ends().at(a);
        r.set_end(e[1], a2);
        K.arcs[v] = K.arcs[(v + 1) % 4] = l;
        K.arcs[(v + 2) % 4] = a;
        K.arcs[(v + 3) % 4] = a2;
    }
    r.crossings.push_back(K);
    return r;
}

Model r2_apply(const Model& m, const MoveSite& s, int variant) {
    Model r = m;
    const bool b_under = variant & 1, flip = variant & 2;
    const ArcId u = s.loc[b_under ? 1 : 0], o = s.loc[b_under ? 0 : 1];
    const auto ends = m.ends();
    const ArcId top = m.fresh_arc();
    const ArcId u_mid = top, u2 = top + 1, o_mid = top + 2, o2 = top + 3;
    r.set_end(ends.at(u)[1], u2);
    r.set_end(ends.at(o)[1], o2);
    const CrossingId c = m.fresh_crossing();
    if (!flip) {
        r.crossings.push_back({c, {u, o_mid, u_mid, o}});
        r.crossings.push_back({c + 1, {u_mid, o_mid, u2, o2}});
    } else {
        r.crossings.push_back({c, {u, o, u_mid, o_mid}});
        r.crossings.push_back({c + 1, {u_mid, o2, u2, o_mid}});
    }
    return r;
}

Model r3_apply(const Model& m, const Triangle& t, std::vector<std::pair<End, End>>& moved) {
    Model r = m;
    ArcId fresh = m.fresh_arc();
    for (int c = 0; c < 3; ++c) {
        // the line of side c meets corner c at slot out[c] and corner c+1 at in[c+1]
        const int xa = t.x[c], xb = t.x[(c + 1) % 3];
        const int ta = t.out[c], tb = t.in[(c + 1) % 3];
        const Crossing &A = m.crossings[xa], &B = m.crossings[xb];
        const ArcId oa = A.arcs[(ta + 2) % 4], ob = B.arcs[(tb + 2) % 4];
        const ArcId ns = fresh++;
        r.crossings[xa].arcs[ta] = ob;
        r.crossings[xa].arcs[(ta + 2) % 4] = ns;
        r.crossings[xb].arcs[tb] = oa;
        r.crossings[xb].arcs[(tb + 2) % 4] = ns;
        auto it = m.passages.find(t.side[c]);
        if (it != m.passages.end()) r.passages[ns] = it->second;
        moved.push_back({{End::Slot, A.id, (ta + 2) % 4}, {End::Slot, B.id, tb}});
        moved.push_back({{End::Slot, B.id, (tb + 2) % 4}, {End::Slot, A.id, ta}});
    }
    for (int c = 0; c < 3; ++c) r.passages.erase(t.side[c]);
    return r;
}

Model detour_apply(const Model& m, long long shift) {
    auto arcs = all_arcs(m);
    Model r = m;
    if (arcs.empty()) return r;
    std::map<ArcId, ArcId> to;
    const long long n = static_cast<long long>(arcs.size());
    for (long long i = 0; i < n; ++i) to[arcs[i]] = arcs[((i + shift) % n + n) % n];
    for (auto& c : r.crossings)
        for (auto& a : c.arcs) a = to[a];
    for (auto& a : r.boundary) a = to[a];
    r.passages.clear();
    for (auto [a, p] : m.passages) r.passages[to.count(a) ? to[a] : a] = p;
    if (m.orientation) {
        Orientation o;
        for (const auto& [a, e] : *m.orientation) o[to.count(a) ? to[a] : a] = e;
        r.orientation = o;
    }
    if (!r.crossings.empty()) {
        const long long C = static_cast<long long>(r.crossings.size());
        std::rotate(r.crossings.begin(), r.crossings.begin() + (shift % C + C) % C, r.crossings.end());
    }
    return r;
}

bool contains(const std::vector<MoveSite>& v, const MoveSite& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

std::vector<MoveSite> model_sites(const Model& m, MoveKind kind, bool inverse) {
    switch (kind) {
        case MoveKind::R1:
            return r1_sites(m, inverse);
        case MoveKind::R2: {
            if (!inverse) return r2_apply_sites(m);
            std::vector<MoveSite> out;
            for (const auto& b : bigons(m))
                if (auto s = bigon_site(m, b); !contains(out, s)) out.push_back(s);
            return out;
        }
        case MoveKind::R3: {
            std::vector<MoveSite> out;
            for (const auto& t : triangles(m)) out.push_back({triangle_key(m, t)});
            return out;
        }
        case MoveKind::flype: {
            std::vector<MoveSite> out;
            for (const auto& c : m.crossings) out.push_back({{c.id}});
            return out;
        }
        case MoveKind::vR1:
            if (inverse && m.virtual_crossings < 1) return {};
            return {MoveSite{}};
        case MoveKind::vR2:
            if (inverse && m.virtual_crossings < 2) return {};
            return {MoveSite{}};
        case MoveKind::vR3:
        case MoveKind::mixed:
            return {MoveSite{}};
        case MoveKind::detour: {
            const long long n = static_cast<long long>(all_arcs(m).size());
            std::vector<MoveSite> out;
            for (long long k = 1; k < std::min<long long>(n, 4); ++k) out.push_back({{inverse ? n - k : k}});
            return out;
        }
        default:
            return {};
    }
}

// Rewrites a model; endmap receives the relocated ends for orientation transport.
Model model_apply(const Model& m, const MoveSpec& mv, std::vector<std::pair<End, End>>& moved) {
    const auto sites = model_sites(m, mv.kind, mv.inverse);
    if (!contains(sites, mv.site)) throw DiagramError("move " + mv.str() + ": site does not match");
    if (mv.variant < 0 || mv.variant >= variant_count(mv.kind, mv.inverse))
        throw DiagramError("move " + mv.str() + ": bad variant");
    const auto& loc = mv.site.loc;
    switch (mv.kind) {
        case MoveKind::R1:
            if (!mv.inverse) return r1_apply(m, mv.site, mv.variant);
            return delete_through(m, {loc[0]});
        case MoveKind::R2:
            if (!mv.inverse) return r2_apply(m, mv.site, mv.variant);
            return delete_through(m, {loc[0], loc[1]});
        case MoveKind::R3:
            for (const auto& t : triangles(m))
                if (triangle_key(m, t) == loc) return r3_apply(m, t, moved);
            break;
        case MoveKind::flype: {
            Model r = m;
            auto& X = r.crossings[m.index_of(loc[0])];
            std::reverse(X.arcs.begin(), X.arcs.end());
            for (int k = 0; k < 4; ++k) moved.push_back({{End::Slot, X.id, k}, {End::Slot, X.id, 3 - k}});
            return r;
        }
        case MoveKind::vR1: {
            Model r = m;
            r.virtual_crossings += mv.inverse ? -1 : 1;
            return r;
        }
        case MoveKind::vR2: {
            Model r = m;
            r.virtual_crossings += mv.inverse ? -2 : 2;
            return r;
        }
        case MoveKind::vR3:
        case MoveKind::mixed:
            return m;
        case MoveKind::detour:
            return detour_apply(m, loc[0]);
        default:
            break;
    }
    throw DiagramError("move " + mv.str() + ": not applicable");
}

EndMap make_endmap(const std::vector<std::pair<End, End>>& moved) {
    return [moved](const End& e) -> std::optional<End> {
        for (const auto& [a, b] : moved)
            if (a == e) return b;
        return e;
    };
}

int added_crossings(const MoveSpec& m) {
    if (m.inverse) return 0;
    if (m.kind == MoveKind::R1) return 1;
    if (m.kind == MoveKind::R2) return 2;
    return 0;
}

bool is_projective_kind(MoveKind k) { return k == MoveKind::slideI || k == MoveKind::slideII; }

SlideSite to_slide(const MoveSpec& m) {
    SlideSite s;
    s.kind = m.kind == MoveKind::slideI ? SlideKind::I : SlideKind::II;
    s.inverse = m.inverse;
    if (m.site.loc.size() != 4) throw DiagramError("slide: malformed site");
    s.arc = m.site.loc[0];
    s.crossing = static_cast<int>(m.site.loc[1]);
    s.slot = static_cast<int>(m.site.loc[2]);
    s.position = static_cast<int>(m.site.loc[3]);
    s.variant = m.variant;
    return s;
}

}  // namespace

const std::vector<MoveKind>& virtual_move_kinds() {
    static const std::vector<MoveKind> k{MoveKind::R1,  MoveKind::R2,    MoveKind::R3,     MoveKind::vR1,
                                         MoveKind::vR2, MoveKind::vR3,   MoveKind::mixed,  MoveKind::detour,
                                         MoveKind::flype};
    return k;
}

const std::vector<MoveKind>& projective_move_kinds() {
    static const std::vector<MoveKind> k{MoveKind::R1, MoveKind::slideI, MoveKind::slideII};
    return k;
}

std::string to_string(MoveKind k) {
    static const char* names[] = {"R1", "R2", "R3", "vR1", "vR2", "vR3", "mixed", "detour", "flype", "slideI", "slideII"};
    return names[static_cast<int>(k)];
}

MoveKind move_kind_from_string(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(MoveKind::slideII); ++k)
        if (to_string(static_cast<MoveKind>(k)) == s) return static_cast<MoveKind>(k);
    throw DiagramError("unknown move kind '" + s + "'");
}

std::string MoveSpec::str() const {
    std::ostringstream out;
    out << to_string(kind) << ' ';
    if (site.loc.empty()) out << '-';
    for (size_t i = 0; i < site.loc.size(); ++i) out << (i ? "," : "") << site.loc[i];
    if (variant) out << '/' << variant;
    out << ' ' << (inverse ? "inverse" : "apply");
    return out.str();
}

MoveSpec MoveSpec::parse(const std::string& line) {
    std::istringstream in(line);
    std::string k, site, dir;
    if (!(in >> k >> site >> dir)) throw DiagramError("malformed move line '" + line + "'");
    MoveSpec m;
    m.kind = move_kind_from_string(k);
    if (dir != "apply" && dir != "inverse") throw DiagramError("bad move direction '" + dir + "'");
    m.inverse = dir == "inverse";
    if (auto slash = site.find('/'); slash != std::string::npos) {
        m.variant = std::stoi(site.substr(slash + 1));
        site = site.substr(0, slash);
    }
    if (site != "-") {
        std::istringstream ss(site);
        for (std::string tok; std::getline(ss, tok, ',');) m.site.loc.push_back(std::stoll(tok));
    }
    return m;
}

int variant_count(MoveKind kind, bool inverse) {
    if (inverse) return 1;
    if (kind == MoveKind::R1 || kind == MoveKind::R2) return 4;
    if (kind == MoveKind::slideI) return 2;
    return 1;
}

std::vector<MoveSite> enumerate_sites(const VirtualDiagram& d, MoveKind kind, bool inverse) {
    if (is_projective_kind(kind)) return {};
    return model_sites(from(d), kind, inverse);
}

std::vector<MoveSite> enumerate_sites(const ProjectiveDiagram& d, MoveKind kind, bool inverse) {
    if (kind == MoveKind::R1) return model_sites(from(d), kind, inverse);
    if (!is_projective_kind(kind)) return {};
    std::vector<MoveSite> out;
    for (const auto& s : slide_sites(d, kind == MoveKind::slideI ? SlideKind::I : SlideKind::II, inverse)) {
        MoveSite ms{{s.arc, s.crossing, s.slot, s.position}};
        if (!contains(out, ms)) out.push_back(ms);
    }
    return out;
}

VirtualDiagram apply_move(const VirtualDiagram& d, const MoveSpec& mv) {
    if (is_projective_kind(mv.kind)) throw DiagramError("slide moves apply to projective diagrams only");
    const Model m = from(d);
    std::vector<std::pair<End, End>> moved;
    Model r = model_apply(m, mv, moved);
    if (mv.kind == MoveKind::detour) {
        VirtualDiagram out = to_virtual(r, r);
        out.orientation = r.orientation;
        return out;
    }
    return to_virtual(r, m, make_endmap(moved));
}

ProjectiveDiagram apply_move(const ProjectiveDiagram& d, const MoveSpec& mv) {
    if (is_projective_kind(mv.kind)) {
        if (!contains(enumerate_sites(d, mv.kind, mv.inverse), mv.site))
            throw DiagramError("move " + mv.str() + ": site does not match");
        if (mv.variant < 0 || mv.variant >= variant_count(mv.kind, mv.inverse))
            throw DiagramError("move " + mv.str() + ": bad variant");
        return slide_move(d, to_slide(mv));
    }
    if (mv.kind != MoveKind::R1) throw DiagramError("move " + to_string(mv.kind) + " is not a projective move");
    const Model m = from(d);
    std::vector<std::pair<End, End>> moved;
    return to_projective(model_apply(m, mv, moved), m, make_endmap(moved));
}

namespace {

template <class D>
Walk<D> walk_impl(const D& d, int steps, std::uint64_t seed, const WalkOptions& opt,
                  const std::vector<MoveKind>& defaults) {
    const auto& kinds = opt.kinds.empty() ? defaults : opt.kinds;
    const int cap = static_cast<int>(d.crossings.size()) + opt.crossing_cap_margin;
    std::mt19937_64 rng(seed);
    Walk<D> w{d, {}};
    for (int step = 0; step < steps; ++step) {
        std::vector<MoveSpec> cand;
        const int C = static_cast<int>(w.diagram.crossings.size());
        for (MoveKind k : kinds)
            for (bool inv : {false, true})
                for (const auto& s : enumerate_sites(w.diagram, k, inv)) {
                    MoveSpec m{k, inv, s, 0};
                    if (C + added_crossings(m) > cap) continue;
                    cand.push_back(m);
                }
        if (cand.empty()) break;
        MoveSpec m = cand[rng() % cand.size()];
        m.variant = static_cast<int>(rng() % variant_count(m.kind, m.inverse));
        w.diagram = apply_move(w.diagram, m);
        w.trace.push_back(m);
    }
    return w;
}

}  // namespace

Walk<VirtualDiagram> random_walk(const VirtualDiagram& d, int steps, std::uint64_t seed, const WalkOptions& opt) {
    return walk_impl(d, steps, seed, opt, virtual_move_kinds());
}

Walk<ProjectiveDiagram> random_walk(const ProjectiveDiagram& d, int steps, std::uint64_t seed,
                                    const WalkOptions& opt) {
    return walk_impl(d, steps, seed, opt, projective_move_kinds());
}

std::optional<MoveSpec> related_by_single_move(const VirtualDiagram& a, const VirtualDiagram& b) {
    const std::string target = canonical_code(b);
    if (canonical_code(a) == target) {
        const int dv = b.virtual_crossings - a.virtual_crossings;
        if (dv == 1 || dv == -1) return MoveSpec{MoveKind::vR1, dv < 0, {}, 0};
        if (dv == 2 || dv == -2) return MoveSpec{MoveKind::vR2, dv < 0, {}, 0};
        return MoveSpec{MoveKind::detour, false, {}, 0};
    }
    for (MoveKind k : {MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::flype})
        for (bool inv : {false, true})
            for (const auto& s : enumerate_sites(a, k, inv))
                for (int v = 0; v < variant_count(k, inv); ++v) {
                    MoveSpec m{k, inv, s, v};
                    if (canonical_code(apply_move(a, m)) == target) return m;
                }
    return std::nullopt;
}

}  // namespace rp3
