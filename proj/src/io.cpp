#include "rp3/io.hpp"

#include <fstream>
#include <sstream>

namespace rp3 {

namespace {

struct Raw {
    Tangle t;
    std::vector<ArcId> boundary;
    bool has_boundary = false;
    int virtual_crossings = 0;
    std::vector<std::pair<ArcId, bool>> orient;
    std::map<ArcId, std::vector<int>> arc_lines;
};

long long to_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
    }
}

Raw scan(const std::string& text, bool projective) {
    Raw r;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    bool seen_loop = false, seen_virtual = false;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(no) + ": " + why); };
        const std::string& kw = tok[0];
        if (kw == "boundary") {
            if (!projective) fail("'boundary' is not allowed in a virtual diagram");
            if (r.has_boundary) fail("duplicate 'boundary' line");
            r.has_boundary = true;
            for (size_t k = 1; k < tok.size(); ++k) {
                ArcId a = to_int(tok[k], no);
                r.boundary.push_back(a);
                r.arc_lines[a].push_back(no);
            }
        } else if (kw == "crossing") {
            if (tok.size() != 6) fail("'crossing' needs an id and four arcs");
            Crossing c;
            c.id = to_int(tok[1], no);
            for (int k = 0; k < 4; ++k) {
                c.arcs[k] = to_int(tok[2 + k], no);
                r.arc_lines[c.arcs[k]].push_back(no);
            }
            r.t.crossings.push_back(c);
        } else if (kw == "loop") {
            if (tok.size() != 2) fail("'loop' needs a count");
            if (seen_loop) fail("duplicate 'loop' line");
            seen_loop = true;
            long long n = to_int(tok[1], no);
            if (n < 0) fail("negative loop count");
            r.t.free_loops = static_cast<int>(n);
        } else if (kw == "virtual") {
            if (projective) fail("'virtual' is not allowed in a projective diagram");
            if (tok.size() != 2) fail("'virtual' needs a count");
            if (seen_virtual) fail("duplicate 'virtual' line");
            seen_virtual = true;
            long long n = to_int(tok[1], no);
            if (n < 0) fail("negative virtual crossing count");
            r.virtual_crossings = static_cast<int>(n);
        } else if (kw == "orient") {
            if (tok.size() != 3 || (tok[2] != "+" && tok[2] != "-")) fail("expected 'orient <arc> +|-'");
            r.orient.emplace_back(to_int(tok[1], no), tok[2] == "+");
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    for (const auto& [a, lines] : r.arc_lines) {
        if (lines.size() == 2) continue;
        std::string where;
        for (int l : lines) where += (where.empty() ? "" : ",") + std::to_string(l);
        throw ParseError("arc " + std::to_string(a) + " has " + std::to_string(lines.size()) +
                         " ends (lines " + where + ")");
    }
    if (r.boundary.size() % 2) throw ParseError("odd boundary length " + std::to_string(r.boundary.size()));
    if (!r.orient.empty()) {
        Skeleton s = skeleton(r.t, r.boundary);
        std::map<ArcId, std::vector<End>> ends;
        for (int e = 0; e < s.size(); ++e) ends[s.arc[e]].push_back(s.ref(e, r.t));
        Orientation o;
        for (auto [a, plus] : r.orient) {
            auto it = ends.find(a);
            if (it == ends.end()) throw ParseError("orientation given for unknown arc " + std::to_string(a));
            End lo = std::min(it->second[0], it->second[1]), hi = std::max(it->second[0], it->second[1]);
            o[a] = plus ? lo : hi;
        }
        r.t.orientation = std::move(o);
    }
    return r;
}

void check(const std::vector<std::string>& v) {
    if (v.empty()) return;
    std::string msg;
    for (const auto& s : v) msg += (msg.empty() ? "" : "; ") + s;
    throw ParseError(msg);
}

void emit(std::ostringstream& out, const Tangle& t, const std::vector<ArcId>& boundary) {
    for (const auto& c : t.crossings)
        out << "crossing " << c.id << ' ' << c.arcs[0] << ' ' << c.arcs[1] << ' ' << c.arcs[2] << ' ' << c.arcs[3]
            << '\n';
    if (t.free_loops) out << "loop " << t.free_loops << '\n';
    if (!t.orientation) return;
    Tangle bare = t;
    bare.orientation.reset();
    Skeleton s = skeleton(bare, boundary);
    std::map<ArcId, End> lo;
    for (int e = 0; e < s.size(); ++e) {
        End r = s.ref(e, t);
        auto [it, fresh] = lo.try_emplace(s.arc[e], r);
        if (!fresh) it->second = std::min(it->second, r);
    }
    for (const auto& [a, head] : *t.orientation) out << "orient " << a << ' ' << (head == lo.at(a) ? '+' : '-') << '\n';
}

}  // namespace

ProjectiveDiagram parse_projective(const std::string& text) {
    Raw r = scan(text, true);
    ProjectiveDiagram d;
    static_cast<Tangle&>(d) = std::move(r.t);
    d.boundary = std::move(r.boundary);
    check(validate(d));
    return d;
}

VirtualDiagram parse_virtual(const std::string& text) {
    Raw r = scan(text, false);
    VirtualDiagram d;
    static_cast<Tangle&>(d) = std::move(r.t);
    d.virtual_crossings = r.virtual_crossings;
    check(validate(d));
    return d;
}

std::string serialize(const ProjectiveDiagram& d) {
    std::ostringstream out;
    out << "boundary";
    for (ArcId a : d.boundary) out << ' ' << a;
    out << '\n';
    emit(out, d, d.boundary);
    return out.str();
}

std::string serialize(const VirtualDiagram& d) {
    std::ostringstream out;
    emit(out, d, {});
    if (d.virtual_crossings) out << "virtual " << d.virtual_crossings << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace rp3
