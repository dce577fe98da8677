#include "rp3/khovanov.hpp"

#include "rp3/projective.hpp"

#include <algorithm>
#include <climits>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace rp3 {

namespace {

bool half_edge_in(int e) { return (e % 4) % 2 == 0; }

int partner(unsigned state, int e) {
    const int i = e / 4, k = e % 4;
    return 4 * i + (((state >> i) & 1U) ? 3 - k : (k ^ 1));
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) s = -s;
    return s;
}

template <class F>
void parallel_for(int n, int threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (int k = 0; k < n; ++k) f(k);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < std::min(threads, n); ++t)
        pool.emplace_back([&] {
            for (int k; (k = next++) < n;) f(k);
        });
}

}  // namespace

SourceSink source_sink_decoration(const VirtualDiagram& d) {
    Tangle bare = d;
    bare.orientation.reset();
    Skeleton s = skeleton(bare);
    SourceSink out;
    out.in.resize(s.C);
    for (int i = 0; i < s.C; ++i)
        for (int k = 0; k < 4; ++k) out.in[i][k] = half_edge_in(4 * i + k);
    for (int e = 0; e < s.size(); ++e)
        if (s.mate[e] > e && half_edge_in(e) == half_edge_in(s.mate[e])) out.cut_arcs.push_back(s.arc[e]);
    std::sort(out.cut_arcs.begin(), out.cut_arcs.end());
    return out;
}

Bifurcation ResolutionCube::bifurcation(unsigned v, int i) const {
    const unsigned w = v | (1U << i);
    const auto& a = states[v];
    if (a.circle_of_end[4 * i] != a.circle_of_end[4 * i + 2]) return Bifurcation::Merge;
    return states[w].circles.size() > a.circles.size() ? Bifurcation::Split : Bifurcation::Eta;
}

int ResolutionCube::max_marked_per_state() const {
    int m = 0;
    for (const auto& st : states) {
        int k = 0;
        for (const auto& c : st.circles) k += c.marked;
        m = std::max(m, k);
    }
    return m;
}

ResolutionCube build_cube(const VirtualDiagram& input, const CubeOptions& opt) {
    const VirtualDiagram d = orient(input);
    Tangle bare = d;
    bare.orientation.reset();
    Skeleton s = skeleton(bare);
    const int C = s.C, N = s.size();
    if (C > 20) throw Unsupported("too many crossings for the cube of resolutions");
    ResolutionCube cube;
    cube.C = C;
    for (int sg : crossing_signs(d)) (sg > 0 ? cube.n_plus : cube.n_minus)++;

    std::vector<char> cut(N);
    for (int e = 0; e < N; ++e) cut[e] = half_edge_in(e) == half_edge_in(s.mate[e]);

    cube.states.resize(1U << C);
    for (unsigned v = 0; v < (1U << C); ++v) {
        CubeState& st = cube.states[v];
        st.circle_of_end.assign(N, -1);
        st.parity.assign(N, 0);
        std::vector<std::vector<int>> members;  // slot ends per circle
        for (int e0 = 0; e0 < N; ++e0) {
            if (st.circle_of_end[e0] >= 0) continue;
            const int id = static_cast<int>(members.size());
            members.emplace_back();
            int e = e0;
            do {
                const int f = s.mate[e];
                st.circle_of_end[e] = st.circle_of_end[f] = id;
                members[id].push_back(e);
                members[id].push_back(f);
                e = partner(v, f);
            } while (e != e0);
        }
        std::mt19937_64 rng(opt.base_seed ^ (0x9e3779b97f4a7c15ULL * (v + 1)));
        std::vector<StateCircle> circles(members.size());
        for (size_t c = 0; c < members.size(); ++c) {
            StateCircle& sc = circles[c];
            for (int e : members[c]) sc.arcs.push_back(s.arc[e]);
            std::sort(sc.arcs.begin(), sc.arcs.end());
            sc.arcs.erase(std::unique(sc.arcs.begin(), sc.arcs.end()), sc.arcs.end());
            sc.key = sc.arcs.front();
            int passages = 0;
            for (ArcId a : sc.arcs)
                if (auto it = d.passages.find(a); it != d.passages.end()) passages += it->second;
            sc.marked = passages % 2;
            // base point: first end of the least arc, unless randomized
            int base = -1;
            if (opt.base_seed) {
                base = members[c][rng() % members[c].size()];
            } else {
                for (int e : members[c])
                    if (s.arc[e] == sc.key && (base < 0 || e < base)) base = e;
            }
            sc.base_end = base;
            int e = base, parity = 0;
            do {
                st.parity[e] = static_cast<char>(parity);
                const int f = s.mate[e];
                parity ^= cut[e];
                sc.cut_points += cut[e];
                st.parity[f] = static_cast<char>(parity);
                e = partner(v, f);
            } while (e != base);
        }
        // numbering: least arc id order, or a random order
        std::vector<int> order(circles.size());
        std::iota(order.begin(), order.end(), 0);
        if (opt.numbering_seed) {
            std::mt19937_64 nr(opt.numbering_seed ^ (0xbf58476d1ce4e5b9ULL * (v + 1)));
            std::shuffle(order.begin(), order.end(), nr);
        } else {
            std::sort(order.begin(), order.end(), [&](int a, int b) { return circles[a].key < circles[b].key; });
        }
        std::vector<int> rank_of(circles.size());
        for (size_t k = 0; k < order.size(); ++k) {
            st.circles.push_back(std::move(circles[order[k]]));
            rank_of[order[k]] = static_cast<int>(k);
        }
        for (int& c : st.circle_of_end) c = rank_of[c];
        for (int k = 0; k < d.free_loops; ++k) {
            StateCircle loop;
            loop.key = LLONG_MAX - k;
            loop.marked = k < d.marked_loops;
            st.circles.push_back(loop);
        }
    }
    return cube;
}

namespace {

struct EdgePlan {
    Bifurcation type = Bifurcation::Eta;
    int ca = -1, cb = -1, c = -1, c1 = -1, c2 = -1;
    int pa = 0, pb = 0, pc = 0, p1 = 0, p2 = 0;
    int sign = 1;
    std::vector<std::pair<int, int>> rest;  // v circle -> w circle
    std::vector<char> rest_bar;
};

EdgePlan plan_edge(const ResolutionCube& cube, unsigned v, int i) {
    const unsigned w = v | (1U << i);
    const CubeState& A = cube.states[v];
    const CubeState& B = cube.states[w];
    EdgePlan p;
    p.type = cube.bifurcation(v, i);
    if (p.type == Bifurcation::Eta) return p;
    const int e0 = 4 * i, e2 = 4 * i + 2;
    std::vector<int> inv0, inv1;
    if (p.type == Bifurcation::Merge) {
        p.ca = A.circle_of_end[e0];
        p.cb = A.circle_of_end[e2];
        p.c = B.circle_of_end[e0];
        p.pa = A.parity[e0];
        p.pb = A.parity[e2];
        p.pc = B.parity[e0];
        inv0 = {p.ca, p.cb};
        inv1 = {p.c};
    } else {
        p.ca = A.circle_of_end[e0];
        p.c1 = B.circle_of_end[e0];
        p.c2 = B.circle_of_end[e2];
        p.pa = A.parity[e0];
        p.p1 = B.parity[e0];
        p.p2 = B.parity[e2];
        inv0 = {p.ca};
        inv1 = {p.c1, p.c2};
    }
    std::unordered_map<ArcId, int> wkey;
    for (size_t k = 0; k < B.circles.size(); ++k) wkey[B.circles[k].key] = static_cast<int>(k);
    std::vector<int> perm0 = inv0, perm1 = inv1, matched;
    for (int k = 0; k < static_cast<int>(A.circles.size()); ++k) {
        if (std::find(inv0.begin(), inv0.end(), k) != inv0.end()) continue;
        perm0.push_back(k);
        const int m = wkey.at(A.circles[k].key);
        p.rest.emplace_back(k, m);
        matched.push_back(m);
        const int be = A.circles[k].base_end;
        p.rest_bar.push_back(be >= 0 ? B.parity[be] : 0);
    }
    for (int k = 0; k < static_cast<int>(B.circles.size()); ++k)
        if (std::find(inv1.begin(), inv1.end(), k) == inv1.end()) perm1.push_back(k);
    // promote the involved circles, and account for any reordering of the rest
    p.sign = perm_sign(perm0) * perm_sign(perm1) * perm_sign(matched);
    return p;
}

}  // namespace

ChainComplex build_complex(const ResolutionCube& cube, bool lee) {
    const int C = cube.C;
    ChainComplex cx;
    cx.n_plus = cube.n_plus;
    cx.n_minus = cube.n_minus;
    cx.qdeg.resize(C + 1);
    cx.marked.resize(C + 1);
    cx.d.resize(C + 1);
    std::vector<long long> offset(1U << C);
    for (unsigned v = 0; v < (1U << C); ++v) {
        const int r = std::popcount(v);
        const auto& st = cube.states[v];
        const int n = static_cast<int>(st.circles.size());
        if (n > 30) throw Unsupported("state with too many circles");
        offset[v] = static_cast<long long>(cx.qdeg[r].size());
        bool has_marked = std::any_of(st.circles.begin(), st.circles.end(), [](const auto& c) { return c.marked; });
        for (unsigned b = 0; b < (1U << n); ++b) {
            const int x = std::popcount(b);
            cx.qdeg[r].push_back(n - 2 * x + r + cube.n_plus - 2 * cube.n_minus);
            cx.marked[r].push_back(has_marked);
        }
    }
    for (int r = 0; r <= C; ++r) cx.d[r].resize(cx.qdeg[r].size());
    for (unsigned v = 0; v < (1U << C); ++v) {
        const int r = std::popcount(v);
        const int n0 = static_cast<int>(cube.states[v].circles.size());
        for (int i = 0; i < C; ++i) {
            if ((v >> i) & 1U) continue;
            const unsigned w = v | (1U << i);
            EdgePlan p = plan_edge(cube, v, i);
            if (p.type == Bifurcation::Eta) continue;
            for (unsigned b = 0; b < (1U << n0); ++b) {
                long long coef = p.sign;
                unsigned base = 0;
                for (size_t k = 0; k < p.rest.size(); ++k) {
                    auto [from, to] = p.rest[k];
                    if ((b >> from) & 1U) {
                        base |= 1U << to;
                        if (p.rest_bar[k]) coef = -coef;
                    }
                }
                auto& col = cx.d[r][offset[v] + b];
                auto emit = [&](unsigned bits, long long c) { col.emplace_back(static_cast<int>(offset[w] + bits), c); };
                if (p.type == Bifurcation::Merge) {
                    const int xa = (b >> p.ca) & 1U, xb = (b >> p.cb) & 1U;
                    if ((xa && p.pa) != (xb && p.pb)) coef = -coef;
                    int y;
                    if (xa + xb == 0) y = 0;
                    else if (xa + xb == 1) y = 1;
                    else if (lee) y = 0;
                    else continue;
                    if (y && p.pc) coef = -coef;
                    emit(base | (static_cast<unsigned>(y) << p.c), coef);
                } else {
                    const int x = (b >> p.ca) & 1U;
                    if (x && p.pa) coef = -coef;
                    std::vector<std::pair<int, int>> outs;
                    if (x == 0) outs = {{0, 1}, {1, 0}};
                    else if (lee) outs = {{1, 1}, {0, 0}};
                    else outs = {{1, 1}};
                    for (auto [y1, y2] : outs) {
                        long long c = coef;
                        if (y1 && p.p1) c = -c;
                        if (y2 && p.p2) c = -c;
                        emit(base | (static_cast<unsigned>(y1) << p.c1) | (static_cast<unsigned>(y2) << p.c2), c);
                    }
                }
            }
        }
    }
    for (auto& deg : cx.d)
        for (auto& col : deg) {
            std::sort(col.begin(), col.end());
            std::vector<std::pair<int, long long>> merged;
            for (auto& e : col) {
                if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
                else merged.push_back(e);
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            col = std::move(merged);
        }
    return cx;
}

bool d_squared_zero(const ChainComplex& c) {
    for (size_t r = 0; r + 2 < c.d.size(); ++r) {
        for (const auto& col : c.d[r]) {
            std::map<int, long long> acc;
            for (auto [row, v] : col)
                for (auto [row2, v2] : c.d[r + 1][row]) acc[row2] += v * v2;
            for (const auto& [k, x] : acc)
                if (x != 0) return false;
        }
    }
    return true;
}

namespace {

// Rank of d[r] restricted to the given columns and rows (row filter optional).
int block_rank(const ChainComplex& c, int r, const std::vector<int>& cols, const std::vector<char>* row_ok) {
    if (r < 0 || r + 1 >= static_cast<int>(c.d.size()) || cols.empty()) return 0;
    std::unordered_map<int, int> rid;
    SparseMatrix m(static_cast<int>(cols.size()), 0);
    for (size_t k = 0; k < cols.size(); ++k)
        for (auto [row, v] : c.d[r][cols[k]]) {
            if (row_ok && !(*row_ok)[row]) continue;
            auto [it, fresh] = rid.try_emplace(row, static_cast<int>(rid.size()));
            m.data[k].emplace_back(it->second, mpq_class(static_cast<long>(v)));
        }
    m.cols = static_cast<int>(rid.size());
    return rank(std::move(m));
}

}  // namespace

BettiTable homology(const ChainComplex& c, int threads) {
    const int R = static_cast<int>(c.qdeg.size());
    // blocks (r, q)
    std::vector<std::pair<int, int>> blocks;
    std::map<std::pair<int, int>, std::vector<int>> cols;
    for (int r = 0; r < R; ++r)
        for (size_t g = 0; g < c.qdeg[r].size(); ++g) cols[{r, c.qdeg[r][g]}].push_back(static_cast<int>(g));
    for (const auto& [k, v] : cols) blocks.push_back(k);
    std::vector<int> rk(blocks.size());
    parallel_for(static_cast<int>(blocks.size()), threads, [&](int k) {
        rk[k] = block_rank(c, blocks[k].first, cols.at(blocks[k]), nullptr);
    });
    std::map<std::pair<int, int>, int> rank_of;
    for (size_t k = 0; k < blocks.size(); ++k) rank_of[blocks[k]] = rk[k];
    BettiTable t;
    for (const auto& [key, g] : cols) {
        auto [r, q] = key;
        int h = static_cast<int>(g.size()) - rank_of[key];
        if (auto it = rank_of.find({r - 1, q}); it != rank_of.end()) h -= it->second;
        if (h < 0) throw std::logic_error("negative homology dimension");
        if (h) t.dims[{r - c.n_minus, q}] = h;
    }
    return t;
}

int BettiTable::total() const {
    int s = 0;
    for (const auto& [k, v] : dims) s += v;
    return s;
}

std::string BettiTable::rows() const {
    std::ostringstream out;
    for (const auto& [k, v] : dims) out << k.first << ' ' << k.second << ' ' << v << '\n';
    return out.str();
}

std::string BettiTable::grid() const {
    if (dims.empty()) return "(zero)\n";
    int i0 = INT_MAX, i1 = INT_MIN, j0 = INT_MAX, j1 = INT_MIN;
    for (const auto& [k, v] : dims) {
        i0 = std::min(i0, k.first);
        i1 = std::max(i1, k.first);
        j0 = std::min(j0, k.second);
        j1 = std::max(j1, k.second);
    }
    std::ostringstream out;
    out << "j\\i";
    for (int i = i0; i <= i1; ++i) out << '\t' << i;
    out << '\n';
    for (int j = j1; j >= j0; --j) {
        bool any = false;
        for (int i = i0; i <= i1; ++i) any |= dims.count({i, j}) > 0;
        if (!any && (j - j0) % 2) continue;
        out << j;
        for (int i = i0; i <= i1; ++i) {
            auto it = dims.find({i, j});
            out << '\t' << (it == dims.end() ? "." : std::to_string(it->second));
        }
        out << '\n';
    }
    return out.str();
}

namespace {

ChainComplex checked_complex(const VirtualDiagram& d, const ComplexOptions& opt) {
    ResolutionCube cube = build_cube(d, opt.cube);
    ChainComplex cx = build_complex(cube, opt.lee);
    if (!d_squared_zero(cx)) {
        if (opt.lee) throw Unsupported("Lee differential fails d o d = 0 on this diagram");
        throw std::logic_error("Khovanov differential fails d o d = 0");
    }
    return cx;
}

}  // namespace

BettiTable khovanov_betti(const VirtualDiagram& d, const ComplexOptions& opt, int threads) {
    ComplexOptions o = opt;
    o.lee = false;
    return homology(checked_complex(d, o), threads);
}

BettiTable khovanov_betti(const ProjectiveDiagram& d, const ComplexOptions& opt, int threads) {
    return khovanov_betti(pi(orient(d)), opt, threads);
}

MarkedBetti marked_betti(const ProjectiveDiagram& d, int threads) {
    // Marked circles carry V*, whose structure constants coincide with those
    // of V, so the chain complex is the V complex with relabelled generators.
    VirtualDiagram v = pi(orient(d));
    ResolutionCube cube = build_cube(v);
    ChainComplex cx = build_complex(cube, false);
    if (!d_squared_zero(cx)) throw std::logic_error("marked differential fails d o d = 0");
    MarkedBetti out;
    out.table = homology(cx, threads);
    out.max_marked_per_state = cube.max_marked_per_state();
    for (size_t r = 0; r < cx.qdeg.size(); ++r)
        for (size_t g = 0; g < cx.qdeg[r].size(); ++g)
            if (cx.marked[r][g]) ++out.marked_generators[{static_cast<int>(r) - cx.n_minus, cx.qdeg[r][g]}];
    return out;
}

LeeResult lee_homology(const VirtualDiagram& d, int threads) {
    ComplexOptions o;
    o.lee = true;
    ChainComplex cx = checked_complex(d, o);
    const int R = static_cast<int>(cx.qdeg.size());
    std::vector<int> rk(R);
    parallel_for(R, threads, [&](int r) {
        std::vector<int> all(cx.qdeg[r].size());
        std::iota(all.begin(), all.end(), 0);
        rk[r] = block_rank(cx, r, all, nullptr);
    });
    LeeResult res;
    for (int r = 0; r < R; ++r) {
        int h = static_cast<int>(cx.qdeg[r].size()) - rk[r] - (r ? rk[r - 1] : 0);
        if (h) res.by_degree[r - cx.n_minus] = h;
        res.total += h;
    }
    const int r0 = cx.n_minus;
    if (r0 < R) {
        std::vector<int> levels(cx.qdeg[r0].begin(), cx.qdeg[r0].end());
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        const int rin = r0 > 0 ? rk[r0 - 1] : 0;
        for (int k : levels) {
            std::vector<int> fk;
            for (size_t g = 0; g < cx.qdeg[r0].size(); ++g)
                if (cx.qdeg[r0][g] >= k) fk.push_back(static_cast<int>(g));
            // dim (F_k ∩ ker d) - dim (F_k ∩ im d)
            int h = static_cast<int>(fk.size()) - block_rank(cx, r0, fk, nullptr) - rin;
            if (r0 > 0) {
                std::vector<char> low(cx.qdeg[r0].size());
                for (size_t g = 0; g < low.size(); ++g) low[g] = cx.qdeg[r0][g] < k;
                std::vector<int> all(cx.qdeg[r0 - 1].size());
                std::iota(all.begin(), all.end(), 0);
                h += block_rank(cx, r0 - 1, all, &low);
            }
            res.filtration.emplace_back(k, h);
        }
    }
    return res;
}

LeeResult lee_homology(const ProjectiveDiagram& d, int threads) { return lee_homology(pi(orient(d)), threads); }

int rasmussen_s(const VirtualDiagram& d, int threads) {
    if (component_count(d) != 1) throw DiagramError("the s-invariant is defined here for knots only");
    LeeResult lee = lee_homology(d, threads);
    if (lee.total != 2 || lee.by_degree.size() != 1 || lee.by_degree.begin()->first != 0)
        throw Unsupported("Lee homology is not two-dimensional in degree 0");
    int smax = INT_MIN, smin = INT_MIN;
    for (auto [k, h] : lee.filtration) {
        if (h >= 1) smax = std::max(smax, k);
        if (h >= 2) smin = std::max(smin, k);
    }
    if (smin == INT_MIN || smax == INT_MIN || (smin + smax) % 2)
        throw Unsupported("Lee filtration levels are inconsistent");
    return (smin + smax) / 2;
}

int rasmussen_s(const ProjectiveDiagram& d, int threads) { return rasmussen_s(pi(orient(d)), threads); }

}  // namespace rp3
