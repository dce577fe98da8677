#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

void add(Poly& p, int e, long long c) {
    if (!c) return;
    if ((p[e] += c) == 0) p.erase(e);
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (auto [ea, ca] : a)
        for (auto [eb, cb] : b) add(r, ea + eb, ca * cb);
    return r;
}

Poly delta() { return {{-2, -1}, {2, -1}}; }

// Exact long division by -A^2 - A^-2, from the top exponent down.
Poly divide_by_delta(Poly p) {
    Poly q;
    while (!p.empty()) {
        auto [e, c] = *p.rbegin();
        // leading term of delta is -A^2
        int qe = e - 2;
        long long qc = -c;
        add(q, qe, qc);
        add(p, qe + 2, qc);  // p -= qc * delta
        add(p, qe - 2, qc);
        if (p.count(e)) throw std::logic_error("oracle: division by delta failed");
        if (!p.empty() && p.begin()->first < -100000) throw std::logic_error("oracle: division diverged");
    }
    return q;
}

struct Ends {
    // slot end (4*i+s) -> the other end of its arc
    std::vector<int> mate;
};

Ends slot_mates(const rp3::Tangle& t) {
    std::map<rp3::ArcId, std::vector<int>> where;
    for (size_t i = 0; i < t.crossings.size(); ++i)
        for (int s = 0; s < 4; ++s) where[t.crossings[i].arcs[s]].push_back(static_cast<int>(4 * i + s));
    Ends e;
    e.mate.assign(4 * t.crossings.size(), -1);
    for (auto& [a, v] : where) {
        if (v.size() != 2) throw std::invalid_argument("oracle: arc without two slot ends");
        e.mate[v[0]] = v[1];
        e.mate[v[1]] = v[0];
    }
    return e;
}

}  // namespace

std::string poly_str(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream o;
    bool first = true;
    for (auto [e, c] : p) {
        long long a = c < 0 ? -c : c;
        if (first) o << (c < 0 ? "-" : "");
        else o << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) o << a;
        else {
            if (a != 1) o << a;
            o << "A";
            if (e != 1) o << '^' << e;
        }
    }
    return o.str();
}

GaussCode gauss_code(const rp3::VirtualDiagram& d) {
    const int C = static_cast<int>(d.crossings.size());
    Ends ends = slot_mates(d);
    GaussCode g;
    g.free_loops = d.free_loops;
    g.sign.assign(C, 0);
    std::vector<int> under_in(C, -1), over_in(C, -1);
    std::vector<char> seen(4 * C, 0);

    auto arrives = [&](int e) {
        if (!d.orientation) return false;
        const auto& c = d.crossings[e / 4];
        auto it = d.orientation->find(c.arcs[e % 4]);
        return it != d.orientation->end() && it->second.kind == rp3::End::Slot && it->second.where == c.id &&
               it->second.slot == e % 4;
    };

    for (int start = 0; start < 4 * C; ++start) {
        if (seen[start]) continue;
        // pick the entry end of this strand's component
        int entry = -1;
        {
            std::vector<int> comp;
            int e = start;
            do {
                comp.push_back(e);
                comp.push_back(e ^ 2);
                e = ends.mate[e ^ 2];
            } while (e != start && e != (start ^ 2));
            if (d.orientation) {
                for (int x : comp)
                    if (arrives(x)) {
                        entry = x;
                        break;
                    }
            }
            if (entry < 0)
                for (int x : comp)
                    if (x % 4 == 0) {
                        entry = x;
                        break;
                    }
            if (entry < 0) entry = comp.front();
        }
        std::vector<Passage> seq;
        int e = entry;
        do {
            seen[e] = seen[e ^ 2] = 1;
            int c = e / 4, s = e % 4;
            seq.push_back({c, s % 2 == 1});
            (s % 2 ? over_in : under_in)[c] = s;
            e = ends.mate[e ^ 2];
        } while (e != entry);
        g.components.push_back(std::move(seq));
    }
    for (int c = 0; c < C; ++c) g.sign[c] = ((over_in[c] - under_in[c] + 8) % 4 == 3) ? 1 : -1;
    return g;
}

Poly bracket(const GaussCode& g) {
    // positions p: out_p = 2p, in_p = 2p+1
    std::vector<Passage> pos;
    std::vector<int> next;
    for (const auto& comp : g.components) {
        int base = static_cast<int>(pos.size());
        for (size_t k = 0; k < comp.size(); ++k) {
            pos.push_back(comp[k]);
            next.push_back(base + static_cast<int>((k + 1) % comp.size()));
        }
    }
    const int P = static_cast<int>(pos.size());
    const int C = static_cast<int>(g.sign.size());
    std::vector<std::array<int, 2>> at(C, {-1, -1});
    for (int p = 0; p < P; ++p) at[pos[p].crossing][at[pos[p].crossing][0] < 0 ? 0 : 1] = p;

    Poly total;
    for (unsigned long w = 0; w < (1ul << C); ++w) {
        std::vector<std::vector<int>> adj(2 * P);
        for (int p = 0; p < P; ++p) {
            adj[2 * p].push_back(2 * next[p] + 1);
            adj[2 * next[p] + 1].push_back(2 * p);
        }
        int a_count = 0;
        for (int c = 0; c < C; ++c) {
            bool is_a = !((w >> c) & 1);
            a_count += is_a;
            bool oriented = (g.sign[c] > 0) == is_a;
            int p = at[c][0], q = at[c][1];
            auto link = [&](int x, int y) {
                adj[x].push_back(y);
                adj[y].push_back(x);
            };
            if (oriented) {
                link(2 * p + 1, 2 * q);
                link(2 * q + 1, 2 * p);
            } else {
                link(2 * p + 1, 2 * q + 1);
                link(2 * p, 2 * q);
            }
        }
        std::vector<char> vis(2 * P, 0);
        int loops = g.free_loops;
        for (int s = 0; s < 2 * P; ++s) {
            if (vis[s]) continue;
            ++loops;
            std::vector<int> stack{s};
            vis[s] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (!vis[y]) vis[y] = 1, stack.push_back(y);
            }
        }
        Poly term{{a_count - (C - a_count), 1}};
        for (int k = 0; k < loops; ++k) term = mul(term, delta());
        for (auto [e, c] : term) add(total, e, c);
    }
    return total;
}

Poly normalized(const GaussCode& g) {
    int w = std::accumulate(g.sign.begin(), g.sign.end(), 0);
    Poly f = divide_by_delta(bracket(g));
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    Poly r;
    for (auto [e, c] : f) add(r, e - 3 * w, (w % 2) ? -c : c);
    return r;
}

namespace {

int dense_rank(std::vector<std::vector<mpq_class>> m) {
    int rank = 0;
    const int R = static_cast<int>(m.size());
    if (!R) return 0;
    const int K = static_cast<int>(m[0].size());
    for (int col = 0; col < K && rank < R; ++col) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = rank + 1; r < R; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[rank][col];
            for (int k = col; k < K; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Betti classical_khovanov(const rp3::VirtualDiagram& d) {
    const int C = static_cast<int>(d.crossings.size());
    if (C > 10) throw std::invalid_argument("oracle: too many crossings");
    GaussCode g = gauss_code(d);
    int n_plus = 0, n_minus = 0;
    for (int s : g.sign) (s > 0 ? n_plus : n_minus)++;
    Ends ends = slot_mates(d);

    // circle index of every slot end, per state
    struct State {
        std::vector<int> circle;
        int count = 0;
    };
    std::vector<State> states(1u << C);
    for (unsigned v = 0; v < (1u << C); ++v) {
        std::vector<int> parent(4 * C);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int e = 0; e < 4 * C; ++e) unite(e, ends.mate[e]);
        for (int c = 0; c < C; ++c) {
            if ((v >> c) & 1) {
                unite(4 * c + 0, 4 * c + 3);
                unite(4 * c + 1, 4 * c + 2);
            } else {
                unite(4 * c + 0, 4 * c + 1);
                unite(4 * c + 2, 4 * c + 3);
            }
        }
        State& st = states[v];
        st.circle.assign(4 * C, -1);
        std::map<int, int> idx;
        for (int e = 0; e < 4 * C; ++e) {
            auto [it, fresh] = idx.try_emplace(find(e), static_cast<int>(idx.size()));
            st.circle[e] = it->second;
        }
        st.count = static_cast<int>(idx.size()) + d.free_loops;
    }

    // generators grouped by (r, q); labels bit k set = X on circle k
    using Key = std::pair<int, int>;
    std::map<Key, std::vector<std::pair<unsigned, unsigned>>> gens;
    std::map<std::pair<unsigned, unsigned>, int> index;
    auto qdeg = [&](unsigned v, unsigned lab) {
        int m = states[v].count, xs = std::popcount(lab), r = std::popcount(v);
        return (m - xs) - xs + r + n_plus - 2 * n_minus;
    };
    for (unsigned v = 0; v < (1u << C); ++v)
        for (unsigned lab = 0; lab < (1u << states[v].count); ++lab) {
            Key k{std::popcount(v), qdeg(v, lab)};
            index[{v, lab}] = static_cast<int>(gens[k].size());
            gens[k].emplace_back(v, lab);
        }

    // image of one generator along the edge v -> v | (1<<i)
    auto edge_image = [&](unsigned v, unsigned lab, int i) {
        unsigned w = v | (1u << i);
        const State &a = states[v], &b = states[w];
        std::vector<std::pair<unsigned, int>> out;
        int sign = (std::popcount(v & ((1u << i) - 1)) % 2) ? -1 : 1;
        // circles of v touching crossing i
        int c0 = a.circle[4 * i], c1 = a.circle[4 * i + 2];
        int d0 = b.circle[4 * i], d1 = b.circle[4 * i + 2];
        const int loops_a = a.count - d.free_loops, loops_b = b.count - d.free_loops;
        // unchanged circles: map by a shared slot end
        std::vector<int> map_ab(a.count, -1);
        for (int e = 0; e < 4 * C; ++e)
            if (a.circle[e] != c0 && a.circle[e] != c1) map_ab[a.circle[e]] = b.circle[e];
        for (int k = 0; k < d.free_loops; ++k) map_ab[loops_a + k] = loops_b + k;
        unsigned base = 0;
        for (int k = 0; k < a.count; ++k)
            if (map_ab[k] >= 0 && ((lab >> k) & 1)) base |= 1u << map_ab[k];
        if (c0 != c1) {
            bool x0 = (lab >> c0) & 1, x1 = (lab >> c1) & 1;
            if (x0 && x1) return out;
            unsigned r = base | ((x0 || x1) ? (1u << d0) : 0u);
            out.emplace_back(r, sign);
        } else {
            if (d0 == d1) throw std::invalid_argument("oracle: diagram is not planar");
            bool x = (lab >> c0) & 1;
            if (x) out.emplace_back(base | (1u << d0) | (1u << d1), sign);
            else {
                out.emplace_back(base | (1u << d0), sign);
                out.emplace_back(base | (1u << d1), sign);
            }
        }
        (void)w;
        return out;
    };

    auto block_rank = [&](int r, int q) {
        auto src = gens.find({r, q});
        auto dst = gens.find({r + 1, q});
        if (src == gens.end() || dst == gens.end()) return 0;
        std::vector<std::vector<mpq_class>> m(dst->second.size(), std::vector<mpq_class>(src->second.size()));
        for (size_t col = 0; col < src->second.size(); ++col) {
            auto [v, lab] = src->second[col];
            for (int i = 0; i < C; ++i) {
                if ((v >> i) & 1) continue;
                unsigned w = v | (1u << i);
                for (auto [img, s] : edge_image(v, lab, i)) m[index.at({w, img})][col] += s;
            }
        }
        return dense_rank(std::move(m));
    };

    Betti out;
    for (const auto& [k, list] : gens) {
        auto [r, q] = k;
        int dim = static_cast<int>(list.size()) - block_rank(r, q) - block_rank(r - 1, q);
        if (dim) out[{r - n_minus, q}] = dim;
    }
    return out;
}

rp3::VirtualDiagram braid_closure(int strands, const std::vector<int>& word) {
    long long next = 1;
    std::vector<long long> level(strands), bottom;
    for (auto& x : level) x = next++;
    bottom = level;
    rp3::VirtualDiagram d;
    std::vector<std::array<int, 2>> heads;
    long long t = 1;
    for (int gen : word) {
        int i = std::abs(gen) - 1;
        long long l = level[i], r = level[i + 1], nl = next++, nr = next++;
        rp3::Crossing c;
        c.id = t++;
        c.arcs = gen > 0 ? std::array<long long, 4>{r, nr, nl, l} : std::array<long long, 4>{l, r, nr, nl};
        d.crossings.push_back(c);
        heads.push_back(gen > 0 ? std::array<int, 2>{0, 3} : std::array<int, 2>{0, 1});
        level[i] = nl;
        level[i + 1] = nr;
    }
    std::map<long long, long long> ren;
    for (int j = 0; j < strands; ++j) ren[level[j]] = bottom[j];
    auto canon = [&](long long a) {
        while (ren.count(a) && ren[a] != a) a = ren[a];
        return a;
    };
    std::set<long long> used;
    for (auto& c : d.crossings)
        for (auto& a : c.arcs) used.insert(a = canon(a));
    for (int j = 0; j < strands; ++j) d.free_loops += !used.count(bottom[j]);
    rp3::Orientation o;
    for (size_t k = 0; k < d.crossings.size(); ++k)
        for (int s : heads[k]) o[d.crossings[k].arcs[s]] = {rp3::End::Slot, d.crossings[k].id, s};
    d.orientation = std::move(o);
    return d;
}

}  // namespace oracle
