#include "rp3/bracket.hpp"

#include "rp3/projective.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace rp3 {

namespace {

// counts[a][l]: states with a A-smoothings and l loops
using Counts = std::vector<std::vector<unsigned long long>>;

void count_states(const Skeleton& s, unsigned long long lo, unsigned long long hi, Counts& counts) {
    const int C = s.C, N = s.size();
    std::vector<int> p(N);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    auto join = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[a] = b;
    };
    for (unsigned long long st = lo; st < hi; ++st) {
        std::iota(p.begin(), p.end(), 0);
        for (int e = 0; e < N; ++e)
            if (s.mate[e] > e) join(e, s.mate[e]);
        int na = 0;
        for (int i = 0; i < C; ++i) {
            const int b = 4 * i;
            if ((st >> i) & 1ULL) {
                join(b, b + 3);
                join(b + 1, b + 2);
            } else {
                join(b, b + 1);
                join(b + 2, b + 3);
                ++na;
            }
        }
        int loops = 0;
        for (int e = 0; e < N; ++e) loops += find(e) == e;
        ++counts[na][loops];
    }
}

}  // namespace

Laurent kauffman_bracket(const VirtualDiagram& d, int threads) {
    Tangle bare = d;
    bare.orientation.reset();
    Skeleton s = skeleton(bare);
    const int C = s.C;
    if (C > 40) throw DiagramError("too many crossings for a state sum");
    const unsigned long long total = 1ULL << C;
    const int maxloops = 2 * C + 1;
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<unsigned long long>(total, 64))));
    std::vector<Counts> parts(threads, Counts(C + 1, std::vector<unsigned long long>(maxloops + 1, 0)));
    if (threads == 1) {
        count_states(s, 0, total, parts[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            unsigned long long lo = total * t / threads, hi = total * (t + 1) / threads;
            pool.emplace_back([&, lo, hi, t] { count_states(s, lo, hi, parts[t]); });
        }
    }
    const Laurent delta = Laurent::delta();
    std::vector<Laurent> dpow(maxloops + d.free_loops + 1);
    dpow[0] = Laurent(1);
    for (size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * delta;
    Laurent sum;
    for (int a = 0; a <= C; ++a)
        for (int l = 0; l <= maxloops; ++l) {
            mpz_class n = 0;
            for (const auto& part : parts) n += static_cast<unsigned long>(part[a][l]);
            if (n == 0) continue;
            sum += Laurent::monomial(n, 2 * a - C) * dpow[l + d.free_loops];
        }
    return sum;
}

Laurent normalized_bracket(const VirtualDiagram& d, int threads) {
    if (!d.oriented()) throw DiagramError("normalized bracket needs an oriented diagram");
    if (d.crossings.empty() && d.free_loops == 0) throw DiagramError("empty diagram");
    const int w = writhe(d);
    Laurent br = kauffman_bracket(d, threads);
    Laurent q;
    if (!br.divide_exact(Laurent::delta(), q)) throw DiagramError("internal: bracket not divisible by the loop value");
    // (-A^3)^(-w)
    return Laurent::monomial(w % 2 ? -1 : 1, -3 * w) * q;
}

Laurent f_projective(const ProjectiveDiagram& d, int threads) { return normalized_bracket(orient(pi(d)), threads); }

std::optional<int> non_affine_obstruction(const Laurent& p) {
    std::optional<int> best;
    for (const auto& [e, c] : p.terms()) {
        if (e % 4 == 0) continue;
        if (!best || std::abs(e) < std::abs(*best) || (std::abs(e) == std::abs(*best) && e < *best)) best = e;
    }
    return best;
}

GenusReport seifert_genus_data(const VirtualDiagram& d) {
    if (!d.oriented()) throw DiagramError("genus formula needs an oriented diagram");
    GenusReport g;
    g.crossings = static_cast<int>(d.crossings.size());
    g.seifert_circuits = seifert_circuit_count(d);
    auto sg = crossing_signs(d);
    g.positive = std::all_of(sg.begin(), sg.end(), [](int x) { return x > 0; });
    return g;
}

GenusReport positive_seifert_genus(const VirtualDiagram& d) {
    GenusReport g = seifert_genus_data(d);
    if (!g.positive) throw DiagramError("diagram has negative crossings; the genus formula holds only for positive knots");
    return g;
}

}  // namespace rp3
