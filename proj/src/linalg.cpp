#include "rp3/linalg.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace rp3 {

void SparseMatrix::add(int r, int c, const mpq_class& v) {
    if (v != 0) data[r].emplace_back(c, v);
}

void SparseMatrix::normalize() {
    for (auto& row : data) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, mpq_class>> merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        row = std::move(merged);
    }
}

SparseMatrix SparseMatrix::select(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    std::unordered_map<int, int> cmap;
    for (size_t k = 0; k < col_ids.size(); ++k) cmap[col_ids[k]] = static_cast<int>(k);
    SparseMatrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (size_t k = 0; k < row_ids.size(); ++k)
        for (const auto& [c, v] : data[row_ids[k]])
            if (auto it = cmap.find(c); it != cmap.end()) out.data[k].emplace_back(it->second, v);
    return out;
}

size_t SparseMatrix::nonzeros() const {
    size_t n = 0;
    for (const auto& r : data) n += r.size();
    return n;
}

namespace {

using Row = std::vector<std::pair<int, mpq_class>>;

// target -= factor * pivot, both sorted by column
void axpy(Row& target, const Row& pivot, const mpq_class& factor) {
    Row out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.push_back(std::move(target[i++]));
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        } else {
            mpq_class v = target[i].second - factor * pivot[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

}  // namespace

int rank(SparseMatrix m) {
    m.normalize();
    auto& rows = m.data;
    const int R = m.rows;
    std::vector<std::unordered_set<int>> col_rows(m.cols);
    for (int r = 0; r < R; ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
    std::vector<char> alive(R, 1);
    using Item = std::pair<size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int r = 0; r < R; ++r)
        if (!rows[r].empty()) pq.emplace(rows[r].size(), r);
    int rk = 0;
    while (!pq.empty()) {
        auto [len, r] = pq.top();
        pq.pop();
        if (!alive[r] || rows[r].size() != len) continue;
        if (rows[r].empty()) continue;
        // pivot column: the one touching the fewest other rows
        size_t best = 0;
        for (size_t k = 1; k < rows[r].size(); ++k)
            if (col_rows[rows[r][k].first].size() < col_rows[rows[r][best].first].size()) best = k;
        const int pc = rows[r][best].first;
        const mpq_class pv = rows[r][best].second;
        alive[r] = 0;
        ++rk;
        for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
        std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (int t : targets) {
            mpq_class tv;
            for (const auto& [c, v] : rows[t])
                if (c == pc) {
                    tv = v;
                    break;
                }
            for (const auto& [c, v] : rows[t]) col_rows[c].erase(t);
            axpy(rows[t], rows[r], tv / pv);
            for (const auto& [c, v] : rows[t]) col_rows[c].insert(t);
            if (!rows[t].empty()) pq.emplace(rows[t].size(), t);
        }
        rows[r].clear();
    }
    return rk;
}

}  // namespace rp3
