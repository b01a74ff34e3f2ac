#include "recol/chromatic.hpp"

#include <algorithm>
#include <functional>

#include "recol/errors.hpp"

namespace recol {

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::pair<int, Coloring> chromatic_number(const Graph& g) {
    int n = g.n();
    if (n > 32) throw SizeLimit("exact chromatic number limited to n <= 32");
    if (n == 0) return {0, {}};
    int lower = static_cast<int>(greedy_clique(g).size());

    // greedy upper bound in vertex order, least free color
    Coloring best(n);
    int upper = 0;
    for (int v = 0; v < n; ++v) {
        int c = 1;
        for (;; ++c) {
            bool free = true;
            for (int w : g.neighbors(v))
                if (w < v && best[w] == c) { free = false; break; }
            if (free) break;
        }
        best[v] = c;
        upper = std::max(upper, c);
    }
    if (upper == lower) return {upper, best};

    Coloring cur(n, 0);
    std::function<bool(int, int, int)> rec = [&](int v, int used, int limit) {
        if (v == n) return true;
        int top = std::min(used + 1, limit);
        for (int c = 1; c <= top; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && cur[w] == c) { ok = false; break; }
            if (!ok) continue;
            cur[v] = c;
            if (rec(v + 1, std::max(used, c), limit)) return true;
            cur[v] = 0;
        }
        return false;
    };
    for (int k = lower; k < upper; ++k) {
        if (rec(0, 0, k)) return {k, cur};
    }
    return {upper, best};
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    int n = g.n();
    // maximum cardinality search; ties to the least vertex
    std::vector<int> weight(n, 0), mcs;
    std::vector<bool> numbered(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        mcs.push_back(best);
        for (int w : g.neighbors(best))
            if (!numbered[w]) ++weight[w];
    }
    std::vector<int> peo(mcs.rbegin(), mcs.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        for (int w : g.neighbors(peo[i]))
            if (pos[w] > i) later.push_back(w);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return std::nullopt;
    }
    return peo;
}

bool is_chordal(const Graph& g) {
    return perfect_elimination_order(g).has_value();
}

}  // namespace recol
