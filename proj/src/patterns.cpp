#include "recol/patterns.hpp"

#include <algorithm>
#include <functional>

#include "recol/errors.hpp"

namespace recol {

namespace {

Graph cycle(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph(k, es);
}

// Maps pattern vertices 0..k-1 in order onto distinct host vertices so that
// adjacency and non-adjacency are both preserved (induced embedding).  Tries
// host vertices in increasing order, so the first hit is the lexicographically
// least embedding.  With stop_after_first=false it collects every embedding.
std::vector<std::vector<int>> embed(const Graph& host, const Graph& pat,
                                    bool stop_after_first) {
    int k = pat.n(), n = host.n();
    std::vector<std::vector<int>> found;
    if (k > n) return found;
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) {
        if (i == k) {
            found.push_back(map);
            return stop_after_first;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || host.degree(v) < pat.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pat.adjacent(i, j) != host.adjacent(v, map[j])) ok = false;
            if (!ok) continue;
            map[i] = v;
            used[v] = true;
            if (rec(i + 1)) return true;
            used[v] = false;
            map[i] = -1;
        }
        return false;
    };
    rec(0);
    return found;
}

}  // namespace

Graph pattern_graph(PatternId id) {
    switch (id) {
        case PatternId::P2P3:
            return Graph(5, {{0, 1}, {2, 3}, {3, 4}});
        case PatternId::C4:
            return cycle(4);
        case PatternId::C5:
            return cycle(5);
        case PatternId::C6:
            return cycle(6);
        case PatternId::FiveCap:
            return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}});
        case PatternId::FiveApple:
            return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
        case PatternId::Theta:
            return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                             {6, 0}, {6, 3}});
        case PatternId::P3:
            return Graph(3, {{0, 1}, {1, 2}});
        case PatternId::TwoK2:
            return Graph(4, {{0, 1}, {2, 3}});
        case PatternId::ThreeK1:
            return Graph(3, {});
    }
    throw InternalError("unknown pattern");
}

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
    auto hits = embed(g, pattern, true);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

std::optional<std::vector<int>> find_induced(const Graph& g, PatternId pat) {
    return find_induced(g, pattern_graph(pat));
}

bool has_induced(const Graph& g, PatternId pat) {
    return find_induced(g, pat).has_value();
}

bool in_scope_class(const Graph& g) {
    return !has_induced(g, PatternId::C4) && !has_induced(g, PatternId::P2P3);
}

std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v || g.adjacent(u, v)) continue;
            bool sub = true;
            for (int w : g.neighbors(u))
                if (!g.adjacent(v, w)) { sub = false; break; }
            if (sub) return std::make_pair(u, v);
        }
    return std::nullopt;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.n(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
    return find_induced(h, g);
}

std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& host) {
    return find_induced(host, g);
}

std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
    return embed(g, g, false);
}

}  // namespace recol
