#include "recol/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <unordered_map>

#include "recol/errors.hpp"

namespace recol {

namespace {

void check_budget(const Graph& g, int ell, long long budget) {
    if (ell < 1) throw ParameterError("ell must be positive");
    long long space = 1;
    for (int i = 0; i < g.n(); ++i) {
        if (space > budget / ell) throw SizeLimit("state space exceeds budget");
        space *= ell;
        if (space > budget) throw SizeLimit("state space exceeds budget");
    }
}

uint64_t encode(const Coloring& c, int ell) {
    uint64_t code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        code = code * ell + (c[i] - 1);
    return code;
}

struct Space {
    std::vector<Coloring> states;
    std::unordered_map<uint64_t, int> index;

    void neighbors(const Graph& g, int ell, int idx,
                   const std::function<void(int, int, int)>& visit) const {
        const Coloring& c = states[idx];
        for (int v = 0; v < g.n(); ++v)
            for (int col = 1; col <= ell; ++col) {
                if (col == c[v]) continue;
                bool ok = true;
                for (int w : g.neighbors(v))
                    if (c[w] == col) { ok = false; break; }
                if (!ok) continue;
                Coloring d = c;
                d[v] = col;
                visit(index.at(encode(d, ell)), v, col);
            }
    }
};

Space build_space(const Graph& g, int ell, long long budget) {
    check_budget(g, ell, budget);
    Space sp;
    Coloring cur(g.n(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n()) {
            sp.index.emplace(encode(cur, ell), static_cast<int>(sp.states.size()));
            sp.states.push_back(cur);
            return;
        }
        for (int col = 1; col <= ell; ++col) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && cur[w] == col) { ok = false; break; }
            if (!ok) continue;
            cur[v] = col;
            rec(v + 1);
        }
        cur[v] = 0;
    };
    if (g.n() == 0) {
        sp.index.emplace(0, 0);
        sp.states.push_back({});
    } else {
        rec(0);
    }
    return sp;
}

// BFS from src; returns (dist, parent-step) arrays.
struct BfsResult {
    std::vector<int> dist;
    std::vector<int> parent;
    std::vector<RecolorStep> via;
};

BfsResult bfs(const Graph& g, int ell, const Space& sp, int src) {
    BfsResult r;
    r.dist.assign(sp.states.size(), -1);
    r.parent.assign(sp.states.size(), -1);
    r.via.assign(sp.states.size(), {});
    std::deque<int> queue{src};
    r.dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        sp.neighbors(g, ell, u, [&](int w, int v, int col) {
            if (r.dist[w] != -1) return;
            r.dist[w] = r.dist[u] + 1;
            r.parent[w] = u;
            r.via[w] = {v, sp.states[u][v], col};
            queue.push_back(w);
        });
    }
    return r;
}

RecolorPath extract(const Space& sp, const BfsResult& r, int src, int dst, int ell) {
    RecolorPath p;
    p.ell = ell;
    p.start = sp.states[src];
    std::vector<RecolorStep> rev;
    for (int u = dst; u != src; u = r.parent[u]) rev.push_back(r.via[u]);
    p.steps.assign(rev.rbegin(), rev.rend());
    return p;
}

int state_index(const Graph& g, const Space& sp, const Coloring& c, int ell) {
    if (!check_proper(g, c, ell)) throw ParameterError("coloring is not proper");
    return sp.index.at(encode(c, ell));
}

}  // namespace

long long oracle_budget(long long requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RECOLOR_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return kDefaultBudget;
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int ell, long long budget) {
    return build_space(g, ell, oracle_budget(budget)).states;
}

ReconfigSummary reconfig_summary(const Graph& g, int ell, long long budget) {
    Space sp = build_space(g, ell, oracle_budget(budget));
    ReconfigSummary s;
    s.num_colorings = static_cast<long long>(sp.states.size());
    std::vector<bool> seen(sp.states.size(), false);
    for (size_t i = 0; i < sp.states.size(); ++i) {
        if (seen[i]) continue;
        ++s.num_components;
        long long size = 0;
        std::deque<int> queue{static_cast<int>(i)};
        seen[i] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++size;
            sp.neighbors(g, ell, u, [&](int w, int, int) {
                if (!seen[w]) { seen[w] = true; queue.push_back(w); }
            });
        }
        s.component_sizes.push_back(size);
        if (size == 1 && g.n() > 0) {
            // isolated state: check it is actually frozen (no legal move)
            bool frozen = true;
            sp.neighbors(g, ell, static_cast<int>(i), [&](int, int, int) {
                frozen = false;
            });
            if (frozen) ++s.num_frozen;
        }
    }
    s.connected = s.num_components <= 1;
    std::sort(s.component_sizes.rbegin(), s.component_sizes.rend());
    return s;
}

bool is_mixing(const Graph& g, int ell, long long budget) {
    return reconfig_summary(g, ell, budget).connected;
}

long long reconfig_diameter(const Graph& g, int ell, long long budget) {
    Space sp = build_space(g, ell, oracle_budget(budget));
    if (static_cast<long long>(sp.states.size()) > kDiameterStateLimit)
        throw SizeLimit("too many colorings for exact diameter");
    long long diam = 0;
    for (size_t i = 0; i < sp.states.size(); ++i) {
        BfsResult r = bfs(g, ell, sp, static_cast<int>(i));
        for (int d : r.dist) {
            if (d == -1) throw NotMixingAtEll("recoloring space is disconnected");
            diam = std::max(diam, static_cast<long long>(d));
        }
    }
    return diam;
}

RecolorPath oracle_path(const Graph& g, int ell, const Coloring& from,
                        const Coloring& to, long long budget) {
    Space sp = build_space(g, ell, oracle_budget(budget));
    int src = state_index(g, sp, from, ell);
    int dst = state_index(g, sp, to, ell);
    BfsResult r = bfs(g, ell, sp, src);
    if (r.dist[dst] == -1) throw NotMixingAtEll("target coloring unreachable");
    return extract(sp, r, src, dst, ell);
}

RecolorPath oracle_path_to_partition(const Graph& g, int ell, const Coloring& from,
                                     const std::vector<std::vector<int>>& classes,
                                     long long budget) {
    Space sp = build_space(g, ell, oracle_budget(budget));
    int src = state_index(g, sp, from, ell);
    BfsResult r = bfs(g, ell, sp, src);
    int best = -1;
    for (size_t i = 0; i < sp.states.size(); ++i) {
        if (r.dist[i] == -1 || color_classes(sp.states[i]) != classes) continue;
        if (best == -1 || r.dist[i] < r.dist[best]) best = static_cast<int>(i);
    }
    if (best == -1) throw NotMixingAtEll("no reachable coloring with target classes");
    return extract(sp, r, src, best, ell);
}

std::optional<Coloring> find_frozen(const Graph& g, int ell, long long budget) {
    auto all = all_frozen(g, ell, budget);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::vector<Coloring> all_frozen(const Graph& g, int ell, long long budget) {
    Space sp = build_space(g, ell, oracle_budget(budget));
    std::vector<Coloring> out;
    for (size_t i = 0; i < sp.states.size(); ++i) {
        bool frozen = true;
        sp.neighbors(g, ell, static_cast<int>(i), [&](int, int, int) {
            frozen = false;
        });
        if (frozen) out.push_back(sp.states[i]);
    }
    return out;
}

}  // namespace recol
