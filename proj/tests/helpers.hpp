#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "recol/family.hpp"
#include "recol/graph.hpp"

namespace testutil {

inline recol::Graph gf(const std::string& spec) {
    return recol::build_family(recol::parse_family_spec(spec));
}

// random greedy proper coloring: shuffled vertex order, shuffled color
// preference; retries in the unlikely dead-end case
inline recol::Coloring random_proper(const recol::Graph& g, int ell,
                                     std::mt19937_64& rng) {
    for (;;) {
        std::vector<int> order(g.n());
        for (int i = 0; i < g.n(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        recol::Coloring c(g.n(), 0);
        bool ok = true;
        for (int v : order) {
            std::vector<int> cols(ell);
            for (int i = 0; i < ell; ++i) cols[i] = i + 1;
            std::shuffle(cols.begin(), cols.end(), rng);
            int got = 0;
            for (int cc : cols) {
                bool free = true;
                for (int w : g.neighbors(v))
                    if (c[w] == cc) free = false;
                if (free) { got = cc; break; }
            }
            if (!got) { ok = false; break; }
            c[v] = got;
        }
        if (ok) return c;
    }
}

// reference containment check: try every |pattern|-subset of vertices
inline bool naive_has_induced(const recol::Graph& g, const recol::Graph& pat) {
    int k = pat.n();
    if (k > g.n()) return false;
    std::vector<int> pick;
    std::vector<int> perm(k);
    std::function<bool()> match = [&]() {
        for (int i = 0; i < k; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    if (pat.adjacent(i, j) != g.adjacent(pick[perm[i]], pick[perm[j]]))
                        ok = false;
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) return match();
        for (int v = from; v < g.n(); ++v) {
            pick.push_back(v);
            if (rec(v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace testutil

#endif
