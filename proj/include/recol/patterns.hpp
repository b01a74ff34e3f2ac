#ifndef RECOL_PATTERNS_HPP
#define RECOL_PATTERNS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

enum class PatternId {
    P2P3,       // disjoint union of an edge and a 3-vertex path
    C4,
    C5,
    C6,
    FiveCap,
    FiveApple,
    Theta,      // C6 plus one vertex adjacent to v1 and v4
    P3,
    TwoK2,
    ThreeK1,
};

Graph pattern_graph(PatternId id);

// Induced-subgraph containment; the witness lists image vertices in pattern
// order (so a cycle witness comes back in cyclic order).  Deterministic:
// the lexicographically least embedding under the backtracking order.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);
std::optional<std::vector<int>> find_induced(const Graph& g, PatternId pat);
bool has_induced(const Graph& g, PatternId pat);

// true iff g is P2+P3-free and C4-free.
bool in_scope_class(const Graph& g);

// Lexicographically least nonadjacent pair (u,v) with N(u) subseteq N(v).
std::optional<std::pair<int, int>> find_comparable_pair(const Graph& g);

// Graph isomorphism g -> h; result maps vertex i of g to result[i] of h.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// Injective map of g onto an induced subgraph of host (adjacency and
// non-adjacency both preserved).
std::optional<std::vector<int>> find_induced_embedding(const Graph& g, const Graph& host);
std::vector<std::vector<int>> all_automorphisms(const Graph& g);

}  // namespace recol

#endif
