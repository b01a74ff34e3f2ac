#ifndef RECOL_CHROMATIC_HPP
#define RECOL_CHROMATIC_HPP

#include <optional>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

// Exact chromatic number with a witnessing coloring.  Branch and bound over
// vertices in a fixed order with a greedy-clique lower bound; deterministic.
// Throws SizeLimit for n > 32.
std::pair<int, Coloring> chromatic_number(const Graph& g);

// A maximal clique found greedily from the highest-degree vertex; lower
// bounds the chromatic number.
std::vector<int> greedy_clique(const Graph& g);

// Chordality test via maximum cardinality search; on success returns a
// perfect elimination order: for each vertex, its neighbors appearing later
// in the order form a clique.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

}  // namespace recol

#endif
