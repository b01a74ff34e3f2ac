#ifndef RECOL_ORACLE_HPP
#define RECOL_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "recol/graph.hpp"
#include "recol/path.hpp"

namespace recol {

// Brute-force reference over the full space of proper ell-colorings.  All
// entry points first check ell^n against the budget (RECOLOR_BUDGET env or
// the explicit parameter; 0 means "use the default") and throw SizeLimit
// when the state space is too large.

constexpr long long kDefaultBudget = 10'000'000;
constexpr long long kDiameterStateLimit = 100'000;

long long oracle_budget(long long requested = 0);

std::vector<Coloring> enumerate_colorings(const Graph& g, int ell,
                                          long long budget = 0);

struct ReconfigSummary {
    long long num_colorings = 0;
    long long num_components = 0;
    long long num_frozen = 0;
    bool connected = true;
    std::vector<long long> component_sizes;  // descending
};

ReconfigSummary reconfig_summary(const Graph& g, int ell, long long budget = 0);
bool is_mixing(const Graph& g, int ell, long long budget = 0);

// Max over all pairs of the shortest recoloring distance; throws
// NotMixingAtEll when the space is disconnected and SizeLimit beyond
// kDiameterStateLimit states.
long long reconfig_diameter(const Graph& g, int ell, long long budget = 0);

// Shortest path between two proper colorings (BFS); throws NotMixingAtEll
// when unreachable.
RecolorPath oracle_path(const Graph& g, int ell, const Coloring& from,
                        const Coloring& to, long long budget = 0);

// Shortest path from `from` to any coloring whose color classes equal the
// given partition (blocks as produced by color_classes).
RecolorPath oracle_path_to_partition(const Graph& g, int ell, const Coloring& from,
                                     const std::vector<std::vector<int>>& classes,
                                     long long budget = 0);

std::optional<Coloring> find_frozen(const Graph& g, int ell, long long budget = 0);
std::vector<Coloring> all_frozen(const Graph& g, int ell, long long budget = 0);

}  // namespace recol

#endif
