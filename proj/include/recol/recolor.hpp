#ifndef RECOL_RECOLOR_HPP
#define RECOL_RECOLOR_HPP

#include <functional>
#include <optional>
#include <vector>

#include "recol/graph.hpp"
#include "recol/path.hpp"
#include "recol/structure.hpp"

namespace recol {

// Constructive recoloring.  All routines return paths whose every prefix is
// proper (enforced by PathBuilder) and use deterministic tie-breaking:
// least color, least vertex.

// Between two chi-colorings with identical color classes; <= 2 per vertex.
RecolorPath renaming_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                          int ell);

// P3-free graphs (disjoint cliques); <= 2 per vertex.
RecolorPath cluster_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                         int ell);

// Chordal graphs via simplicial recursion on the elimination order;
// <= 2n per vertex (asserted).
RecolorPath chordal_path(const Graph& g, const std::vector<int>& peo,
                         const Coloring& phi, const Coloring& psi, int ell);

// 3K1-free graphs.  Backed by the exhaustive oracle (shortest path), since
// the constructive <=4-per-vertex algorithm is external to this pipeline;
// the bound is measured by tests, not guaranteed here.
RecolorPath three_k1_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                          int ell, long long budget = 0);

// Cycles at ell >= 4; total length <= 4n asserted.  Oracle-backed.
RecolorPath cycle_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                       int ell, long long budget = 0);

// Disjoint components recolored one after another.
RecolorPath compose_union(const Graph& g, const std::vector<std::vector<int>>& comps,
                          const std::vector<RecolorPath>& parts, int ell);

// Join composition; the two sides must occupy disjoint color sets at every
// interleaving point (PaletteClash otherwise).
RecolorPath compose_join(const Graph& g, const std::vector<int>& side1,
                         const std::vector<int>& side2, const RecolorPath& p1,
                         const RecolorPath& p2, int ell);

// Lifts a path on g-u back to g, where N(u) subseteq N(v), u,v nonadjacent.
// inner is indexed by the vertices of g with u skipped (order preserved).
// Whenever a pending step would recolor a neighbor of u to u's current
// color, u first takes v's current color; finally u moves to target_u.
RecolorPath lift_comparable(const Graph& g, int u, int v, const RecolorPath& inner,
                            const Coloring& phi, int target_u);

// canonicalize(phi) + renaming + reverse(canonicalize(psi)).
RecolorPath chi_scaffold_path(const Graph& g, const ClassWitness& w,
                              const Coloring& phi, const Coloring& psi, int ell);

// Per-class canonicalization to a chi-coloring with the class's fixed color
// classes; <= 2 recolorings per vertex.  Classes: H3 (|X| >= 2), H4 minus
// H4*, H5, and — at ell >= rho+2 — F2Core, H4Star, C6Core.
RecolorPath canonicalize_chi(const Graph& g, const ClassWitness& w,
                             const Coloring& phi, int ell);

// Makes the class's designated independent set monochromatic in a color
// absent from the rest (classes H1, H2, PetersenSub on the full Petersen).
RecolorPath normalize_independent(const Graph& g, const ClassWitness& w,
                                  const Coloring& phi, int ell);

// Generic reduction over an independent set I with chi(g) = chi(g-I)+1:
// normalize, then solve g-I at ell-1 with I's color withheld.  inner_solver
// receives (subgraph of g-I, its start coloring, its target coloring,
// palette size) in local numbering.
using InnerSolver = std::function<RecolorPath(const Graph&, const Coloring&,
                                              const Coloring&, int)>;
RecolorPath independent_reduction(
    const Graph& g, const std::vector<int>& I, int ell,
    const std::function<RecolorPath(const Coloring&)>& normalize,
    const InnerSolver& inner_solver,
    const std::vector<std::vector<int>>& inner_partition, const Coloring& phi);

// Induced subgraphs of the Petersen graph containing a theta; extends the
// endpooints to the full Petersen, runs its routine, restricts the steps.
RecolorPath petersen_sub_path(const Graph& g, const ClassWitness& w,
                              const Coloring& phi, const Coloring& psi, int ell);

// Frozen (chi+1)-coloring for the exceptional cores C6, F2, H4*;
// returns (coloring over g, palette size).
std::pair<Coloring, int> frozen_coloring(const Graph& g, const ClassWitness& w);

struct Decision {
    bool recolorable = false;
    std::vector<int> core;   // exceptional core vertices when not recolorable
    Coloring witness;        // frozen coloring of the core subgraph
    int witness_ell = 0;
    std::vector<StructureCertificate> certificates;  // one per component
    std::vector<std::vector<int>> components;
};

Decision decide_recolorable(const Graph& g);

// Top-level path builder (Theorems on recolorability and degeneracy+2).
// Requires ell > chi(g), and recolorability or ell >= rho(g)+2; with
// force_oracle a brute-force search is attempted instead of failing.
RecolorPath recolor_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                         int ell, long long budget = 0, bool force_oracle = false);

}  // namespace recol

#endif
