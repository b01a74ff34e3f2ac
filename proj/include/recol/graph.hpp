#ifndef RECOL_GRAPH_HPP
#define RECOL_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace recol {

// Color assignments are 1-based: values in [1..ell].
using Coloring = std::vector<int>;

// Immutable simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[u][v]; }
    int degree(int u) const { return static_cast<int>(nbrs_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return nbrs_[u]; }
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on verts (kept in the given order); vertex i of the
    // result corresponds to verts[i].
    Graph induced(const std::vector<int>& verts) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<int>> nbrs_;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<int> universal_vertices(const Graph& g);

// Degeneracy rho(g) together with an elimination order certifying it:
// every vertex has at most d neighbors that appear later in the order.
std::pair<int, std::vector<int>> degeneracy(const Graph& g);

bool check_proper(const Graph& g, const Coloring& c, int ell);
// c must already be proper; true iff every closed neighborhood sees all of [ell].
bool check_frozen(const Graph& g, const Coloring& c, int ell);

// Color classes of a coloring as a canonical partition: blocks sorted
// internally and by least element.  Used to compare colorings up to renaming.
std::vector<std::vector<int>> color_classes(const Coloring& c);

// DIMACS-like text format: "p edge n m" then m lines "e u v", 1-based.
std::string write_graph(const Graph& g);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Coloring file: first token ell, then n colors.
std::string write_coloring(const Coloring& c, int ell);
std::pair<Coloring, int> read_coloring(std::istream& in, int n);
std::pair<Coloring, int> read_coloring_file(const std::string& path, int n);

}  // namespace recol

#endif
