#include "recol/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "recol/errors.hpp"

namespace recol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw ParameterError("negative vertex count");
    adj_.assign(n, std::vector<bool>(n, false));
    nbrs_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParameterError("edge endpoint out of range");
        if (u == v) throw ParameterError("self-loop");
        if (adj_[u][v]) continue;
        adj_[u][v] = adj_[v][u] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (adj_[u][v]) nbrs_[u].push_back(v);
    for (int u = 0; u < n; ++u) m_ += degree(u);
    m_ /= 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
            if (adjacent(verts[i], verts[j])) es.emplace_back(i, j);
    return Graph(static_cast<int>(verts.size()), es);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) { seen[v] = true; stack.push_back(v); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> us;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == g.n() - 1) us.push_back(v);
    return us;
}

std::pair<int, std::vector<int>> degeneracy(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        removed[best] = true;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return {d, order};
}

bool check_proper(const Graph& g, const Coloring& c, int ell) {
    if (static_cast<int>(c.size()) != g.n())
        throw FormatError("coloring length does not match vertex count");
    for (int v = 0; v < g.n(); ++v)
        if (c[v] < 1 || c[v] > ell)
            throw FormatError("color out of range [1..ell]");
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (c[u] == c[v]) return false;
    return true;
}

bool check_frozen(const Graph& g, const Coloring& c, int ell) {
    for (int v = 0; v < g.n(); ++v) {
        std::set<int> seen{c[v]};
        for (int w : g.neighbors(v)) seen.insert(c[w]);
        if (static_cast<int>(seen.size()) != ell) return false;
    }
    return true;
}

std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> blocks;
    std::set<int> colors(c.begin(), c.end());
    for (int col : colors) {
        std::vector<int> blk;
        for (int v = 0; v < static_cast<int>(c.size()); ++v)
            if (c[v] == col) blk.push_back(v);
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw FormatError("bad problem line: " + line);
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw FormatError("bad edge line: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw FormatError("unknown line: " + line);
        }
    }
    if (n < 0) throw FormatError("missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw FormatError("edge count mismatch");
    try {
        return Graph(n, edges);
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_graph(in);
}

std::string write_coloring(const Coloring& c, int ell) {
    std::ostringstream out;
    out << ell;
    for (int x : c) out << " " << x;
    out << "\n";
    return out.str();
}

std::pair<Coloring, int> read_coloring(std::istream& in, int n) {
    int ell;
    if (!(in >> ell)) throw FormatError("missing palette size");
    if (ell < 1) throw FormatError("palette size must be positive");
    Coloring c(n);
    for (int i = 0; i < n; ++i) {
        if (!(in >> c[i])) throw FormatError("coloring too short");
        if (c[i] < 1 || c[i] > ell) throw FormatError("color out of range");
    }
    return {c, ell};
}

std::pair<Coloring, int> read_coloring_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_coloring(in, n);
}

}  // namespace recol
