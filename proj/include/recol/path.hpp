#ifndef RECOL_PATH_HPP
#define RECOL_PATH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

struct RecolorStep {
    int vertex;
    int from;  // color before the step
    int to;    // color after
    bool operator==(const RecolorStep&) const = default;
};

// A recoloring sequence: start coloring plus single-vertex steps, each of
// which must keep the coloring proper.
struct RecolorPath {
    int ell = 0;
    Coloring start;
    std::vector<RecolorStep> steps;

    Coloring end() const;
    size_t length() const { return steps.size(); }
    std::vector<int> per_vertex_counts(int n) const;
};

// Checks every prefix: step bookkeeping (from matches, to in range, from != to)
// and properness after each move.  Throws FormatError on violation.
void validate_path(const Graph& g, const RecolorPath& p);

// Same path walked backwards; start becomes the old end.
RecolorPath reverse_path(const RecolorPath& p);

// Appends b to a; b.start must equal a.end().
RecolorPath concat_paths(const RecolorPath& a, const RecolorPath& b);

// Incremental builder that enforces properness on every move.
class PathBuilder {
public:
    PathBuilder(const Graph& g, int ell, Coloring start);

    const Coloring& current() const { return cur_; }
    int color(int v) const { return cur_[v]; }
    int ell() const { return ell_; }

    // Recolors v to c; throws InternalError if the move is not legal.
    void recolor(int v, int c);
    // Splices in a path over a subset of vertices: step.vertex is an index
    // into verts.  Colors must agree with the current restriction.
    void splice(const std::vector<int>& verts, const RecolorPath& sub);

    RecolorPath take();

private:
    const Graph& g_;
    int ell_;
    Coloring cur_;
    RecolorPath path_;
};

// Text format: "path <n> <ell> <steps>", then one "r <vertex> <old> <new>"
// per step (1-based vertices), then "end".  The start coloring travels
// separately as a coloring file.
std::string write_path(const RecolorPath& p, int n);
RecolorPath read_path(std::istream& in, const Coloring& start);
RecolorPath read_path_file(const std::string& file, const Coloring& start);

}  // namespace recol

#endif
