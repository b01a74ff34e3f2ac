#include "recol/path.hpp"

#include <fstream>
#include <sstream>

#include "recol/errors.hpp"

namespace recol {

Coloring RecolorPath::end() const {
    Coloring c = start;
    for (const auto& s : steps) c[s.vertex] = s.to;
    return c;
}

std::vector<int> RecolorPath::per_vertex_counts(int n) const {
    std::vector<int> cnt(n, 0);
    for (const auto& s : steps) ++cnt[s.vertex];
    return cnt;
}

void validate_path(const Graph& g, const RecolorPath& p) {
    Coloring cur = p.start;
    if (!check_proper(g, cur, p.ell))
        throw FormatError("path start coloring is not proper");
    for (const auto& s : p.steps) {
        if (s.vertex < 0 || s.vertex >= g.n())
            throw FormatError("step vertex out of range");
        if (s.to < 1 || s.to > p.ell)
            throw FormatError("step color out of range");
        if (cur[s.vertex] != s.from)
            throw FormatError("step old-color mismatch");
        if (s.from == s.to) throw FormatError("step recolors to the same color");
        for (int w : g.neighbors(s.vertex))
            if (cur[w] == s.to)
                throw FormatError("step breaks properness");
        cur[s.vertex] = s.to;
    }
}

RecolorPath reverse_path(const RecolorPath& p) {
    RecolorPath r;
    r.ell = p.ell;
    r.start = p.end();
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
        r.steps.push_back({it->vertex, it->to, it->from});
    return r;
}

RecolorPath concat_paths(const RecolorPath& a, const RecolorPath& b) {
    if (a.ell != b.ell) throw InternalError("concat: palette mismatch");
    if (a.end() != b.start) throw InternalError("concat: endpoint mismatch");
    RecolorPath r = a;
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
}

PathBuilder::PathBuilder(const Graph& g, int ell, Coloring start)
    : g_(g), ell_(ell), cur_(std::move(start)) {
    if (!check_proper(g_, cur_, ell_))
        throw InternalError("builder start coloring is not proper");
    path_.ell = ell_;
    path_.start = cur_;
}

void PathBuilder::recolor(int v, int c) {
    if (c == cur_[v]) return;  // no-op moves are silently dropped
    if (c < 1 || c > ell_) throw InternalError("recolor: color out of range");
    for (int w : g_.neighbors(v))
        if (cur_[w] == c) throw InternalError("recolor: not proper");
    path_.steps.push_back({v, cur_[v], c});
    cur_[v] = c;
}

void PathBuilder::splice(const std::vector<int>& verts, const RecolorPath& sub) {
    for (size_t i = 0; i < verts.size(); ++i)
        if (cur_[verts[i]] != sub.start[i])
            throw InternalError("splice: start coloring mismatch");
    for (const auto& s : sub.steps) recolor(verts[s.vertex], s.to);
}

RecolorPath PathBuilder::take() { return std::move(path_); }

std::string write_path(const RecolorPath& p, int n) {
    std::ostringstream out;
    out << "path " << n << " " << p.ell << " " << p.steps.size() << "\n";
    for (const auto& s : p.steps)
        out << "r " << s.vertex + 1 << " " << s.from << " " << s.to << "\n";
    out << "end\n";
    return out.str();
}

RecolorPath read_path(std::istream& in, const Coloring& start) {
    std::string line;
    RecolorPath p;
    p.start = start;
    int n = -1;
    long steps = -1;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "path") {
            if (!(ls >> n >> p.ell >> steps))
                throw FormatError("bad path header: " + line);
            if (n != static_cast<int>(start.size()))
                throw FormatError("path vertex count mismatch");
        } else if (tag == "r") {
            RecolorStep s;
            int v;
            if (!(ls >> v >> s.from >> s.to))
                throw FormatError("bad step line: " + line);
            s.vertex = v - 1;
            p.steps.push_back(s);
        } else if (tag == "end") {
            ended = true;
            break;
        } else {
            throw FormatError("unknown path line: " + line);
        }
    }
    if (n < 0) throw FormatError("missing path header");
    if (!ended) throw FormatError("missing end line");
    if (static_cast<long>(p.steps.size()) != steps)
        throw FormatError("path step count mismatch");
    return p;
}

RecolorPath read_path_file(const std::string& file, const Coloring& start) {
    std::ifstream in(file);
    if (!in) throw FormatError("cannot open " + file);
    return read_path(in, start);
}

}  // namespace recol
