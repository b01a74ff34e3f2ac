#include "recol/recolor.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "recol/chromatic.hpp"
#include "recol/errors.hpp"
#include "recol/oracle.hpp"
#include "recol/patterns.hpp"

namespace recol {

namespace {

std::vector<int> full_palette(int ell) {
    std::vector<int> p(ell);
    for (int i = 0; i < ell; ++i) p[i] = i + 1;
    return p;
}

// Least color of the palette not in `forbidden`; -1 if none.
int least_free(const std::vector<int>& palette, const std::vector<int>& forbidden) {
    for (int c : palette)
        if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end())
            return c;
    return -1;
}

std::vector<int> closed_nbhd_colors(const Graph& g, const Coloring& cur, int v) {
    std::vector<int> cols{cur[v]};
    for (int w : g.neighbors(v)) cols.push_back(cur[w]);
    return cols;
}

// Least palette color absent from N[v].
int pick_free(const PathBuilder& b, const Graph& g, const std::vector<int>& pal,
              int v) {
    int c = least_free(pal, closed_nbhd_colors(g, b.current(), v));
    if (c < 0) throw NoSpareColor("no free color in a closed neighborhood");
    return c;
}

// Blocks sorted internally and by least element, like color_classes.
std::vector<std::vector<int>> normalize_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// Mapping between a host graph with an arbitrary color set and a local
// subproblem on contiguous colors 1..|palette|.
struct SubMap {
    std::vector<int> verts;    // local i  <->  host verts[i]
    std::vector<int> palette;  // local color j  <->  host palette[j-1]; sorted
};

Coloring to_local(const SubMap& sm, const Coloring& host) {
    Coloring loc(sm.verts.size());
    for (size_t i = 0; i < sm.verts.size(); ++i) {
        int c = host[sm.verts[i]];
        auto it = std::find(sm.palette.begin(), sm.palette.end(), c);
        if (it == sm.palette.end())
            throw InternalError("color outside the expected palette");
        loc[i] = static_cast<int>(it - sm.palette.begin()) + 1;
    }
    return loc;
}

void splice_local(PathBuilder& b, const SubMap& sm, const RecolorPath& p) {
    for (const auto& s : p.steps)
        b.recolor(sm.verts[s.vertex], sm.palette[s.to - 1]);
}

void replay(PathBuilder& b, const RecolorPath& p) {
    for (const auto& s : p.steps) b.recolor(s.vertex, s.to);
}

}  // namespace

// ---------------------------------------------------------------------------
// Primitives

RecolorPath renaming_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                          int ell) {
    if (!check_proper(g, phi, ell) || !check_proper(g, psi, ell))
        throw ParameterError("renaming endpoints must be proper ell-colorings");
    auto blocks = color_classes(phi);
    if (blocks != color_classes(psi))
        throw ClassMismatch("endpoint colorings have different color classes");
    PathBuilder b(g, ell, phi);
    auto cur_of = [&](const std::vector<int>& blk) { return b.color(blk[0]); };
    auto target_of = [&](const std::vector<int>& blk) { return psi[blk[0]]; };
    auto move_block = [&](const std::vector<int>& blk, int c) {
        for (int v : blk) b.recolor(v, c);
    };
    size_t guard = 0;
    for (;;) {
        if (++guard > 4 * blocks.size() + 4)
            throw InternalError("renaming did not converge");
        bool progress = false, done = true;
        for (size_t i = 0; i < blocks.size(); ++i) {
            int t = target_of(blocks[i]);
            if (cur_of(blocks[i]) == t) continue;
            done = false;
            bool taken = false;
            for (size_t j = 0; j < blocks.size(); ++j)
                if (j != i && cur_of(blocks[j]) == t) { taken = true; break; }
            if (!taken) {
                move_block(blocks[i], t);
                progress = true;
            }
        }
        if (done) break;
        if (progress) continue;
        // every misplaced block's target is occupied: break one cycle via a
        // color unused by all blocks
        std::vector<int> used;
        for (const auto& blk : blocks) used.push_back(cur_of(blk));
        int f = least_free(full_palette(ell), used);
        if (f < 0) throw NoSpareColor("no free color to break a renaming cycle");
        for (const auto& blk : blocks)
            if (cur_of(blk) != target_of(blk)) { move_block(blk, f); break; }
    }
    return b.take();
}

namespace {

// Target-driven recoloring of one clique; <= 2 moves per vertex.  Targets
// must be distinct on the clique and conflicts must be internal to it.
void solve_clique(const Graph& g, PathBuilder& b, const std::vector<int>& Q,
                  const Coloring& target, const std::vector<int>& palette) {
    size_t guard = 0;
    for (;;) {
        if (++guard > 4 * Q.size() + 4)
            throw InternalError("clique renaming did not converge");
        bool progress = false, done = true;
        for (int v : Q) {
            if (b.color(v) == target[v]) continue;
            done = false;
            bool taken = false;
            for (int w : Q)
                if (w != v && b.color(w) == target[v]) { taken = true; break; }
            if (!taken) {
                b.recolor(v, target[v]);
                progress = true;
            }
        }
        if (done) break;
        if (progress) continue;
        for (int v : Q)
            if (b.color(v) != target[v]) {
                std::vector<int> used;
                for (int w : Q) used.push_back(b.color(w));
                for (int w : g.neighbors(v)) used.push_back(b.color(w));
                int f = least_free(palette, used);
                if (f < 0) throw NoSpareColor("no spare color in a clique");
                b.recolor(v, f);
                break;
            }
    }
}

}  // namespace

RecolorPath cluster_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                         int ell) {
    if (!check_proper(g, phi, ell) || !check_proper(g, psi, ell))
        throw ParameterError("cluster endpoints must be proper ell-colorings");
    auto comps = connected_components(g);
    for (const auto& q : comps)
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = i + 1; j < q.size(); ++j)
                if (!g.adjacent(q[i], q[j]))
                    throw NotP3Free("graph has an induced P3");
    PathBuilder b(g, ell, phi);
    for (const auto& q : comps) solve_clique(g, b, q, psi, full_palette(ell));
    return b.take();
}

namespace {

std::vector<RecolorStep> chordal_rec(const Graph& g, const std::vector<int>& peo,
                                     const std::vector<int>& pos, size_t k,
                                     const Coloring& start, const Coloring& target,
                                     int ell) {
    if (k == peo.size()) return {};
    int v = peo[k];
    auto inner = chordal_rec(g, peo, pos, k + 1, start, target, ell);
    std::vector<RecolorStep> out;
    Coloring state = start;
    auto do_step = [&](int w, int c) {
        out.push_back({w, state[w], c});
        state[w] = c;
    };
    for (const auto& s : inner) {
        if (g.adjacent(v, s.vertex) && state[v] == s.to) {
            // v's active neighbors form a clique; a spare color exists
            std::vector<int> forb{s.to};
            for (int w : g.neighbors(v))
                if (pos[w] >= static_cast<int>(k)) forb.push_back(state[w]);
            int c = least_free(full_palette(ell), forb);
            if (c < 0) throw NoSpareColor("no spare color at a simplicial vertex");
            do_step(v, c);
        }
        do_step(s.vertex, s.to);
    }
    if (state[v] != target[v]) do_step(v, target[v]);
    return out;
}

}  // namespace

RecolorPath chordal_path(const Graph& g, const std::vector<int>& peo,
                         const Coloring& phi, const Coloring& psi, int ell) {
    if (!check_proper(g, phi, ell) || !check_proper(g, psi, ell))
        throw ParameterError("chordal endpoints must be proper ell-colorings");
    if (static_cast<int>(peo.size()) != g.n())
        throw ParameterError("elimination order has the wrong length");
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < peo.size(); ++i) {
        int v = peo[i];
        if (v < 0 || v >= g.n() || pos[v] != -1)
            throw ParameterError("elimination order is not a permutation");
        pos[v] = static_cast<int>(i);
    }
    for (int v : peo)  // later neighbors must form a clique
        for (int a : g.neighbors(v))
            for (int bb : g.neighbors(v))
                if (a < bb && pos[a] > pos[v] && pos[bb] > pos[v] &&
                    !g.adjacent(a, bb))
                    throw NotChordal("order is not a perfect elimination order");
    RecolorPath p;
    p.ell = ell;
    p.start = phi;
    p.steps = chordal_rec(g, peo, pos, 0, phi, psi, ell);
    validate_path(g, p);
    return p;
}

RecolorPath three_k1_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                          int ell, long long budget) {
    if (has_induced(g, PatternId::ThreeK1))
        throw NotThreeK1Free("graph has three pairwise nonadjacent vertices");
    return oracle_path(g, ell, phi, psi, budget);
}

RecolorPath cycle_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                       int ell, long long budget) {
    if (g.n() < 3 || connected_components(g).size() != 1)
        throw ParameterError("cycle_path expects a single cycle");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) throw ParameterError("cycle_path expects a cycle");
    if (ell < 4) throw ThresholdTooLow("cycles need at least 4 colors to mix");
    RecolorPath p = oracle_path(g, ell, phi, psi, budget);
    if (p.length() > 4 * static_cast<size_t>(g.n()))
        throw InternalError("cycle path exceeds 4n steps");
    return p;
}

RecolorPath compose_union(const Graph& g, const std::vector<std::vector<int>>& comps,
                          const std::vector<RecolorPath>& parts, int ell) {
    if (comps.size() != parts.size())
        throw ParameterError("one part path per component required");
    Coloring start(g.n(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        if (parts[i].ell != ell) throw ParameterError("part palette mismatch");
        if (parts[i].start.size() != comps[i].size())
            throw ParameterError("part start size mismatch");
        for (size_t j = 0; j < comps[i].size(); ++j) {
            int v = comps[i][j];
            if (v < 0 || v >= g.n() || start[v] != 0)
                throw ParameterError("components must partition the vertices");
            start[v] = parts[i].start[j];
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (start[v] == 0) throw ParameterError("components must cover all vertices");
    PathBuilder b(g, ell, start);
    for (size_t i = 0; i < comps.size(); ++i) b.splice(comps[i], parts[i]);
    return b.take();
}

RecolorPath compose_join(const Graph& g, const std::vector<int>& side1,
                         const std::vector<int>& side2, const RecolorPath& p1,
                         const RecolorPath& p2, int ell) {
    if (side1.size() + side2.size() != static_cast<size_t>(g.n()))
        throw ParameterError("sides must partition the vertices");
    for (int u : side1)
        for (int v : side2)
            if (!g.adjacent(u, v))
                throw ParameterError("sides are not completely joined");
    if (p1.ell != ell || p2.ell != ell) throw ParameterError("palette mismatch");
    Coloring start(g.n(), 0);
    for (size_t j = 0; j < side1.size(); ++j) start[side1[j]] = p1.start[j];
    for (size_t j = 0; j < side2.size(); ++j) start[side2[j]] = p2.start[j];
    if (!check_proper(g, start, ell))
        throw PaletteClash("sides share a color at the start");
    PathBuilder b(g, ell, start);
    auto run = [&](const std::vector<int>& side, const RecolorPath& p) {
        for (const auto& s : p.steps) {
            try {
                b.recolor(side[s.vertex], s.to);
            } catch (const InternalError&) {
                throw PaletteClash("sides collide during composition");
            }
        }
    };
    run(side1, p1);
    run(side2, p2);
    return b.take();
}

RecolorPath lift_comparable(const Graph& g, int u, int v, const RecolorPath& inner,
                            const Coloring& phi, int target_u) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n() || g.adjacent(u, v))
        throw NotComparable("u and v must be distinct and nonadjacent");
    for (int w : g.neighbors(u))
        if (!g.adjacent(v, w))
            throw NotComparable("N(u) is not contained in N(v)");
    std::vector<int> verts;
    for (int w = 0; w < g.n(); ++w)
        if (w != u) verts.push_back(w);
    if (inner.start.size() != verts.size())
        throw ParameterError("inner path has the wrong vertex count");
    for (size_t i = 0; i < verts.size(); ++i)
        if (inner.start[i] != phi[verts[i]])
            throw ParameterError("inner start disagrees with phi on g-u");
    PathBuilder b(g, inner.ell, phi);
    for (const auto& s : inner.steps) {
        int w = verts[s.vertex];
        if (g.adjacent(u, w) && b.color(u) == s.to) b.recolor(u, b.color(v));
        b.recolor(w, s.to);
    }
    b.recolor(u, target_u);
    return b.take();
}

// ---------------------------------------------------------------------------
// Per-class canonicalization (local numbering: vertex i plays canonical
// role i of the family graph; palette 1..m)

namespace {

void check_threshold(bool ok, const char* what) {
    if (!ok) throw ThresholdTooLow(what);
}

// H1 roles: u1..u6 at 0..5, clique S at 6.. complete to {u3,u4,u6}.
// Makes the designated independent set monochromatic in a color absent from
// the rest; <= 1 move per vertex.  Returns that color.
int normalize_h1(PathBuilder& b, int s, int m) {
    const int u1 = 0, u2 = 1, u3 = 2, u4 = 3, u5 = 4, u6 = 5;
    auto pal = full_palette(m);
    if (s == 1) {
        // independent set {u3,u4,u5}
        int e = b.color(u5), s0 = 6;
        if (b.color(s0) != e) {
            b.recolor(u3, e);
            b.recolor(u4, e);
        } else {
            int c = least_free(pal, {b.color(u1), b.color(u2), e});
            if (c < 0) throw ThresholdTooLow("need a fourth color");
            if (b.color(u6) == c) b.recolor(u6, b.color(u2));
            b.recolor(u3, c);
            b.recolor(u4, c);
            b.recolor(u5, c);
        }
        return b.color(u3);
    }
    // independent set {u3,u4,u6}
    int a = b.color(u1), bb = b.color(u2), e = b.color(u5);
    std::vector<int> icols{b.color(u3), b.color(u4), b.color(u6)};
    std::sort(icols.begin(), icols.end());
    for (int c : icols)
        if (c != a && c != bb && c != e) {
            b.recolor(u3, c);
            b.recolor(u4, c);
            b.recolor(u6, c);
            return c;
        }
    // all of I is colored within {a, b, e}
    if (b.color(u3) == e || b.color(u4) == e) {
        int cp = least_free(pal, {a, bb, e});
        if (cp < 0) throw ThresholdTooLow("need a fourth color");
        b.recolor(u5, cp);
        b.recolor(u3, e);
        b.recolor(u4, e);
        b.recolor(u6, e);
        return e;
    }
    // now u3 holds a, u4 holds b, u6 holds one of them
    int cp = least_free(pal, {a, bb, e});
    if (cp < 0) throw ThresholdTooLow("need a fourth color");
    if (b.color(u6) == a) {
        b.recolor(u1, cp);
        b.recolor(u4, a);
        return a;
    }
    b.recolor(u2, cp);
    b.recolor(u3, bb);
    return bb;
}

// H2 roles: u,v,w at 0,1,2, then cliques S1..S4 (v complete to S1,S2,S3;
// w to S2,S3,S4; u to S1,S4; S2 complete to S1,S3; S3 complete to S4).
int normalize_h2(const Graph& g, PathBuilder& b, const std::vector<int>& params,
                 int m) {
    const int u = 0, v = 1, w = 2;
    std::array<std::vector<int>, 4> S;
    int at = 3;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < params[i]; ++j) S[i].push_back(at++);
    auto colors_of = [&](const std::vector<int>& vs) {
        std::vector<int> cs;
        for (int x : vs) cs.push_back(b.color(x));
        return cs;
    };
    int c1 = b.color(v), c2 = b.color(w);
    if (c1 == c2) {
        b.recolor(u, c1);
        return c1;
    }
    auto s4cols = colors_of(S[3]);
    if (std::find(s4cols.begin(), s4cols.end(), c1) == s4cols.end()) {
        b.recolor(u, c1);
        b.recolor(w, c1);
        return c1;
    }
    auto s1cols = colors_of(S[0]);
    if (std::find(s1cols.begin(), s1cols.end(), c2) == s1cols.end()) {
        b.recolor(u, c2);
        b.recolor(v, c2);
        return c2;
    }
    std::vector<int> others;
    for (int x = 0; x < g.n(); ++x)
        if (x != u) others.push_back(b.color(x));
    int c = least_free(full_palette(m), others);
    if (c >= 0) {
        b.recolor(u, c);
        b.recolor(v, c);
        b.recolor(w, c);
        return c;
    }
    // two maximal cliques Q1 = S1+S2+v, Q2 = S3+S4+w cover g-u; neither
    // color set covers the palette, so each side owns a private color
    std::set<int> q1, q2;
    for (int x : S[0]) q1.insert(b.color(x));
    for (int x : S[1]) q1.insert(b.color(x));
    q1.insert(c1);
    for (int x : S[2]) q2.insert(b.color(x));
    for (int x : S[3]) q2.insert(b.color(x));
    q2.insert(c2);
    auto private_of = [&](const std::set<int>& own, const std::set<int>& other) {
        for (int cc : own)
            if (!other.count(cc) && cc != b.color(u)) return cc;
        return -1;
    };
    int cs = private_of(q1, q2);
    if (cs >= 0) {
        for (int x : S[3])
            if (b.color(x) == c1) { b.recolor(x, cs); break; }
        b.recolor(w, c1);
        b.recolor(u, c1);
        return c1;
    }
    cs = private_of(q2, q1);
    if (cs < 0) throw InternalError("no private clique color");
    for (int x : S[0])
        if (b.color(x) == c2) { b.recolor(x, cs); break; }
    b.recolor(v, c2);
    b.recolor(u, c2);
    return c2;
}

// Full Petersen graph, canonical numbering (outer 0..4, inner 5..9).
// Independent set {0,2,8,9}; <= 2 moves per vertex.
int normalize_petersen(const Graph& p, PathBuilder& b, int m) {
    const std::array<int, 4> I{0, 2, 8, 9};
    auto pal = full_palette(m);
    std::pair<int, int> eq{-1, -1};
    for (size_t i = 0; i < I.size() && eq.first < 0; ++i)
        for (size_t j = i + 1; j < I.size(); ++j)
            if (b.color(I[i]) == b.color(I[j])) { eq = {I[i], I[j]}; break; }
    if (eq.first < 0) {
        // all four distinct: fold two outsiders onto the first pair's colors
        b.recolor(7, b.color(0));
        b.recolor(4, b.color(2));
        b.recolor(9, b.color(8));
        eq = {8, 9};
    }
    // move the shared pair's color onto the whole set, up to symmetry
    static const std::vector<std::vector<int>> auts =
        all_automorphisms(build_family(FamilySpec::leaf(FamilyTag::Petersen)));
    const std::vector<int>* alpha = nullptr;
    for (const auto& a : auts) {
        if (a[eq.first] != 8 || a[eq.second] != 9) continue;
        bool stab = true;
        for (int x : I) {
            bool in = false;
            for (int y : I) in = in || a[x] == y;
            stab = stab && in;
        }
        if (stab) { alpha = &a; break; }
    }
    if (!alpha) throw InternalError("no symmetry maps the pair in place");
    auto role = [&](int k) {
        for (int x = 0; x < 10; ++x)
            if ((*alpha)[x] == k) return x;
        throw InternalError("bad automorphism");
    };
    int r1 = role(0), r2 = role(1), r3 = role(2), r7 = role(6);
    int c3 = b.color(eq.first);
    if (b.color(r2) != c3) {
        b.recolor(r1, c3);
        b.recolor(r3, c3);
    } else {
        int c = least_free(pal, closed_nbhd_colors(p, b.current(), r2));
        if (c >= 0) {
            b.recolor(r2, c);
        } else {
            int k = b.color(r7);
            b.recolor(r7, b.color(r1));
            b.recolor(r2, k);
        }
        b.recolor(r1, c3);
        b.recolor(r3, c3);
    }
    return c3;
}

void assert_isolated_color(const Graph& g, const Coloring& cur,
                           const std::vector<int>& I, int cI) {
    std::vector<bool> in_i(g.n(), false);
    for (int v : I) {
        in_i[v] = true;
        if (cur[v] != cI)
            throw InternalError("independent set is not monochromatic");
    }
    for (int v = 0; v < g.n(); ++v)
        if (!in_i[v] && cur[v] == cI)
            throw InternalError("withheld color appears outside the set");
}

// Recolors the complement of I to the target classes using a solver that
// only sees the remaining m-1 colors.
void reduce_over_independent(const Graph& g, PathBuilder& b,
                             const std::vector<int>& I, int cI, int m,
                             const std::vector<std::vector<int>>& blocks,
                             const InnerSolver& solver) {
    assert_isolated_color(g, b.current(), I, cI);
    SubMap sm;
    std::vector<bool> in_i(g.n(), false);
    for (int v : I) in_i[v] = true;
    for (int v = 0; v < g.n(); ++v)
        if (!in_i[v]) sm.verts.push_back(v);
    for (int c = 1; c <= m; ++c)
        if (c != cI) sm.palette.push_back(c);
    Graph sub = g.induced(sm.verts);
    Coloring cur = to_local(sm, b.current());
    Coloring target(sm.verts.size(), 0);
    std::vector<int> inv(g.n(), -1);
    for (size_t i = 0; i < sm.verts.size(); ++i) inv[sm.verts[i]] = (int)i;
    for (size_t j = 0; j < blocks.size(); ++j)
        for (int v : blocks[j]) {
            if (inv[v] < 0) throw InternalError("target block leaves the set");
            target[inv[v]] = static_cast<int>(j) + 1;
        }
    for (int c : target)
        if (c == 0) throw InternalError("target blocks must cover g-I");
    RecolorPath inner = solver(sub, cur, target, m - 1);
    if (inner.start != cur) throw InternalError("inner solver changed the start");
    splice_local(b, sm, inner);
    if (to_local(sm, b.current()) != target)
        throw InternalError("inner solver missed the target");
}

InnerSolver cluster_solver() {
    return [](const Graph& h, const Coloring& from, const Coloring& to, int ell) {
        return cluster_path(h, from, to, ell);
    };
}

InnerSolver oracle_partition_solver() {
    return [](const Graph& h, const Coloring& from, const Coloring& to, int ell) {
        RecolorPath p = oracle_path_to_partition(h, ell, from, color_classes(to));
        // pin the exact colors afterwards via class renaming
        Coloring mid = p.end();
        Coloring goal(to.size());
        auto mb = color_classes(mid);
        for (const auto& blk : mb)
            for (int v : blk) goal[v] = to[blk[0]];
        if (color_classes(goal) != mb)
            throw InternalError("partition targets disagree");
        return concat_paths(p, renaming_path(h, mid, goal, ell));
    };
}

// Canonical color classes per core class, in local role numbering.
std::vector<std::vector<int>> core_blocks_local(const Graph& sub,
                                                const ClassWitness& w) {
    std::vector<std::vector<int>> blocks;
    auto chrom_blocks = [&]() { return color_classes(chromatic_number(sub).second); };
    switch (w.tag) {
        case CoreTag::C6Core:
            blocks = {{0, 2, 4}, {1, 3, 5}};
            break;
        case CoreTag::F2Core:
            blocks = {{0, 2, 4}, {1, 3, 5}, {6, 7, 8}};
            break;
        case CoreTag::BlowupC5:
            blocks = chrom_blocks();
            break;
        case CoreTag::H1: {
            int s = w.params[0];
            if (s == 1) {
                blocks = {{2, 3, 4}, {0, 5}, {1, 6}};
            } else {
                blocks.push_back({2, 3, 5});                    // independent set
                blocks.push_back({0, 6});                       // u1 + s1
                blocks.push_back({1, 7});                       // u2 + s2
                std::vector<int> five{4};                       // u5 (+ s3)
                if (s >= 3) five.push_back(8);
                blocks.push_back(five);
                for (int j = 3; j < s; ++j) blocks.push_back({6 + j});
            }
            break;
        }
        case CoreTag::H2: {
            blocks.push_back({0, 1, 2});
            std::vector<int> rest;
            for (int v = 3; v < sub.n(); ++v) rest.push_back(v);
            Graph h = sub.induced(rest);
            for (auto blk : color_classes(chromatic_number(h).second)) {
                for (int& v : blk) v = rest[v];
                blocks.push_back(blk);
            }
            break;
        }
        case CoreTag::H3: {
            int x = w.params[0];
            blocks = {{0, 3}, {1, 5, 6}, {2, 4, 7}};
            for (int j = 2; j < x; ++j) blocks.push_back({6 + j});
            break;
        }
        case CoreTag::H4:
        case CoreTag::H4Star: {
            int p = w.params[0];
            int q = w.tag == CoreTag::H4Star ? p : w.params[1];
            int r = w.tag == CoreTag::H4Star ? 0 : w.params[2];
            std::array<int, 6> V{0, 1, 2, 3, 4, 5};
            std::vector<int> S1, S2, S3;
            for (int j = 0; j < p; ++j) S1.push_back(6 + j);
            for (int j = 0; j < q; ++j) S2.push_back(6 + p + j);
            for (int j = 0; j < r; ++j) S3.push_back(6 + p + q + j);
            if (p < q) {
                V = {3, 2, 1, 0, 5, 4};
                std::swap(S1, S2);
                std::swap(p, q);
            }
            blocks.push_back({V[1], V[3], V[5]});
            blocks.push_back({V[0], V[2], V[4]});
            for (int j = 0; j < q; ++j) blocks.push_back({S1[j], S2[j]});
            for (int j = q; j < p; ++j) blocks.push_back({S1[j]});
            for (int x : S3) blocks.push_back({x});
            break;
        }
        case CoreTag::H5: {
            int p = w.params[0], q = w.params[1];
            std::array<int, 6> V{0, 1, 2, 3, 4, 5};
            std::vector<int> S1, S2;
            for (int j = 0; j < p; ++j) S1.push_back(6 + j);
            for (int j = 0; j < q; ++j) S2.push_back(6 + p + j);
            if (p == 1 && q > 1) {
                V = {4, 3, 2, 1, 0, 5};
                std::swap(S1, S2);
                std::swap(p, q);
            }
            if (q == 1) {
                blocks = {{V[0], V[2]}, {V[1], S2[0]}, {V[3], V[5]}, {V[4], S1[0]}};
                for (int j = 1; j < p; ++j) blocks.push_back({S1[j]});
            } else {
                blocks = {{V[0], S2[0]}, {V[1], S2[1]}, {V[2], V[5]},
                          {V[3], S1[1]}, {V[4], S1[0]}};
                for (int j = 2; j < p; ++j) blocks.push_back({S1[j]});
                for (int j = 2; j < q; ++j) blocks.push_back({S2[j]});
            }
            break;
        }
        case CoreTag::PetersenSub: {
            static const std::vector<std::vector<int>> pet{{0, 2, 8, 9},
                                                           {1, 3, 5},
                                                           {4, 6, 7}};
            std::vector<int> cls(10, -1);
            for (size_t j = 0; j < pet.size(); ++j)
                for (int v : pet[j]) cls[v] = static_cast<int>(j);
            std::array<std::vector<int>, 3> acc;
            for (int i = 0; i < sub.n(); ++i) acc[cls[w.canon[i]]].push_back(i);
            for (auto& blk : acc)
                if (!blk.empty()) blocks.push_back(blk);
            break;
        }
    }
    return normalize_blocks(std::move(blocks));
}

// Path from phi to a coloring realizing the canonical classes; local
// numbering, palette 1..m.
RecolorPath core_scaffold_local(const Graph& sub, const ClassWitness& w,
                                const Coloring& phi, int m) {
    PathBuilder b(sub, m, phi);
    auto pal = full_palette(m);
    auto blocks = core_blocks_local(sub, w);
    switch (w.tag) {
        case CoreTag::C6Core: {
            check_threshold(m >= 4, "C6 needs at least 4 colors");
            replay(b, oracle_path_to_partition(sub, m, phi, blocks));
            break;
        }
        case CoreTag::BlowupC5: {
            check_threshold(m >= chromatic_number(sub).first + 1,
                            "need chi+1 colors");
            replay(b, oracle_path_to_partition(sub, m, phi, blocks));
            break;
        }
        case CoreTag::H1: {
            check_threshold(m >= chromatic_number(sub).first + 1,
                            "need chi+1 colors");
            int cI = normalize_h1(b, w.params[0], m);
            std::vector<int> I =
                w.params[0] == 1 ? std::vector<int>{2, 3, 4} : std::vector<int>{2, 3, 5};
            std::vector<std::vector<int>> rest;
            for (const auto& blk : blocks)
                if (blk != I) rest.push_back(blk);
            reduce_over_independent(sub, b, I, cI, m, rest, cluster_solver());
            break;
        }
        case CoreTag::H2: {
            check_threshold(m >= chromatic_number(sub).first + 1,
                            "need chi+1 colors");
            int cI = normalize_h2(sub, b, w.params, m);
            std::vector<int> I{0, 1, 2};
            std::vector<std::vector<int>> rest;
            for (const auto& blk : blocks)
                if (blk != I) rest.push_back(blk);
            reduce_over_independent(sub, b, I, cI, m, rest,
                                    oracle_partition_solver());
            break;
        }
        case CoreTag::H3: {
            check_threshold(m >= chromatic_number(sub).first + 1,
                            "need chi+1 colors");
            const int v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5;
            const int x1 = 6, x2 = 7;
            if (b.color(v3) == b.color(x1))
                b.recolor(v3, pick_free(b, sub, pal, v3));
            b.recolor(v2, b.color(x1));
            if (b.color(v5) == b.color(x1))
                b.recolor(v5, pick_free(b, sub, pal, v5));
            b.recolor(v6, b.color(x1));
            b.recolor(v3, b.color(x2));
            b.recolor(v5, b.color(x2));
            b.recolor(v4, b.color(v1));
            break;
        }
        case CoreTag::H4:
        case CoreTag::H4Star: {
            int p = w.params[0];
            int q = w.tag == CoreTag::H4Star ? p : w.params[1];
            int r = w.tag == CoreTag::H4Star ? 0 : w.params[2];
            if (w.tag == CoreTag::H4Star)
                check_threshold(m >= degeneracy(sub).first + 2,
                                "need degeneracy+2 colors");
            else
                check_threshold(m >= chromatic_number(sub).first + 1,
                                "need chi+1 colors");
            std::array<int, 6> V{0, 1, 2, 3, 4, 5};
            std::vector<int> S1, S2;
            for (int j = 0; j < p; ++j) S1.push_back(6 + j);
            for (int j = 0; j < q; ++j) S2.push_back(6 + p + j);
            if (p < q) {
                V = {3, 2, 1, 0, 5, 4};
                std::swap(S1, S2);
                std::swap(p, q);
            }
            int v1 = V[0], v2 = V[1], v3 = V[2], v4 = V[3], v5 = V[4], v6 = V[5];
            if (b.color(v5) == b.color(v2))
                b.recolor(v5, pick_free(b, sub, pal, v5));
            b.recolor(v6, b.color(v2));
            b.recolor(v4, b.color(v2));
            b.recolor(v5, b.color(v3));
            b.recolor(v1, b.color(v3));
            // pair S2 with S1 by index: rename within the clique S2
            Coloring target = b.current();
            for (int j = 0; j < q; ++j) target[S2[j]] = b.color(S1[j]);
            solve_clique(sub, b, S2, target, pal);
            break;
        }
        case CoreTag::H5: {
            check_threshold(m >= chromatic_number(sub).first + 1,
                            "need chi+1 colors");
            int p = w.params[0], q = w.params[1];
            std::array<int, 6> V{0, 1, 2, 3, 4, 5};
            std::vector<int> S1, S2;
            for (int j = 0; j < p; ++j) S1.push_back(6 + j);
            for (int j = 0; j < q; ++j) S2.push_back(6 + p + j);
            if (p == 1 && q > 1) {
                V = {4, 3, 2, 1, 0, 5};
                std::swap(S1, S2);
                std::swap(p, q);
            }
            int v1 = V[0], v2 = V[1], v3 = V[2], v4 = V[3], v5 = V[4], v6 = V[5];
            if (q == 1) {
                int s1 = S1[0], s2 = S2[0];
                if (b.color(v1) == b.color(s2))
                    b.recolor(v1, pick_free(b, sub, pal, v1));
                b.recolor(v2, b.color(s2));
                if (b.color(v4) == b.color(v1))
                    b.recolor(v4, pick_free(b, sub, pal, v4));
                b.recolor(v3, b.color(v1));
                b.recolor(v4, b.color(v6));
                b.recolor(v5, b.color(s1));
            } else {
                int s1 = S1[0], s1p = S1[1], s2 = S2[0], s2p = S2[1];
                if (b.color(v2) == b.color(s2))
                    b.recolor(v2, pick_free(b, sub, pal, v2));
                b.recolor(v1, b.color(s2));
                if (b.color(v4) == b.color(s1))
                    b.recolor(v4, pick_free(b, sub, pal, v4));
                b.recolor(v5, b.color(s1));
                b.recolor(v2, b.color(s2p));
                b.recolor(v4, b.color(s1p));
                b.recolor(v3, b.color(v6));
            }
            break;
        }
        case CoreTag::F2Core: {
            check_threshold(m >= degeneracy(sub).first + 2,
                            "need degeneracy+2 colors");
            const int v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4, v6 = 5;
            const int s1 = 6, s2 = 7, s3 = 8;
            if (b.color(v4) == b.color(v1))
                b.recolor(v4, pick_free(b, sub, pal, v4));
            if (b.color(s2) == b.color(v1))
                b.recolor(s2, pick_free(b, sub, pal, s2));
            b.recolor(v3, b.color(v1));
            if (b.color(v5) == b.color(v2))
                b.recolor(v5, pick_free(b, sub, pal, v5));
            if (b.color(s3) == b.color(v2))
                b.recolor(s3, pick_free(b, sub, pal, s3));
            b.recolor(v6, b.color(v2));
            b.recolor(v4, b.color(v2));
            b.recolor(v5, b.color(v1));
            b.recolor(s2, b.color(s1));
            b.recolor(s3, b.color(s1));
            break;
        }
        case CoreTag::PetersenSub: {
            check_threshold(m >= 4, "need at least 4 colors");
            Graph pet = build_family(FamilySpec::leaf(FamilyTag::Petersen));
            Coloring pcol(10, 0);
            std::vector<int> inv(10, -1);
            for (int i = 0; i < sub.n(); ++i) {
                pcol[w.canon[i]] = phi[i];
                inv[w.canon[i]] = i;
            }
            for (int v = 0; v < 10; ++v) {
                if (pcol[v] != 0) continue;
                std::vector<int> forb;
                for (int u : pet.neighbors(v))
                    if (pcol[u] != 0) forb.push_back(pcol[u]);
                pcol[v] = least_free(pal, forb);  // max degree 3 < m
            }
            PathBuilder pb(pet, m, pcol);
            int cI = normalize_petersen(pet, pb, m);
            reduce_over_independent(pet, pb, {0, 2, 8, 9}, cI, m,
                                    {{1, 3, 5}, {4, 6, 7}}, cluster_solver());
            for (const auto& s : pb.take().steps)
                if (inv[s.vertex] >= 0) b.recolor(inv[s.vertex], s.to);
            break;
        }
    }
    if (color_classes(b.current()) != blocks)
        throw InternalError("canonicalization missed its classes");
    return b.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificate-driven scaffolding

namespace {

Graph drop_vertex_edges(const Graph& g, int u) {
    std::vector<std::pair<int, int>> es;
    for (auto [a, bb] : g.edges())
        if (a != u && bb != u) es.push_back({a, bb});
    return Graph(g.n(), es);
}

std::vector<std::vector<int>> node_blocks(const Graph& g,
                                          const StructureCertificate& cert);

// Brings the certificate's vertex set to its canonical classes using only
// the given colors; every other vertex keeps its color.
void scaffold_node(const Graph& g, PathBuilder& b,
                   const StructureCertificate& cert, std::vector<int> palette) {
    switch (cert.kind) {
        case CertKind::Chordal: {
            std::vector<int> vs = cert.order;
            std::sort(vs.begin(), vs.end());
            SubMap sm{vs, palette};
            Graph sub = g.induced(vs);
            auto blocks = color_classes(chromatic_number(sub).second);
            Coloring target(vs.size());
            for (size_t j = 0; j < blocks.size(); ++j)
                for (int v : blocks[j]) target[v] = static_cast<int>(j) + 1;
            std::vector<int> inv(g.n(), -1);
            for (size_t i = 0; i < vs.size(); ++i) inv[vs[i]] = (int)i;
            std::vector<int> peo;
            for (int v : cert.order) peo.push_back(inv[v]);
            RecolorPath p = chordal_path(sub, peo, to_local(sm, b.current()),
                                         target, (int)palette.size());
            splice_local(b, sm, p);
            break;
        }
        case CertKind::JoinPeel: {
            for (int v : cert.peel) {
                auto it = std::find(palette.begin(), palette.end(), b.color(v));
                if (it == palette.end())
                    throw InternalError("peeled clique color outside palette");
                palette.erase(it);
            }
            scaffold_node(g, b, cert.inner[0], std::move(palette));
            break;
        }
        case CertKind::UnionPeel: {
            scaffold_node(g, b, cert.inner[0], palette);
            auto inner_blocks = node_blocks(g, cert.inner[0]);
            int t = b.color(inner_blocks[0][0]);
            for (int q : cert.peel) b.recolor(q, t);
            break;
        }
        case CertKind::Comparable: {
            Graph gu = drop_vertex_edges(g, cert.u);
            PathBuilder tb(gu, b.ell(), b.current());
            scaffold_node(gu, tb, cert.inner[0], palette);
            for (const auto& s : tb.take().steps) {
                if (g.adjacent(cert.u, s.vertex) && b.color(cert.u) == s.to)
                    b.recolor(cert.u, b.color(cert.v));
                b.recolor(s.vertex, s.to);
            }
            b.recolor(cert.u, b.color(cert.v));
            break;
        }
        case CertKind::Core: {
            const ClassWitness& w = *cert.core;
            SubMap sm{w.verts, palette};
            Graph sub = g.induced(w.verts);
            RecolorPath p = core_scaffold_local(sub, w, to_local(sm, b.current()),
                                                (int)palette.size());
            splice_local(b, sm, p);
            break;
        }
    }
}

std::vector<std::vector<int>> node_blocks(const Graph& g,
                                          const StructureCertificate& cert) {
    switch (cert.kind) {
        case CertKind::Chordal: {
            std::vector<int> vs = cert.order;
            std::sort(vs.begin(), vs.end());
            auto blocks = color_classes(chromatic_number(g.induced(vs)).second);
            for (auto& blk : blocks)
                for (int& v : blk) v = vs[v];
            return normalize_blocks(std::move(blocks));
        }
        case CertKind::JoinPeel: {
            auto blocks = node_blocks(g, cert.inner[0]);
            for (int v : cert.peel) blocks.push_back({v});
            return normalize_blocks(std::move(blocks));
        }
        case CertKind::UnionPeel: {
            auto blocks = node_blocks(g, cert.inner[0]);
            for (int v : cert.peel) blocks[0].push_back(v);
            return normalize_blocks(std::move(blocks));
        }
        case CertKind::Comparable: {
            Graph gu = drop_vertex_edges(g, cert.u);
            auto blocks = node_blocks(gu, cert.inner[0]);
            for (auto& blk : blocks)
                if (std::find(blk.begin(), blk.end(), cert.v) != blk.end()) {
                    blk.push_back(cert.u);
                    break;
                }
            return normalize_blocks(std::move(blocks));
        }
        case CertKind::Core: {
            auto blocks = core_blocks_local(g.induced(cert.core->verts), *cert.core);
            for (auto& blk : blocks)
                for (int& v : blk) v = cert.core->verts[v];
            return normalize_blocks(std::move(blocks));
        }
    }
    throw InternalError("bad certificate node");
}

RecolorPath scaffold_path(const Graph& g, const StructureCertificate& cert,
                          const Coloring& phi, int ell) {
    PathBuilder b(g, ell, phi);
    scaffold_node(g, b, cert, full_palette(ell));
    if (color_classes(b.current()) != node_blocks(g, cert))
        throw InternalError("scaffold missed the canonical classes");
    return b.take();
}

// phi -> psi on one connected in-scope graph with a known certificate.
RecolorPath solve_connected(const Graph& g, const StructureCertificate& cert,
                            const Coloring& phi, const Coloring& psi, int ell) {
    if (phi == psi) return RecolorPath{ell, phi, {}};
    if (cert.kind == CertKind::Chordal)
        return chordal_path(g, cert.order, phi, psi, ell);
    RecolorPath p1 = scaffold_path(g, cert, phi, ell);
    RecolorPath p2 = scaffold_path(g, cert, psi, ell);
    RecolorPath mid = renaming_path(g, p1.end(), p2.end(), ell);
    return concat_paths(concat_paths(p1, mid), reverse_path(p2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Public class operations

RecolorPath canonicalize_chi(const Graph& g, const ClassWitness& w,
                             const Coloring& phi, int ell) {
    if (!validate_witness(g, w)) throw ParameterError("invalid class witness");
    if (!check_proper(g, phi, ell)) throw ParameterError("phi is not proper");
    switch (w.tag) {
        case CoreTag::H3:
        case CoreTag::H4:
        case CoreTag::H4Star:
        case CoreTag::H5:
        case CoreTag::F2Core:
        case CoreTag::C6Core:
            break;
        default:
            throw ParameterError("class has no direct canonicalization");
    }
    SubMap sm{w.verts, full_palette(ell)};
    Graph sub = g.induced(w.verts);
    RecolorPath p = core_scaffold_local(sub, w, to_local(sm, phi), ell);
    PathBuilder b(g, ell, phi);
    splice_local(b, sm, p);
    return b.take();
}

RecolorPath normalize_independent(const Graph& g, const ClassWitness& w,
                                  const Coloring& phi, int ell) {
    if (!validate_witness(g, w)) throw ParameterError("invalid class witness");
    if (!check_proper(g, phi, ell)) throw ParameterError("phi is not proper");
    if (w.tag == CoreTag::PetersenSub) {
        if (g.n() != 10)
            throw ParameterError("normalization needs the full Petersen graph");
        if (ell < 4) throw ThresholdTooLow("need at least 4 colors");
        Graph pet = build_family(FamilySpec::leaf(FamilyTag::Petersen));
        Coloring pcol(10);
        std::vector<int> inv(10);  // canonical index -> vertex of g
        for (int i = 0; i < 10; ++i) {
            pcol[w.canon[i]] = phi[w.verts[i]];
            inv[w.canon[i]] = w.verts[i];
        }
        PathBuilder pb(pet, ell, pcol);
        int cI = normalize_petersen(pet, pb, ell);
        assert_isolated_color(pet, pb.current(), {0, 2, 8, 9}, cI);
        PathBuilder b(g, ell, phi);
        for (const auto& s : pb.take().steps) b.recolor(inv[s.vertex], s.to);
        return b.take();
    }
    SubMap sm{w.verts, full_palette(ell)};
    Graph sub = g.induced(w.verts);
    PathBuilder lb(sub, ell, to_local(sm, phi));
    std::vector<int> I;
    int cI;
    switch (w.tag) {
        case CoreTag::H1:
            if (ell <= chromatic_number(sub).first)
                throw ThresholdTooLow("need chi+1 colors");
            cI = normalize_h1(lb, w.params[0], ell);
            I = w.params[0] == 1 ? std::vector<int>{2, 3, 4}
                                 : std::vector<int>{2, 3, 5};
            break;
        case CoreTag::H2:
            if (ell <= chromatic_number(sub).first)
                throw ThresholdTooLow("need chi+1 colors");
            cI = normalize_h2(sub, lb, w.params, ell);
            I = {0, 1, 2};
            break;
        default:
            throw ParameterError("class has no independent-set normalization");
    }
    assert_isolated_color(sub, lb.current(), I, cI);
    PathBuilder b(g, ell, phi);
    splice_local(b, sm, lb.take());
    return b.take();
}

RecolorPath independent_reduction(
    const Graph& g, const std::vector<int>& I, int ell,
    const std::function<RecolorPath(const Coloring&)>& normalize,
    const InnerSolver& inner_solver,
    const std::vector<std::vector<int>>& inner_partition, const Coloring& phi) {
    if (I.empty()) throw ParameterError("empty independent set");
    for (int u : I)
        for (int v : I)
            if (u != v && g.adjacent(u, v))
                throw ParameterError("set is not independent");
    std::vector<int> rest;
    std::vector<bool> in_i(g.n(), false);
    for (int v : I) in_i[v] = true;
    for (int v = 0; v < g.n(); ++v)
        if (!in_i[v]) rest.push_back(v);
    if (chromatic_number(g).first != chromatic_number(g.induced(rest)).first + 1)
        throw ParameterError("removing the set must drop chi by one");
    RecolorPath norm = normalize(phi);
    if (norm.ell != ell || norm.start != phi)
        throw ParameterError("normalization must start at phi");
    PathBuilder b(g, ell, phi);
    replay(b, norm);
    int cI = b.color(I[0]);
    reduce_over_independent(g, b, I, cI, ell, inner_partition, inner_solver);
    return b.take();
}

RecolorPath petersen_sub_path(const Graph& g, const ClassWitness& w,
                              const Coloring& phi, const Coloring& psi, int ell) {
    if (w.tag != CoreTag::PetersenSub || !validate_witness(g, w))
        throw NotEmbeddable("witness does not embed g into the Petersen graph");
    return chi_scaffold_path(g, w, phi, psi, ell);
}

RecolorPath chi_scaffold_path(const Graph& g, const ClassWitness& w,
                              const Coloring& phi, const Coloring& psi, int ell) {
    if (!validate_witness(g, w)) throw ParameterError("invalid class witness");
    if (!check_proper(g, phi, ell) || !check_proper(g, psi, ell))
        throw ParameterError("endpoints must be proper ell-colorings");
    if (phi == psi) return RecolorPath{ell, phi, {}};
    SubMap sm{w.verts, full_palette(ell)};
    Graph sub = g.induced(w.verts);
    auto run = [&](const Coloring& from) {
        RecolorPath lp = core_scaffold_local(sub, w, to_local(sm, from), ell);
        PathBuilder b(g, ell, from);
        splice_local(b, sm, lp);
        return b.take();
    };
    RecolorPath p1 = run(phi);
    RecolorPath p2 = run(psi);
    RecolorPath mid = renaming_path(g, p1.end(), p2.end(), ell);
    return concat_paths(concat_paths(p1, mid), reverse_path(p2));
}

// ---------------------------------------------------------------------------
// Decision and the top-level path

std::pair<Coloring, int> frozen_coloring(const Graph& g, const ClassWitness& w) {
    Coloring local;
    int ell;
    switch (w.tag) {
        case CoreTag::C6Core:
            local = {1, 2, 3, 1, 2, 3};
            ell = 3;
            break;
        case CoreTag::F2Core:
            local = {1, 2, 3, 1, 2, 3, 4, 4, 4};
            ell = 4;
            break;
        case CoreTag::H4Star: {
            int p = w.params[0];
            local = {1, 2, 3, 1, 2, 3};
            for (int j = 0; j < p; ++j) local.push_back(4 + j);  // S1
            for (int j = 0; j < p; ++j) local.push_back(4 + j);  // S2
            ell = p + 3;
            break;
        }
        default:
            throw NotExceptional("class has no frozen coloring");
    }
    if (!validate_witness(g, w)) throw ParameterError("invalid class witness");
    Coloring c(g.n());
    for (size_t i = 0; i < w.verts.size(); ++i) c[w.verts[i]] = local[i];
    if (!check_proper(g, c, ell) || !check_frozen(g, c, ell))
        throw InternalError("frozen witness check failed");
    return {c, ell};
}

Decision decide_recolorable(const Graph& g) {
    if (g.n() == 0) throw ParameterError("empty graph");
    if (!in_scope_class(g)) throw NotInClass("graph has an induced P2+P3 or C4");
    Decision d;
    d.recolorable = true;
    d.components = connected_components(g);
    for (auto& comp : d.components) std::sort(comp.begin(), comp.end());
    for (const auto& comp : d.components) {
        Graph sub = g.induced(comp);
        d.certificates.push_back(decompose(sub));
        if (!d.recolorable) continue;
        auto uni = universal_vertices(sub);
        if (static_cast<int>(uni.size()) == sub.n()) continue;
        std::vector<bool> in_u(sub.n(), false);
        for (int v : uni) in_u[v] = true;
        std::vector<int> rest;
        for (int v = 0; v < sub.n(); ++v)
            if (!in_u[v]) rest.push_back(v);
        Graph rsub = sub.induced(rest);
        std::vector<int> core;
        for (int v = 0; v < rsub.n(); ++v)
            if (rsub.degree(v) > 0) core.push_back(rest[v]);
        if (core.empty()) continue;
        Graph csub = sub.induced(core);
        auto w = recognize(csub);
        if (w && (w->tag == CoreTag::C6Core || w->tag == CoreTag::F2Core ||
                  w->tag == CoreTag::H4Star)) {
            d.recolorable = false;
            for (int v : core) d.core.push_back(comp[v]);
            auto [fc, fell] = frozen_coloring(csub, *w);
            d.witness = fc;
            d.witness_ell = fell;
        }
    }
    return d;
}

RecolorPath recolor_path(const Graph& g, const Coloring& phi, const Coloring& psi,
                         int ell, long long budget, bool force_oracle) {
    if (g.n() == 0) throw ParameterError("empty graph");
    if (!check_proper(g, phi, ell) || !check_proper(g, psi, ell))
        throw ParameterError("endpoints must be proper ell-colorings");
    if (!in_scope_class(g)) throw NotInClass("graph has an induced P2+P3 or C4");
    if (ell <= chromatic_number(g).first)
        throw ThresholdTooLow("need more than chi colors");
    Decision d = decide_recolorable(g);
    if (!d.recolorable && ell < degeneracy(g).first + 2) {
        if (force_oracle) return oracle_path(g, ell, phi, psi, budget);
        throw NotMixingAtEll("graph is not recolorable at this palette size");
    }
    PathBuilder b(g, ell, phi);
    for (size_t i = 0; i < d.components.size(); ++i) {
        const auto& comp = d.components[i];
        Graph sub = g.induced(comp);
        SubMap sm{comp, full_palette(ell)};
        RecolorPath part = solve_connected(sub, d.certificates[i],
                                           to_local(sm, phi), to_local(sm, psi),
                                           ell);
        splice_local(b, sm, part);
    }
    RecolorPath p = b.take();
    if (p.end() != psi) throw InternalError("path misses its target");
    long long n = g.n();
    if (static_cast<long long>(p.length()) > 2 * n * n)
        throw InternalError("path exceeds the 2n^2 bound");
    for (int cnt : p.per_vertex_counts(g.n()))
        if (cnt > 2 * n) throw InternalError("a vertex exceeds the 2n bound");
    return p;
}

}  // namespace recol
