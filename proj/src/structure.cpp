#include "recol/structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "recol/chromatic.hpp"
#include "recol/errors.hpp"
#include "recol/patterns.hpp"

namespace recol {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InternalError("structure invariant failed: " + what);
}

bool pair_complete(const Graph& g, const std::vector<int>& a,
                   const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (x != y && !g.adjacent(x, y)) return false;
    return true;
}

bool pair_anticomplete(const Graph& g, const std::vector<int>& a,
                       const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (g.adjacent(x, y)) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& a) {
    return pair_complete(g, a, a);
}

bool is_independent(const Graph& g, const std::vector<int>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (g.adjacent(a[i], a[j])) return false;
    return true;
}

void check_induced_cycle(const Graph& g, const std::vector<int>& cycle, size_t k) {
    if (cycle.size() != k) throw ParameterError("cycle witness has wrong length");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                throw ParameterError("witness does not induce a cycle");
        }
}

std::vector<int> concat(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

}  // namespace

C5Partition c5_partition(const Graph& g, const std::vector<int>& cycle) {
    check_induced_cycle(g, cycle, 5);
    C5Partition p;
    std::copy(cycle.begin(), cycle.end(), p.C.begin());
    std::vector<bool> on_c(g.n(), false);
    for (int v : cycle) on_c[v] = true;
    for (int u = 0; u < g.n(); ++u) {
        if (on_c[u]) continue;
        unsigned mask = 0;
        for (int i = 0; i < 5; ++i)
            if (g.adjacent(u, cycle[i])) mask |= 1u << i;
        bool placed = false;
        if (mask == 0) { p.T.push_back(u); placed = true; }
        if (mask == 31) { p.Z.push_back(u); placed = true; }
        for (int i = 0; i < 5 && !placed; ++i) {
            unsigned vi = 1u << i, nx = 1u << ((i + 1) % 5), pv = 1u << ((i + 4) % 5);
            if (mask == vi) { p.A[i].push_back(u); placed = true; }
            else if (mask == (vi | nx)) { p.B[i].push_back(u); placed = true; }
            else if (mask == (pv | vi | nx)) { p.D[i].push_back(u); placed = true; }
        }
        if (!placed)
            throw NotInClass("vertex neighborhood trace on the 5-cycle matches no bucket");
    }

    std::vector<int> allA = concat({&p.A[0], &p.A[1], &p.A[2], &p.A[3], &p.A[4]});
    std::vector<int> allB = concat({&p.B[0], &p.B[1], &p.B[2], &p.B[3], &p.B[4]});
    std::vector<int> allD = concat({&p.D[0], &p.D[1], &p.D[2], &p.D[3], &p.D[4]});
    std::vector<int> cvec(cycle.begin(), cycle.end());

    for (int i = 0; i < 5; ++i) {
        int nx = (i + 1) % 5, pv = (i + 4) % 5, f2 = (i + 2) % 5, b2 = (i + 3) % 5;
        require(p.A[i].size() + p.B[i].size() <= 1, "|A_i u B_i| <= 1");
        require(p.A[nx].size() + p.B[i].size() <= 1, "|A_{i+1} u B_i| <= 1");
        require(pair_anticomplete(g, p.A[i], concat({&p.A[pv], &p.A[nx], &p.D[pv], &p.D[nx]})),
                "A_i anticomplete to A_{i-1} u A_{i+1} u D_{i-1} u D_{i+1}");
        require(pair_complete(g, p.A[i], p.D[i]), "A_i complete to D_i");
        require(p.A[i].empty() || (p.D[f2].empty() && p.D[b2].empty()),
                "A_i nonempty forces D_{i+2} u D_{i-2} empty");
        require(is_clique(g, p.D[i]), "D_i is a clique");
        require(pair_anticomplete(g, p.D[i], p.D[f2]), "D_i anticomplete to D_{i+2}");
    }
    require(is_clique(g, p.Z), "Z is a clique");
    require(pair_complete(g, p.Z, cvec), "Z complete to C");
    require(pair_complete(g, p.Z, allD), "Z complete to D");
    require(is_independent(g, p.T), "T is independent");
    require(pair_anticomplete(g, p.T, concat({&allA, &allB, &allD})),
            "T anticomplete to A u B u D");
    require(p.T.empty() || find_comparable_pair(g).has_value(),
            "nonempty T forces a comparable pair");
    if (!has_induced(g, PatternId::FiveCap)) {
        require(allB.empty(), "no 5-cap forces B empty");
        for (int i = 0; i < 5; ++i)
            require(pair_complete(g, p.D[i], p.D[(i + 1) % 5]),
                    "no 5-cap forces D_i complete to D_{i+1}");
    }
    return p;
}

C6Partition c6_partition(const Graph& g, const std::vector<int>& cycle) {
    check_induced_cycle(g, cycle, 6);
    if (find_comparable_pair(g))
        throw ComparablePairPresent("6-cycle partition requires no comparable pair");
    C6Partition p;
    std::copy(cycle.begin(), cycle.end(), p.C.begin());
    std::vector<bool> on_c(g.n(), false);
    for (int v : cycle) on_c[v] = true;
    for (int u = 0; u < g.n(); ++u) {
        if (on_c[u]) continue;
        unsigned mask = 0;
        for (int i = 0; i < 6; ++i)
            if (g.adjacent(u, cycle[i])) mask |= 1u << i;
        bool placed = false;
        if (mask == 0) { p.T.push_back(u); placed = true; }
        if (mask == 63) { p.Z.push_back(u); placed = true; }
        for (int i = 0; i < 6 && !placed; ++i) {
            unsigned opp = (1u << i) | (1u << ((i + 3) % 6));
            unsigned yi = 63u & ~((1u << ((i + 5) % 6)) | (1u << ((i + 4) % 6)));
            if (mask == opp && i < 3) { p.X[i].push_back(u); placed = true; }
            else if (mask == yi) { p.Y[i].push_back(u); placed = true; }
        }
        if (!placed)
            throw NotInClass("vertex neighborhood trace on the 6-cycle matches no bucket");
    }

    std::vector<int> allX = concat({&p.X[0], &p.X[1], &p.X[2]});
    std::vector<int> allY =
        concat({&p.Y[0], &p.Y[1], &p.Y[2], &p.Y[3], &p.Y[4], &p.Y[5]});

    for (int i = 0; i < 6; ++i)
        require(is_clique(g, concat({&p.X[i % 3], &p.Y[i], &p.Z})),
                "X_i u Y_i u Z is a clique");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            require(pair_anticomplete(g, p.X[i], p.X[j]),
                    "X_i mutually anticomplete");
    for (int i = 0; i < 3; ++i)
        require(p.X[i].size() < 2 ||
                    (p.X[(i + 1) % 3].empty() && p.X[(i + 2) % 3].empty()),
                "|X_i| >= 2 forces the other X_j empty");
    for (int i = 0; i < 6; ++i) {
        require(pair_complete(g, p.Y[i],
                              concat({&p.Y[(i + 5) % 6], &p.Y[(i + 1) % 6], &p.Y[(i + 3) % 6]})),
                "Y_i complete to Y_{i-1} u Y_{i+1} u Y_{i+3}");
        require(pair_anticomplete(g, p.Y[i], concat({&p.Y[(i + 4) % 6], &p.Y[(i + 2) % 6]})),
                "Y_i anticomplete to Y_{i-2} u Y_{i+2}");
        require(p.Y[i].empty() || p.Y[(i + 1) % 6].empty() ||
                    (p.Y[(i + 3) % 6].empty() && p.Y[(i + 4) % 6].empty()),
                "consecutive Y_i,Y_{i+1} force Y_{i+3} u Y_{i-2} empty");
        require(p.Y[i].size() < 2 || p.Y[(i + 4) % 6].empty() || p.Y[(i + 2) % 6].empty(),
                "|Y_i| >= 2 forces Y_{i-2} or Y_{i+2} empty");
    }
    require(allX.empty() || allY.empty(), "one of X and Y is empty");
    require(is_independent(g, p.T), "T is independent");
    require(pair_anticomplete(g, p.T, allY), "T anticomplete to Y");
    for (int t : p.T) {
        bool nbr = false;
        for (int x : allX)
            if (g.adjacent(t, x)) { nbr = true; break; }
        require(!nbr || pair_complete(g, {t}, allX),
                "a T vertex with an X neighbor is complete to X");
    }
    require(pair_complete(g, p.T, p.Z), "T complete to Z");
    require(pair_complete(g, p.T, allX), "T complete to X");
    for (int i = 0; i < 3; ++i)
        require(!(p.X[(i + 1) % 3].empty() && p.X[(i + 2) % 3].empty()) || p.T.empty(),
                "X concentrated in one X_i forces T empty");
    bool consecutive_y = false;
    for (int i = 0; i < 6; ++i)
        if (!p.Y[i].empty() && !p.Y[(i + 1) % 6].empty()) consecutive_y = true;
    if (consecutive_y) {
        std::vector<int> cvec(cycle.begin(), cycle.end());
        auto cy = concat({&cvec, &allY});
        std::sort(cy.begin(), cy.end());
        auto w = recognize(g.induced(cy));
        require(w && (w->tag == CoreTag::H4 || w->tag == CoreTag::H4Star),
                "consecutive nonempty Y_i,Y_{i+1} put C u Y in the H4 family");
    }
    return p;
}

namespace {

std::optional<FamilySpec> family_of(CoreTag tag, const std::vector<int>& params) {
    switch (tag) {
        case CoreTag::C6Core: return FamilySpec::leaf(FamilyTag::Cycle, {6});
        case CoreTag::F2Core: return FamilySpec::leaf(FamilyTag::F2);
        case CoreTag::H4Star: return FamilySpec::leaf(FamilyTag::H4Star, params);
        case CoreTag::H1: return FamilySpec::leaf(FamilyTag::H1, params);
        case CoreTag::H2: return FamilySpec::leaf(FamilyTag::H2, params);
        case CoreTag::H3: return FamilySpec::leaf(FamilyTag::H3, params);
        case CoreTag::H4: return FamilySpec::leaf(FamilyTag::H4, params);
        case CoreTag::H5: return FamilySpec::leaf(FamilyTag::H5, params);
        case CoreTag::BlowupC5: return FamilySpec::leaf(FamilyTag::BlowupC5, params);
        case CoreTag::PetersenSub: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<ClassWitness> try_family(const Graph& g, CoreTag tag,
                                       const std::vector<int>& params) {
    Graph h = build_family(*family_of(tag, params));
    if (h.n() != g.n()) return std::nullopt;
    auto iso = find_isomorphism(h, g);
    if (!iso) return std::nullopt;
    ClassWitness w;
    w.tag = tag;
    w.params = params;
    w.verts = *iso;
    return w;
}

// All ways to write total as a sum of the given number of parts with the
// given per-part minimums; lexicographic order.
void compositions(int total, const std::vector<int>& mins, std::vector<int>& cur,
                  const std::function<bool(const std::vector<int>&)>& visit,
                  bool& stop) {
    size_t i = cur.size();
    if (i == mins.size()) {
        if (total == 0 && visit(cur)) stop = true;
        return;
    }
    for (int x = mins[i]; x <= total && !stop; ++x) {
        cur.push_back(x);
        compositions(total - x, mins, cur, visit, stop);
        cur.pop_back();
    }
}

std::optional<ClassWitness> try_parametrized(const Graph& g, CoreTag tag,
                                             const std::vector<int>& mins,
                                             int fixed) {
    int total = g.n() - fixed;
    int need = 0;
    for (int m : mins) need += m;
    if (total < need) return std::nullopt;
    std::optional<ClassWitness> found;
    std::vector<int> cur;
    bool stop = false;
    compositions(total, mins, cur,
                 [&](const std::vector<int>& ps) {
                     found = try_family(g, tag, ps);
                     return found.has_value();
                 },
                 stop);
    return found;
}

}  // namespace

std::optional<ClassWitness> recognize(const Graph& g) {
    if (auto w = try_family(g, CoreTag::C6Core, {})) return w;
    if (auto w = try_family(g, CoreTag::F2Core, {})) return w;
    if (g.n() >= 8 && g.n() % 2 == 0)
        if (auto w = try_family(g, CoreTag::H4Star, {(g.n() - 6) / 2})) return w;
    if (g.n() >= 7)
        if (auto w = try_family(g, CoreTag::H1, {g.n() - 6})) return w;
    if (auto w = try_parametrized(g, CoreTag::H2, {1, 1, 0, 1}, 3)) return w;
    if (g.n() >= 8)  // |X| >= 2; the theta graph goes to PetersenSub
        if (auto w = try_family(g, CoreTag::H3, {g.n() - 6})) return w;
    if (auto w = try_parametrized(g, CoreTag::H4, {1, 0, 0}, 6)) return w;
    if (auto w = try_parametrized(g, CoreTag::H5, {1, 1}, 6)) return w;
    if (g.n() >= 5)
        if (auto w = try_parametrized(g, CoreTag::BlowupC5, {1, 1, 1, 1, 1}, 0))
            return w;
    if (g.n() >= 7 && g.n() <= 10) {
        auto theta = find_induced(g, PatternId::Theta);
        if (theta) {
            auto emb = find_induced_embedding(g, build_family(FamilySpec::leaf(FamilyTag::Petersen)));
            if (emb) {
                ClassWitness w;
                w.tag = CoreTag::PetersenSub;
                w.verts.resize(g.n());
                for (int i = 0; i < g.n(); ++i) w.verts[i] = i;
                w.canon = *emb;
                w.theta = *theta;
                return w;
            }
        }
    }
    return std::nullopt;
}

bool validate_witness(const Graph& g, const ClassWitness& w) {
    try {
        if (static_cast<int>(w.verts.size()) != g.n()) return false;
        std::vector<bool> seen(g.n(), false);
        for (int v : w.verts) {
            if (v < 0 || v >= g.n() || seen[v]) return false;
            seen[v] = true;
        }
        if (w.tag == CoreTag::PetersenSub) {
            Graph pet = build_family(FamilySpec::leaf(FamilyTag::Petersen));
            if (w.canon.size() != w.verts.size()) return false;
            std::vector<bool> used(10, false);
            for (int c : w.canon) {
                if (c < 0 || c >= 10 || used[c]) return false;
                used[c] = true;
            }
            for (size_t i = 0; i < w.verts.size(); ++i)
                for (size_t j = i + 1; j < w.verts.size(); ++j)
                    if (g.adjacent(w.verts[i], w.verts[j]) !=
                        pet.adjacent(w.canon[i], w.canon[j]))
                        return false;
            if (w.theta.size() != 7) return false;
            Graph th = pattern_graph(PatternId::Theta);
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    if (g.adjacent(w.theta[i], w.theta[j]) != th.adjacent(i, j))
                        return false;
            return true;
        }
        Graph h = build_family(*family_of(w.tag, w.params));
        if (h.n() != g.n()) return false;
        for (int i = 0; i < h.n(); ++i)
            for (int j = i + 1; j < h.n(); ++j)
                if (h.adjacent(i, j) != g.adjacent(w.verts[i], w.verts[j]))
                    return false;
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

ClassWitness translate_witness(ClassWitness w, const std::vector<int>& abs) {
    for (int& v : w.verts) v = abs[v];
    for (int& v : w.theta) v = abs[v];
    return w;
}

StructureCertificate decompose_set(const Graph& g, const std::vector<int>& S) {
    Graph sub = g.induced(S);
    StructureCertificate cert;
    if (auto peo = perfect_elimination_order(sub)) {
        cert.kind = CertKind::Chordal;
        for (int v : *peo) cert.order.push_back(S[v]);
        return cert;
    }
    auto universal = universal_vertices(sub);
    if (!universal.empty() && static_cast<int>(universal.size()) < sub.n()) {
        cert.kind = CertKind::JoinPeel;
        std::vector<int> rest;
        std::vector<bool> in_u(sub.n(), false);
        for (int v : universal) { cert.peel.push_back(S[v]); in_u[v] = true; }
        for (int v = 0; v < sub.n(); ++v)
            if (!in_u[v]) rest.push_back(S[v]);
        cert.inner.push_back(decompose_set(g, rest));
        return cert;
    }
    std::vector<int> isolated, rest;
    for (int v = 0; v < sub.n(); ++v)
        (sub.degree(v) == 0 ? isolated : rest).push_back(S[v]);
    if (!isolated.empty() && !rest.empty()) {
        cert.kind = CertKind::UnionPeel;
        cert.peel = isolated;
        cert.inner.push_back(decompose_set(g, rest));
        return cert;
    }
    if (auto w = recognize(sub)) {
        cert.kind = CertKind::Core;
        cert.core = translate_witness(*w, S);
        return cert;
    }
    if (auto cp = find_comparable_pair(sub)) {
        cert.kind = CertKind::Comparable;
        cert.u = S[cp->first];
        cert.v = S[cp->second];
        std::vector<int> remaining;
        for (int v : S)
            if (v != cert.u) remaining.push_back(v);
        cert.inner.push_back(decompose_set(g, remaining));
        return cert;
    }
    throw DecompositionFailure("no decomposition step applies");
}

}  // namespace

StructureCertificate decompose(const Graph& g) {
    if (g.n() == 0) throw ParameterError("empty graph");
    if (connected_components(g).size() > 1)
        throw NotConnected("decomposition requires a connected graph");
    if (!in_scope_class(g))
        throw NotInClass("graph has an induced P2+P3 or C4");
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    return decompose_set(g, all);
}

namespace {

bool validate_set(const Graph& g, const std::vector<int>& S,
                  const StructureCertificate& cert) {
    std::vector<bool> in_s(g.n(), false);
    for (int v : S) {
        if (v < 0 || v >= g.n() || in_s[v]) return false;
        in_s[v] = true;
    }
    switch (cert.kind) {
        case CertKind::Chordal: {
            if (!cert.inner.empty()) return false;
            if (cert.order.size() != S.size()) return false;
            std::vector<int> pos(g.n(), -1);
            for (size_t i = 0; i < cert.order.size(); ++i) {
                int v = cert.order[i];
                if (v < 0 || v >= g.n() || !in_s[v] || pos[v] != -1) return false;
                pos[v] = static_cast<int>(i);
            }
            for (int v : cert.order) {
                std::vector<int> later;
                for (int w : g.neighbors(v))
                    if (in_s[w] && pos[w] > pos[v]) later.push_back(w);
                for (size_t a = 0; a < later.size(); ++a)
                    for (size_t b = a + 1; b < later.size(); ++b)
                        if (!g.adjacent(later[a], later[b])) return false;
            }
            return true;
        }
        case CertKind::Comparable: {
            if (cert.inner.size() != 1) return false;
            int u = cert.u, v = cert.v;
            if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) return false;
            if (!in_s[u] || !in_s[v] || u == v || g.adjacent(u, v)) return false;
            for (int w : g.neighbors(u))
                if (in_s[w] && !g.adjacent(v, w)) return false;
            std::vector<int> rest;
            for (int x : S)
                if (x != u) rest.push_back(x);
            return validate_set(g, rest, cert.inner[0]);
        }
        case CertKind::JoinPeel:
        case CertKind::UnionPeel: {
            if (cert.inner.size() != 1) return false;
            if (cert.peel.empty() || cert.peel.size() >= S.size()) return false;
            std::vector<bool> in_p(g.n(), false);
            for (int v : cert.peel) {
                if (v < 0 || v >= g.n() || !in_s[v] || in_p[v]) return false;
                in_p[v] = true;
            }
            std::vector<int> rest;
            for (int x : S)
                if (!in_p[x]) rest.push_back(x);
            for (int u : cert.peel) {
                if (cert.kind == CertKind::JoinPeel) {
                    for (int x : S)
                        if (x != u && !g.adjacent(u, x)) return false;
                } else {
                    for (int x : S)
                        if (x != u && g.adjacent(u, x)) return false;
                }
            }
            return validate_set(g, rest, cert.inner[0]);
        }
        case CertKind::Core: {
            if (!cert.inner.empty() || !cert.core) return false;
            if (cert.core->verts.size() != S.size()) return false;
            // translate back to subset-local numbering and recheck
            std::vector<int> sorted = S;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> pos(g.n(), -1);
            for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
            ClassWitness local = *cert.core;
            for (int& v : local.verts) {
                if (v < 0 || v >= g.n() || pos[v] == -1) return false;
                v = pos[v];
            }
            for (int& v : local.theta) {
                if (v < 0 || v >= g.n() || pos[v] == -1) return false;
                v = pos[v];
            }
            return validate_witness(g.induced(sorted), local);
        }
    }
    return false;
}

const char* core_name(CoreTag tag) {
    switch (tag) {
        case CoreTag::C6Core: return "c6";
        case CoreTag::F2Core: return "f2";
        case CoreTag::H4Star: return "h4star";
        case CoreTag::H1: return "h1";
        case CoreTag::H2: return "h2";
        case CoreTag::H3: return "h3";
        case CoreTag::H4: return "h4";
        case CoreTag::H5: return "h5";
        case CoreTag::BlowupC5: return "blowc5";
        case CoreTag::PetersenSub: return "petersensub";
    }
    return "?";
}

void write_ids(std::ostream& out, const char* field, const std::vector<int>& vs,
               bool one_based = true) {
    out << " " << field << "=";
    for (size_t i = 0; i < vs.size(); ++i)
        out << (i ? "," : "") << vs[i] + (one_based ? 1 : 0);
}

void write_node(std::ostream& out, const StructureCertificate& cert, int depth) {
    for (int i = 0; i < depth; ++i) out << "  ";
    switch (cert.kind) {
        case CertKind::Chordal:
            out << "chordal";
            write_ids(out, "order", cert.order);
            break;
        case CertKind::Comparable:
            out << "comparable u=" << cert.u + 1 << " v=" << cert.v + 1;
            break;
        case CertKind::JoinPeel:
            out << "joinpeel";
            write_ids(out, "verts", cert.peel);
            break;
        case CertKind::UnionPeel:
            out << "unionpeel";
            write_ids(out, "verts", cert.peel);
            break;
        case CertKind::Core:
            out << "core " << core_name(cert.core->tag);
            if (!cert.core->params.empty())
                write_ids(out, "params", cert.core->params, false);
            write_ids(out, "verts", cert.core->verts);
            if (cert.core->tag == CoreTag::PetersenSub) {
                write_ids(out, "emb", cert.core->canon);
                write_ids(out, "theta", cert.core->theta);
            }
            break;
    }
    out << "\n";
    for (const auto& child : cert.inner) write_node(out, child, depth + 1);
}

}  // namespace

bool validate_certificate(const Graph& g, const StructureCertificate& cert) {
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    try {
        return validate_set(g, all, cert);
    } catch (const Error&) {
        return false;
    }
}

std::string write_certificate(const StructureCertificate& cert) {
    std::ostringstream out;
    write_node(out, cert, 0);
    return out.str();
}

}  // namespace recol
