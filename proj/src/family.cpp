#include "recol/family.hpp"

#include <cctype>
#include <sstream>

#include "recol/errors.hpp"

namespace recol {
namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void clique(EdgeList& es, int lo, int hi) {  // [lo, hi)
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) es.emplace_back(i, j);
}

void complete(EdgeList& es, const std::vector<int>& a, int lo, int hi) {
    for (int u : a)
        for (int j = lo; j < hi; ++j) es.emplace_back(u, j);
}

void complete2(EdgeList& es, int lo1, int hi1, int lo2, int hi2) {
    for (int i = lo1; i < hi1; ++i)
        for (int j = lo2; j < hi2; ++j) es.emplace_back(i, j);
}

void need(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

Graph c6_with_cliques(const std::vector<std::vector<int>>& attach,
                      const std::vector<int>& sizes,
                      const std::vector<std::pair<int, int>>& clique_pairs) {
    EdgeList es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    int base = 6;
    std::vector<std::pair<int, int>> ranges;
    for (size_t k = 0; k < sizes.size(); ++k) {
        ranges.emplace_back(base, base + sizes[k]);
        clique(es, base, base + sizes[k]);
        complete(es, attach[k], base, base + sizes[k]);
        base += sizes[k];
    }
    for (auto [a, b] : clique_pairs)
        complete2(es, ranges[a].first, ranges[a].second, ranges[b].first,
                  ranges[b].second);
    return Graph(base, es);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    EdgeList es;
    switch (spec.tag) {
        case FamilyTag::Cycle: {
            need(p.size() == 1 && p[0] >= 3, "Cycle needs k >= 3");
            for (int i = 0; i < p[0]; ++i) es.emplace_back(i, (i + 1) % p[0]);
            return Graph(p[0], es);
        }
        case FamilyTag::Complete: {
            need(p.size() == 1 && p[0] >= 0, "Complete needs p >= 0");
            clique(es, 0, p[0]);
            return Graph(p[0], es);
        }
        case FamilyTag::EmptySet: {
            need(p.size() == 1 && p[0] >= 0, "EmptySet needs q >= 0");
            return Graph(p[0], es);
        }
        case FamilyTag::Path: {
            need(p.size() == 1 && p[0] >= 1, "Path needs k >= 1");
            for (int i = 0; i + 1 < p[0]; ++i) es.emplace_back(i, i + 1);
            return Graph(p[0], es);
        }
        case FamilyTag::Petersen: {
            for (int i = 0; i < 5; ++i) {
                es.emplace_back(i, (i + 1) % 5);
                es.emplace_back(i, i + 5);
                es.emplace_back(i + 5, (i + 2) % 5 + 5);
            }
            return Graph(10, es);
        }
        case FamilyTag::Theta:
        case FamilyTag::H3: {
            need(p.size() == 1 && p[0] >= 1, "H3/Theta needs x >= 1");
            return c6_with_cliques({{0, 3}}, {p[0]}, {});
        }
        case FamilyTag::Cap5: {
            for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
            es.emplace_back(5, 0);
            es.emplace_back(5, 1);
            return Graph(6, es);
        }
        case FamilyTag::Apple5: {
            for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
            es.emplace_back(5, 0);
            return Graph(6, es);
        }
        case FamilyTag::F1:
            return build_family(FamilySpec::leaf(FamilyTag::H4Star, {1}));
        case FamilyTag::F2:
            // s1 sees {v6,v1,v2,v3}, s2 {v2,v3,v4,v5}, s3 {v4,v5,v6,v1}
            return c6_with_cliques({{5, 0, 1, 2}, {1, 2, 3, 4}, {3, 4, 5, 0}},
                                   {1, 1, 1}, {});
        case FamilyTag::H1: {
            need(p.size() == 1 && p[0] >= 1, "H1 needs |S| >= 1");
            int s = p[0];
            es = {{0, 1}, {1, 2}, {3, 0}, {0, 4}, {1, 4}, {4, 5}};
            clique(es, 6, 6 + s);
            complete(es, {2, 3, 5}, 6, 6 + s);
            return Graph(6 + s, es);
        }
        case FamilyTag::H2: {
            need(p.size() == 4 && p[0] >= 1 && p[1] >= 1 && p[2] >= 0 &&
                     p[3] >= 1,
                 "H2 needs s1,s2,s4 >= 1 and s3 >= 0");
            int b1 = 3, b2 = b1 + p[0], b3 = b2 + p[1], b4 = b3 + p[2],
                end = b4 + p[3];
            clique(es, b1, b2);
            clique(es, b2, b3);
            clique(es, b3, b4);
            clique(es, b4, end);
            complete2(es, b2, b3, b1, b2);  // S2 complete to S1
            complete2(es, b2, b3, b3, b4);  // S2 complete to S3
            complete2(es, b3, b4, b4, end); // S3 complete to S4
            for (int j = b1; j < b2; ++j) { es.emplace_back(0, j); es.emplace_back(1, j); }
            for (int j = b2; j < b3; ++j) { es.emplace_back(1, j); es.emplace_back(2, j); }
            for (int j = b3; j < b4; ++j) { es.emplace_back(1, j); es.emplace_back(2, j); }
            for (int j = b4; j < end; ++j) { es.emplace_back(0, j); es.emplace_back(2, j); }
            return Graph(end, es);
        }
        case FamilyTag::H4: {
            need(p.size() == 3 && p[0] >= 1 && p[1] >= 0 && p[2] >= 0,
                 "H4 needs s1 >= 1, s2,s3 >= 0");
            return c6_with_cliques({{0, 1, 2, 5}, {1, 2, 3, 4}, {0, 1, 2, 3}},
                                   {p[0], p[1], p[2]}, {{2, 0}, {2, 1}});
        }
        case FamilyTag::H4Star: {
            need(p.size() == 1 && p[0] >= 1, "H4Star needs p >= 1");
            return build_family(FamilySpec::leaf(FamilyTag::H4, {p[0], p[0], 0}));
        }
        case FamilyTag::H5: {
            need(p.size() == 2 && p[0] >= 1 && p[1] >= 1,
                 "H5 needs s1,s2 >= 1");
            return c6_with_cliques({{0, 1, 2, 5}, {2, 3, 4, 5}},
                                   {p[0], p[1]}, {{0, 1}});
        }
        case FamilyTag::BlowupC5: {
            need(p.size() == 5, "BlowupC5 needs five bag sizes");
            for (int b : p) need(b >= 1, "BlowupC5 bags must be nonempty");
            std::vector<std::pair<int, int>> bags;
            int base = 0;
            for (int b : p) {
                bags.emplace_back(base, base + b);
                clique(es, base, base + b);
                base += b;
            }
            for (int i = 0; i < 5; ++i) {
                auto [lo1, hi1] = bags[i];
                auto [lo2, hi2] = bags[(i + 1) % 5];
                complete2(es, lo1, hi1, lo2, hi2);
            }
            return Graph(base, es);
        }
        case FamilyTag::Join:
        case FamilyTag::Union: {
            need(spec.children.size() == 2, "Join/Union need two operands");
            Graph a = build_family(spec.children[0]);
            Graph b = build_family(spec.children[1]);
            for (auto [u, v] : a.edges()) es.emplace_back(u, v);
            for (auto [u, v] : b.edges())
                es.emplace_back(u + a.n(), v + a.n());
            if (spec.tag == FamilyTag::Join)
                complete2(es, 0, a.n(), a.n(), a.n() + b.n());
            return Graph(a.n() + b.n(), es);
        }
    }
    throw ParameterError("unknown family tag");
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c)
            throw ParameterError("expected '" + std::string(1, c) + "' at position " +
                                 std::to_string(pos) + " in spec '" + s + "'");
        ++pos;
    }

    std::string ident() {
        size_t start = pos;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                                  std::isdigit(static_cast<unsigned char>(s[pos]))))
            ++pos;
        if (start == pos) throw ParameterError("expected a name in spec '" + s + "'");
        return s.substr(start, pos - start);
    }

    std::vector<int> args() {
        std::vector<int> xs;
        if (peek() != ':') return xs;
        ++pos;
        while (true) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw ParameterError("expected a number in spec '" + s + "'");
            xs.push_back(std::stoi(s.substr(start, pos - start)));
            // a comma continues the list only when a number follows; it may
            // also separate the operands of an enclosing join/union
            if (peek() != ',' || pos + 1 >= s.size() ||
                !std::isdigit(static_cast<unsigned char>(s[pos + 1])))
                break;
            ++pos;
        }
        return xs;
    }

    FamilySpec parse() {
        std::string name = ident();
        if (name == "join" || name == "union") {
            expect('(');
            FamilySpec a = parse();
            expect(',');
            FamilySpec b = parse();
            expect(')');
            return name == "join" ? FamilySpec::join(a, b) : FamilySpec::unio(a, b);
        }
        // single-letter shorthands carry the size in the name: c6, k3, e2, p4
        if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
            int k = std::stoi(name.substr(1));
            switch (name[0]) {
                case 'c': return FamilySpec::leaf(FamilyTag::Cycle, {k});
                case 'k': return FamilySpec::leaf(FamilyTag::Complete, {k});
                case 'e': return FamilySpec::leaf(FamilyTag::EmptySet, {k});
                case 'p': return FamilySpec::leaf(FamilyTag::Path, {k});
                default: break;
            }
        }
        std::vector<int> xs = args();
        if (name == "petersen") return FamilySpec::leaf(FamilyTag::Petersen);
        if (name == "theta")
            return FamilySpec::leaf(FamilyTag::Theta, xs.empty() ? std::vector<int>{1} : xs);
        if (name == "cap5") return FamilySpec::leaf(FamilyTag::Cap5);
        if (name == "apple5") return FamilySpec::leaf(FamilyTag::Apple5);
        if (name == "f1") return FamilySpec::leaf(FamilyTag::F1);
        if (name == "f2") return FamilySpec::leaf(FamilyTag::F2);
        if (name == "h1") return FamilySpec::leaf(FamilyTag::H1, xs);
        if (name == "h2") return FamilySpec::leaf(FamilyTag::H2, xs);
        if (name == "h3") return FamilySpec::leaf(FamilyTag::H3, xs);
        if (name == "h4") return FamilySpec::leaf(FamilyTag::H4, xs);
        if (name == "h4star") return FamilySpec::leaf(FamilyTag::H4Star, xs);
        if (name == "h5") return FamilySpec::leaf(FamilyTag::H5, xs);
        if (name == "blowc5") return FamilySpec::leaf(FamilyTag::BlowupC5, xs);
        throw ParameterError("unknown family name '" + name + "'");
    }
};

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    Parser parser{text};
    FamilySpec spec = parser.parse();
    if (parser.pos != text.size())
        throw ParameterError("trailing characters in spec '" + text + "'");
    return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
    std::ostringstream out;
    auto num = [&](FamilyTag, const std::vector<int>& ps, const char* name) {
        out << name;
        for (size_t i = 0; i < ps.size(); ++i) out << (i ? "," : ":") << ps[i];
    };
    switch (spec.tag) {
        case FamilyTag::Cycle: out << "c" << spec.params[0]; break;
        case FamilyTag::Complete: out << "k" << spec.params[0]; break;
        case FamilyTag::EmptySet: out << "e" << spec.params[0]; break;
        case FamilyTag::Path: out << "p" << spec.params[0]; break;
        case FamilyTag::Petersen: out << "petersen"; break;
        case FamilyTag::Theta: num(spec.tag, spec.params, "theta"); break;
        case FamilyTag::Cap5: out << "cap5"; break;
        case FamilyTag::Apple5: out << "apple5"; break;
        case FamilyTag::F1: out << "f1"; break;
        case FamilyTag::F2: out << "f2"; break;
        case FamilyTag::H1: num(spec.tag, spec.params, "h1"); break;
        case FamilyTag::H2: num(spec.tag, spec.params, "h2"); break;
        case FamilyTag::H3: num(spec.tag, spec.params, "h3"); break;
        case FamilyTag::H4: num(spec.tag, spec.params, "h4"); break;
        case FamilyTag::H4Star: num(spec.tag, spec.params, "h4star"); break;
        case FamilyTag::H5: num(spec.tag, spec.params, "h5"); break;
        case FamilyTag::BlowupC5: num(spec.tag, spec.params, "blowc5"); break;
        case FamilyTag::Join:
        case FamilyTag::Union:
            out << (spec.tag == FamilyTag::Join ? "join(" : "union(")
                << format_family_spec(spec.children[0]) << ","
                << format_family_spec(spec.children[1]) << ")";
            break;
    }
    return out.str();
}

}  // namespace recol
