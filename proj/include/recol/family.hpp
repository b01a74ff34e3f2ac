#ifndef RECOL_FAMILY_HPP
#define RECOL_FAMILY_HPP

#include <memory>
#include <string>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

// Named graph families.  Canonical vertex numbering for every family:
// cycle vertices first in cyclic order (v1..vk at indices 0..k-1), then the
// attached cliques in definition order; Join/Union put the left operand first.
enum class FamilyTag {
    Cycle,      // params: {k >= 3}
    Complete,   // {p >= 0}
    EmptySet,   // {q >= 0}  (edgeless graph, the complement of K_q)
    Path,       // {k >= 1}
    Petersen,   // outer 0..4, inner 5..9, spokes i--i+5, inner i+5--((i+2)%5)+5
    Theta,      // {x >= 1}: C6 plus a clique X of size x complete to {v1,v4}
    Cap5,       // C5 plus b1 (index 5) adjacent to v1,v2
    Apple5,     // C5 plus a1 (index 5) adjacent to v1 only
    F1,         // = H4Star(1), 8 vertices
    F2,         // C6 plus independent s1,s2,s3 at indices 6,7,8
    H1,         // {s >= 1}: u1..u6 at 0..5, clique S complete to {u3,u4,u6}
    H2,         // {s1>=1, s2>=1, s3>=0, s4>=1}: u,v,w at 0,1,2 then S1..S4
    H3,         // {x >= 1}: same graph as Theta
    H4,         // {s1>=1, s2>=0, s3>=0}
    H4Star,     // {p >= 1}: H4(p, p, 0)
    H5,         // {s1>=1, s2>=1}
    BlowupC5,   // {b1..b5, each >= 1}: bags consecutive, bag i before bag i+1
    Join,       // children: left, right
    Union,      // children: left, right
};

struct FamilySpec {
    FamilyTag tag;
    std::vector<int> params;
    std::vector<FamilySpec> children;  // Join/Union only

    static FamilySpec leaf(FamilyTag t, std::vector<int> ps = {}) {
        return FamilySpec{t, std::move(ps), {}};
    }
    static FamilySpec join(FamilySpec a, FamilySpec b) {
        return FamilySpec{FamilyTag::Join, {}, {std::move(a), std::move(b)}};
    }
    static FamilySpec unio(FamilySpec a, FamilySpec b) {
        return FamilySpec{FamilyTag::Union, {}, {std::move(a), std::move(b)}};
    }
};

// Builds the graph of the definition; throws ParameterError on bad sizes.
Graph build_family(const FamilySpec& spec);

// Tiny spec grammar: name[:a,b,...] | join(s,s) | union(s,s).
// Leaf names: c<k> k<p> e<q> p<k> petersen theta[:x] cap5 apple5 f1 f2
// h1:s h2:s1,s2,s3,s4 h3:x h4:s1,s2,s3 h4star:p h5:s1,s2 blowc5:b1,..,b5
FamilySpec parse_family_spec(const std::string& text);
std::string format_family_spec(const FamilySpec& spec);

}  // namespace recol

#endif
