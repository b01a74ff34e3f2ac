#ifndef RECOL_STRUCTURE_HPP
#define RECOL_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "recol/family.hpp"
#include "recol/graph.hpp"

namespace recol {

// Partition of V(g) around an induced 5-cycle C = v1..v5 by neighborhood
// trace on C: A_i sees only v_i, B_i sees {v_i,v_{i+1}}, D_i sees
// {v_{i-1},v_i,v_{i+1}}, Z sees all of C, T sees nothing.  Indices mod 5,
// stored 0-based.
struct C5Partition {
    std::array<int, 5> C;
    std::array<std::vector<int>, 5> A, B, D;
    std::vector<int> Z, T;
};

// Every structural property of the partition is asserted; a violation on an
// in-class input is a bug, reported as InternalError.  A vertex whose trace
// on C matches no bucket means g is outside the class: NotInClass.
C5Partition c5_partition(const Graph& g, const std::vector<int>& cycle);

// Partition around an induced 6-cycle: X_i sees the opposite pair
// {v_i,v_{i+3}} (so X_i = X_{i+3}; three sets), Y_i sees C minus
// {v_{i-1},v_{i-2}}, Z sees all, T sees nothing.  Requires g to have no
// comparable pair (several claims need it): ComparablePairPresent otherwise.
struct C6Partition {
    std::array<int, 6> C;
    std::array<std::vector<int>, 3> X;
    std::array<std::vector<int>, 6> Y;
    std::vector<int> Z, T;
};

C6Partition c6_partition(const Graph& g, const std::vector<int>& cycle);

enum class CoreTag {
    C6Core, F2Core, H4Star, H1, H2, H3, H4, H5, BlowupC5, PetersenSub,
};

// A labeled class membership: verts[i] is the g-vertex playing canonical
// role i of the family graph (or, for PetersenSub, verts lists the g
// vertices with canon[i] the image in the canonical Petersen numbering and
// theta a 7-vertex witness).
struct ClassWitness {
    CoreTag tag;
    std::vector<int> params;
    std::vector<int> verts;
    std::vector<int> canon;
    std::vector<int> theta;
};

// First match in the fixed order C6Core, F2Core, H4Star, H1, H2, H3, H4,
// H5, BlowupC5, PetersenSub.  The H3 recognizer requires |X| >= 2; the
// theta graph (|X| = 1) is reported as PetersenSub.
std::optional<ClassWitness> recognize(const Graph& g);
bool validate_witness(const Graph& g, const ClassWitness& w);

enum class CertKind { Chordal, Comparable, JoinPeel, UnionPeel, Core };

// Recursive decomposition witness.  All vertex ids are absolute ids of the
// original graph; each node describes the subgraph induced on the vertices
// not yet peeled by its ancestors.
struct StructureCertificate {
    CertKind kind;
    std::vector<int> order;            // Chordal: perfect elimination order
    int u = -1, v = -1;                // Comparable: N(u) subseteq N(v), u removed
    std::vector<int> peel;             // JoinPeel: universal clique / UnionPeel: isolated set
    std::optional<ClassWitness> core;  // Core
    std::vector<StructureCertificate> inner;  // 0 or 1 child
};

// Decomposition per the structure theorems.  Priority: chordal, then
// universal-clique peel, then isolated-vertex peel, then named core, then
// comparable-pair peel; DecompositionFailure if nothing applies (which
// would contradict the structure theorems on in-class inputs).
StructureCertificate decompose(const Graph& g);

bool validate_certificate(const Graph& g, const StructureCertificate& cert);

// One node per line, children indented two spaces; 1-based vertex ids.
std::string write_certificate(const StructureCertificate& cert);

}  // namespace recol

#endif
