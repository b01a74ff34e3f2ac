#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "recol/errors.hpp"
#include "recol/patterns.hpp"
#include "recol/structure.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("c5 partition of cap, apple and bare cycle") {
    Graph cap = gf("cap5");
    C5Partition p = c5_partition(cap, {0, 1, 2, 3, 4});
    CHECK(p.B[0] == std::vector<int>{5});
    for (int i = 0; i < 5; ++i) {
        CHECK(p.A[i].empty());
        CHECK(p.D[i].empty());
        if (i != 0) CHECK(p.B[i].empty());
    }
    CHECK(p.Z.empty());
    CHECK(p.T.empty());

    Graph apple = gf("apple5");
    C5Partition q = c5_partition(apple, {0, 1, 2, 3, 4});
    CHECK(q.A[0] == std::vector<int>{5});

    C5Partition r = c5_partition(gf("c5"), {0, 1, 2, 3, 4});
    CHECK(r.Z.empty());
    CHECK(r.T.empty());
}

TEST_CASE("c6 partition of f2 and petersen") {
    Graph f2 = gf("f2");
    C6Partition p = c6_partition(f2, {0, 1, 2, 3, 4, 5});
    int ysingles = 0;
    for (int i = 0; i < 6; ++i) ysingles += (int)p.Y[i].size();
    CHECK(ysingles == 3);
    for (int i = 0; i < 3; ++i) CHECK(p.X[i].empty());
    CHECK(p.Z.empty());
    CHECK(p.T.empty());

    Graph pet = gf("petersen");
    auto c6 = find_induced(pet, PatternId::C6);
    REQUIRE(c6.has_value());
    C6Partition q = c6_partition(pet, {(*c6)[0], (*c6)[1], (*c6)[2], (*c6)[3],
                                       (*c6)[4], (*c6)[5]});
    CHECK(q.X[0].size() == 1);
    CHECK(q.X[1].size() == 1);
    CHECK(q.X[2].size() == 1);
    CHECK(q.T.size() == 1);

    C6Partition bare = c6_partition(gf("c6"), {0, 1, 2, 3, 4, 5});
    CHECK(bare.Z.empty());
    CHECK(bare.T.empty());
}

TEST_CASE("c6 partition refuses comparable pairs") {
    Graph g = gf("join(union(c6,e1),k1)");
    auto c6 = find_induced(g, PatternId::C6);
    REQUIRE(c6.has_value());
    CHECK_THROWS_AS(c6_partition(g, {(*c6)[0], (*c6)[1], (*c6)[2], (*c6)[3],
                                     (*c6)[4], (*c6)[5]}),
                    ComparablePairPresent);
}

TEST_CASE("recognizer round trips") {
    auto w = recognize(gf("h4star:3"));
    REQUIRE(w.has_value());
    CHECK(w->tag == CoreTag::H4Star);
    CHECK(w->params == std::vector<int>{3});

    auto h4 = recognize(gf("h4:2,1,0"));
    REQUIRE(h4.has_value());
    CHECK(h4->tag == CoreTag::H4);

    auto theta = recognize(gf("theta:1"));
    REQUIRE(theta.has_value());
    CHECK(theta->tag == CoreTag::PetersenSub);

    for (const char* spec : {"c6", "f2", "h1:2", "h2:2,1,1,1", "h3:2",
                             "h5:1,2", "blowc5:2,1,1,1,1", "petersen"}) {
        Graph g = gf(spec);
        auto got = recognize(g);
        REQUIRE(got.has_value());
        CHECK(validate_witness(g, *got));
    }
}

TEST_CASE("decompose shapes") {
    StructureCertificate star = decompose(gf("join(e3,k1)"));
    CHECK(star.kind == CertKind::Chordal);

    StructureCertificate c = decompose(gf("join(union(c6,e2),k3)"));
    REQUIRE(c.kind == CertKind::JoinPeel);
    CHECK(c.peel.size() == 3);
    REQUIRE(c.inner.size() == 1);
    CHECK(c.inner[0].kind == CertKind::UnionPeel);
    CHECK(c.inner[0].peel.size() == 2);
    REQUIRE(c.inner[0].inner.size() == 1);
    CHECK(c.inner[0].inner[0].kind == CertKind::Core);
    CHECK(c.inner[0].inner[0].core->tag == CoreTag::C6Core);

    StructureCertificate h2 = decompose(gf("h2:1,1,0,1"));
    REQUIRE(h2.kind == CertKind::Core);
    CHECK(h2.core->tag == CoreTag::H2);
}

TEST_CASE("validate_certificate soundness and refutation") {
    for (const char* spec :
         {"c6", "f2", "petersen", "cap5", "apple5", "h1:1", "h3:2",
          "join(union(c6,e1),k2)", "join(f2,k1)", "join(apple5,k1)"}) {
        Graph g = gf(spec);
        CHECK(validate_certificate(g, decompose(g)));
    }
    // a certificate for one graph must not validate against another
    StructureCertificate cert = decompose(gf("c6"));
    CHECK_FALSE(validate_certificate(gf("p6"), cert));
    StructureCertificate pcert = decompose(gf("petersen"));
    CHECK(validate_certificate(gf("petersen"), pcert));
}

TEST_CASE("decompose rejects bad inputs") {
    CHECK_THROWS_AS(decompose(gf("c4")), NotInClass);
    CHECK_THROWS_AS(decompose(gf("union(k2,k3)")), NotConnected);
}

TEST_CASE("certificate text is stable") {
    std::string text = write_certificate(decompose(gf("join(union(c6,e1),k2)")));
    CHECK(text.find("joinpeel") != std::string::npos);
    CHECK(text.find("unionpeel") != std::string::npos);
    CHECK(text.find("c6") != std::string::npos);
    CHECK(text == write_certificate(decompose(gf("join(union(c6,e1),k2)"))));
}
