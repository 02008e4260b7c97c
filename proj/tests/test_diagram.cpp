#include <doctest.h>

#include "knotwork/diagram.hpp"
#include "knotwork/pd_io.hpp"
#include "test_helpers.hpp"

using namespace knotwork;
using namespace knotwork::testing;

TEST_CASE("empty diagram with one free loop is valid and has one component") {
    PlanarDiagram d = unknotLoop();
    CHECK(validateDiagram(d).valid());
    CHECK(countComponents(d) == 1);
    CHECK(writhe(d) == 0);
}

TEST_CASE("arc multiplicity violations are reported") {
    std::vector<Crossing> cs = {{1, {7, 7, 7, 1}}, {2, {1, 2, 2, 3}}};
    PlanarDiagram d(cs, 0);
    auto rep = validateDiagram(d);
    REQUIRE_FALSE(rep.valid());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.find("arc multiplicity") != std::string::npos && v.find("7") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("trefoil traversal") {
    PlanarDiagram d = trefoil();
    CHECK(validateDiagram(d).valid());
    CHECK(countComponents(d) == 1);
    CHECK(d.arcCount() == 6);
    // Connected 3-crossing diagram has 5 faces on the sphere.
    CHECK(traceFaces(d).size() == 5);
}

TEST_CASE("two-braid closures") {
    CHECK(countComponents(twoBraidClosure(2)) == 2);  // Hopf link
    CHECK(countComponents(twoBraidClosure(3)) == 1);
    CHECK(countComponents(twoBraidClosure(0)) == 2);  // unlink
    CHECK(writhe(twoBraidClosure(3)) == -3);          // left trefoil
    CHECK(writhe(twoBraidClosure(3, false)) == 3);
}

TEST_CASE("kink writhe and mirror") {
    CHECK(writhe(positiveKink()) == 1);
    CHECK(writhe(negativeKink()) == -1);
    for (const auto& d : {trefoil(), twoBraidClosure(4), positiveKink()}) {
        CHECK(writhe(mirrored(d)) == -writhe(d));
        CHECK(equalUpToRelabeling(mirrored(mirrored(d)), d));
    }
}

TEST_CASE("writhe is orientation independent for knots") {
    PlanarDiagram d = trefoil();
    CHECK(writhe(d, orientWithFlips(d, {true})) == writhe(d));
}

TEST_CASE("pd round trip") {
    for (const auto& d : {trefoil(), twoBraidClosure(5), positiveKink(), unknotLoop()}) {
        PlanarDiagram back = parsePD(serializePD(d));
        CHECK(equalUpToRelabeling(back, d));
    }
}

TEST_CASE("hand-written trefoil PD string parses") {
    auto d = parsePD(" PD[ X(1,4,2,5), X(3,6,4,1), X(5,2,6,3) ] ");
    CHECK(d.crossingCount() == 3);
    CHECK(countComponents(d) == 1);
}

TEST_CASE("malformed pd strings are rejected with positions") {
    CHECK_THROWS_AS(parsePD("PD[X(1,2,3,4,5)]"), PdParseError);
    CHECK_THROWS_AS(parsePD("PD[X(1,2,3)]"), PdParseError);
    CHECK_THROWS_AS(parsePD("PD[X(1,1,2,2) extra]"), PdParseError);
    CHECK_THROWS_AS(parsePD("PD[X(1,1,1,2)]"), PdParseError);  // arc multiplicity
}

TEST_CASE("gauss code export") {
    std::string g = gaussCode(trefoil());
    CHECK(g.find('U') != std::string::npos);
    CHECK(g.find('O') != std::string::npos);
    CHECK(g.find('|') == std::string::npos);
    CHECK(gaussCode(twoBraidClosure(2)).find('|') != std::string::npos);
}

TEST_CASE("canonical equality ignores labels") {
    PlanarDiagram a = trefoil();
    std::vector<Crossing> cs = a.crossings();
    for (auto& c : cs)
        for (auto& x : c.arcs) x += 40;
    PlanarDiagram b(cs, 0);
    CHECK(equalUpToRelabeling(a, b));
    CHECK(fastCanonicalKey(a) == fastCanonicalKey(b));
    // The standard trefoil PD is the 2-braid closure with 3 like crossings.
    CHECK(equalUpToRelabeling(a, twoBraidClosure(3)));
    CHECK_FALSE(equalUpToRelabeling(a, mirrored(a)));
    CHECK_FALSE(equalUpToRelabeling(a, twoBraidClosure(2)));
}
