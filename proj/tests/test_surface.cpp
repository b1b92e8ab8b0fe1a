#include "qtri/surface.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qtri;

namespace {

TriangulatedSurface triangle() { return TriangulatedSurface({"t"}, {}); }
TriangulatedSurface quad() { return TriangulatedSurface({"f0", "f1"}, {{{0, 1}, {1, 3}}}); }
TriangulatedSurface pentagon() {
    return TriangulatedSurface({"f0", "f1", "f2"}, {{{0, 1}, {1, 3}}, {{1, 1}, {2, 3}}});
}
TriangulatedSurface annulus() {
    return TriangulatedSurface({"f0", "f1"}, {{{0, 1}, {1, 3}}, {{0, 2}, {1, 1}}});
}
TriangulatedSurface puncturedMonogon() { return TriangulatedSurface({"t"}, {{{0, 1}, {0, 2}}}); }
TriangulatedSurface threePuncturedSphere() {
    return TriangulatedSurface({"f0", "f1"}, {{{0, 1}, {1, 1}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}});
}

}  // namespace

TEST_CASE("gluing validation") {
    CHECK_THROWS_AS(TriangulatedSurface({"f"}, {{{0, 1}, {0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedSurface({"f", "g"}, {{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedSurface({"f", "f"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(TriangulatedSurface({"f"}, {{{0, 4}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("small vertex counts") {
    CHECK(VertexModel(triangle(), 3).count() == 7);
    CHECK(VertexModel(quad(), 2).count() == 5);
    for (int n = 2; n <= 5; ++n)
        CHECK(VertexModel(triangle(), n).count() == (n + 1) * (n + 2) / 2 - 3);
    // quadrilateral: 5 edges, each with n-1 vertices, plus 2(n-1)(n-2)/2 interior
    for (int n = 2; n <= 4; ++n)
        CHECK(VertexModel(quad(), n).count() == 5 * (n - 1) + (n - 1) * (n - 2));
}

TEST_CASE("exceptional and degenerate inputs are rejected") {
    CHECK_THROWS_AS(TriangulatedSurface({}, {}).requireTriangulable(), std::invalid_argument);
    CHECK_THROWS_AS(VertexModel(TriangulatedSurface({}, {}), 2), std::invalid_argument);
    CHECK_THROWS_AS(VertexModel(triangle(), 1), std::invalid_argument);
}

TEST_CASE("punctured monogon: accepted for Q, carries an interior puncture") {
    TriangulatedSurface s = puncturedMonogon();
    CHECK(s.hasSelfGluedFace());
    CHECK(s.hasInteriorPuncture());
    CHECK(s.boundaryEdgeCount() == 1);
    CHECK(s.idealVertexCount() == 2);
    CHECK(s.eulerCharacteristic() == 1);
    VertexModel vm(s, 2);  // Q-side construction is fine
    CHECK(vm.count() == 2);
}

TEST_CASE("closed surface: three-punctured sphere") {
    TriangulatedSurface s = threePuncturedSphere();
    CHECK(s.isClosed());
    CHECK(s.eulerCharacteristic() == 2);
    CHECK(s.idealVertexCount() == 3);
    CHECK(s.hasInteriorPuncture());
    s.requireTriangulable();  // not exceptional
    // extend leaves closed surfaces unchanged
    CHECK(s.extended().faceCount() == 2);
}

TEST_CASE("topology counts of the test surfaces") {
    CHECK(triangle().eulerCharacteristic() == 1);
    CHECK(triangle().boundaryEdgeCount() == 3);
    CHECK(quad().eulerCharacteristic() == 1);
    CHECK(quad().boundaryEdgeCount() == 4);
    CHECK(pentagon().eulerCharacteristic() == 1);
    CHECK(pentagon().boundaryEdgeCount() == 5);
    CHECK(annulus().eulerCharacteristic() == 0);
    CHECK(annulus().boundaryEdgeCount() == 2);
    CHECK(annulus().idealVertexCount() == 2);
    CHECK(!annulus().hasInteriorPuncture());
    CHECK(quad().isConnected());
    TriangulatedSurface two({"a", "b"}, {});
    CHECK(!two.isConnected());
}

TEST_CASE("extension attaches one face per boundary edge") {
    CHECK(triangle().extended().faceCount() == 4);
    CHECK(quad().extended().faceCount() == 6);
    CHECK(pentagon().extended().faceCount() == 8);
    CHECK(annulus().extended().faceCount() == 4);
    TriangulatedSurface ext = quad().extended();
    int attached = 0;
    for (int f = 0; f < ext.faceCount(); ++f)
        if (ext.isAttachedFace(f)) {
            ++attached;
            CHECK(ext.isGlued({f, 1}));       // attached along e_1
            CHECK(!ext.isGlued({f, 2}));
            CHECK(!ext.isGlued({f, 3}));
        }
    CHECK(attached == 4);
}

TEST_CASE("vertex set sizes match the Euler-characteristic formula") {
    for (const auto& s : {triangle(), quad(), pentagon(), annulus()}) {
        int bd = s.boundaryEdgeCount();
        int chi = s.eulerCharacteristic();
        for (int n = 2; n <= 4; ++n) {
            VertexSets vs = vertexSets(s.extended(), n);
            CHECK(static_cast<int>(vs.xSet.size()) == (n * n - 1) * (bd - chi));
            CHECK(vs.xSet.size() == vs.aSet.size());
            CHECK(static_cast<int>(vs.reduced.size()) ==
                  static_cast<int>(vs.xSet.size()) - n * (n - 1) / 2 * bd);
            // reduced set is contained in both
            std::set<std::string> x(vs.xSet.begin(), vs.xSet.end());
            std::set<std::string> a(vs.aSet.begin(), vs.aSet.end());
            for (const auto& id : vs.reduced) {
                CHECK(x.count(id) == 1);
                CHECK(a.count(id) == 1);
            }
        }
    }
    // spec substitution: quadrilateral at n = 3
    VertexSets vs = vertexSets(quad().extended(), 3);
    CHECK(vs.xSet.size() == 24);
    CHECK(vs.reduced.size() == 12);
}

TEST_CASE("glued edge positions are identified orientation-reversingly") {
    TriangulatedSurface s = quad();
    VertexModel vm(s, 3);
    // (f0, slot 1, position t) is glued to (f1, slot 3, position 3-t)
    for (int t = 1; t < 3; ++t)
        CHECK(vm.classOf(0, edgePoint(3, 1, t)) == vm.classOf(1, edgePoint(3, 3, 3 - t)));
    // boundary flags
    for (const auto& v : vm.vertices()) {
        bool onDiag = v.reps.size() == 2;
        CHECK(v.onInteriorEdge == onDiag);
    }
}
