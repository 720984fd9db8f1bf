#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "ribbon/diagram.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/rng.hpp"

using ribbon::DiagramErrorKind;
using ribbon::FaceDecomposition;
using ribbon::RibbonDiagram;
using ribbon::RibbonGraph;

namespace {

bool has_error(const std::vector<ribbon::DiagramError>& errs, DiagramErrorKind kind) {
    return std::any_of(errs.begin(), errs.end(), [kind](const auto& e) { return e.kind == kind; });
}

}  // namespace

TEST_CASE("diagram validation") {
    CHECK(ribbon::validate(RibbonDiagram{0, {}, {}, {}}).empty());
    CHECK(ribbon::validate(RibbonDiagram{1, {{0, 1}}, {0}, {1}}).empty());
    CHECK(ribbon::validate(RibbonDiagram{2, {{0, 3}, {1, 2}}, {0, 1}, {0, 0}}).empty());

    CHECK(has_error(ribbon::validate(RibbonDiagram{2, {{0, 2}, {1, 3}}, {0, 0}, {0, 0}}),
                    DiagramErrorKind::CrossingChords));
    CHECK(has_error(ribbon::validate(RibbonDiagram{2, {{0, 0}, {1, 2}}, {0, 0}, {0, 0}}),
                    DiagramErrorKind::DuplicateEndpoint));
    CHECK(has_error(ribbon::validate(RibbonDiagram{2, {{0, 3}, {1, 2}}, {0, 4}, {0, 0}}),
                    DiagramErrorKind::BadArcRef));
    CHECK(has_error(ribbon::validate(RibbonDiagram{1, {{0, 7}}, {0}, {0}}), DiagramErrorKind::BadArcRef));
}

TEST_CASE("face decomposition of tiny diagrams") {
    FaceDecomposition f0 = ribbon::build_faces(RibbonDiagram{0, {}, {}, {}});
    CHECK(f0.face_ids == std::vector<int>{0});

    FaceDecomposition f1 = ribbon::build_faces(RibbonDiagram{1, {{0, 1}}, {0}, {1}});
    CHECK(f1.face_ids == std::vector<int>{0, 1});
    CHECK(f1.face_of_arc == std::vector<int>{0, 1});

    // nested chords cut the disk into three faces; arcs 0 and 2 share the
    // middle face
    FaceDecomposition f2 = ribbon::build_faces(RibbonDiagram{2, {{0, 3}, {1, 2}}, {0, 1}, {0, 0}});
    CHECK(f2.face_ids == std::vector<int>{0, 1, 3});
    CHECK(f2.face_of_arc == std::vector<int>{0, 1, 0, 3});
}

TEST_CASE("face properties over random diagrams") {
    ribbon::SampleRng rng(1311);
    for (int iter = 0; iter < 200; ++iter) {
        int g = static_cast<int>(rng.uniform(1, 6));
        RibbonDiagram d = ribbon::random_diagram(rng, g);
        REQUIRE(ribbon::validate(d).empty());
        FaceDecomposition f = ribbon::build_faces(d);
        CHECK(static_cast<int>(f.face_ids.size()) == g + 1);

        std::set<int> touched(f.face_of_arc.begin(), f.face_of_arc.end());
        CHECK(touched == std::set<int>(f.face_ids.begin(), f.face_ids.end()));

        for (int i = 0; i < g; ++i) {
            auto [marked, unmarked] = f.chord_faces[static_cast<size_t>(i)];
            CHECK(marked != unmarked);
            // the two adjacent faces sit on opposite sides of the chord
            CHECK(f.arc_inside(i, marked) != f.arc_inside(i, unmarked));
        }
    }
}

TEST_CASE("single-chord diagrams convert as expected") {
    // beta in the marked-side face: S(e_0) lands on the head
    RibbonGraph head_side = ribbon::to_ribbon_graph(RibbonDiagram{1, {{0, 1}}, {0}, {0}});
    REQUIRE(head_side.genus() == 1);
    CHECK(head_side.singularity[0] == head_side.edges[0].head);

    // beta on the unmarked side: S(e_0) lands on the tail, R_00 = -1/2
    RibbonDiagram other{1, {{0, 1}}, {0}, {1}};
    RibbonGraph tail_side = ribbon::to_ribbon_graph(other);
    CHECK(tail_side.singularity[0] == tail_side.edges[0].tail);
    CHECK(ribbon::ribbon_matrix_direct(other).doubled == std::vector<std::vector<int>>{{-1}});
    CHECK(ribbon::ribbon_matrix(tail_side).doubled == std::vector<std::vector<int>>{{-1}});
}

TEST_CASE("conversion always yields a valid tree") {
    ribbon::SampleRng rng(5252);
    for (int iter = 0; iter < 300; ++iter) {
        int g = static_cast<int>(rng.uniform(0, 6));
        RibbonDiagram d = ribbon::random_diagram(rng, g);
        RibbonGraph graph = ribbon::to_ribbon_graph(d);
        CHECK(ribbon::validate(graph).empty());
        CHECK(graph.genus() == g);
    }
}

TEST_CASE("nested diagram with betas in the middle face") {
    RibbonDiagram d{2, {{0, 3}, {1, 2}}, {0, 1}, {0, 0}};
    ribbon::RibbonMatrix direct = ribbon::ribbon_matrix_direct(d);
    ribbon::RibbonMatrix via_graph = ribbon::ribbon_matrix(ribbon::to_ribbon_graph(d));
    CHECK(direct.doubled == via_graph.doubled);
    // chord 1 is nested inside chord 0 with both betas between them
    CHECK(direct.doubled[0][0] == 1);   // beta_0 inside chord 0, marked side is inside
    CHECK(direct.doubled[1][1] == -1);  // beta_1 outside chord 1, marked side is inside
}

TEST_CASE("both matrix routes agree on every tiny diagram") {
    for (int g = 0; g <= 2; ++g) {
        ribbon::enumerate_diagrams(g, [](const RibbonDiagram& d) {
            ribbon::RibbonMatrix direct = ribbon::ribbon_matrix_direct(d);
            ribbon::RibbonMatrix via_graph = ribbon::ribbon_matrix(ribbon::to_ribbon_graph(d));
            REQUIRE(direct.doubled == via_graph.doubled);
        });
    }
}

TEST_CASE("both matrix routes agree on random diagrams") {
    ribbon::SampleRng rng(8888);
    for (int iter = 0; iter < 400; ++iter) {
        int g = static_cast<int>(rng.uniform(0, 6));
        RibbonDiagram d = ribbon::random_diagram(rng, g);
        ribbon::RibbonMatrix direct = ribbon::ribbon_matrix_direct(d);
        ribbon::RibbonMatrix via_graph = ribbon::ribbon_matrix(ribbon::to_ribbon_graph(d));
        REQUIRE(direct.doubled == via_graph.doubled);
    }
}
