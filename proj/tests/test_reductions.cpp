#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ribbon/alexander.hpp"
#include "ribbon/reductions.hpp"
#include "ribbon/rng.hpp"

using ribbon::LaurentPoly;
using ribbon::NotApplicable;
using ribbon::ReductionKind;
using ribbon::ReductionStep;
using ribbon::RibbonGraph;

namespace {

LaurentPoly delta_of(const RibbonGraph& g) {
    return ribbon::conway_alexander(ribbon::half_alexander(ribbon::ribbon_matrix(g)));
}

LaurentPoly half_of(const RibbonGraph& g) { return ribbon::half_alexander(ribbon::ribbon_matrix(g)); }

}  // namespace

TEST_CASE("find_reductions ordering and trivial cases") {
    CHECK(ribbon::find_reductions(RibbonGraph{1, {}, {}}).empty());

    RibbonGraph single{2, {{0, 1}}, {1}};
    auto steps = ribbon::find_reductions(single);
    REQUIRE(steps.size() == 2);  // pendant tail vertex frees an R0 as well
    CHECK(steps[0] == ReductionStep::r0(0));
    CHECK(steps[1] == ReductionStep::r1(0));
}

TEST_CASE("fixture graph admits no R0") {
    RibbonGraph fixture{5, {{0, 1}, {2, 1}, {1, 3}, {4, 3}}, {4, 0, 2, 1}};
    for (const ReductionStep& s : ribbon::find_reductions(fixture)) CHECK(s.kind != ReductionKind::R0);
}

TEST_CASE("R0 deletes an unmarked pendant vertex") {
    RibbonGraph chain{3, {{0, 1}, {1, 2}}, {1, 0}};
    LaurentPoly before = delta_of(chain);
    CHECK(half_of(chain) == LaurentPoly::term(1, 1));

    auto steps = ribbon::find_reductions(chain);
    REQUIRE(!steps.empty());
    CHECK(steps[0] == ReductionStep::r0(2));

    RibbonGraph after = ribbon::apply_r0(chain, steps[0]);
    CHECK(after == RibbonGraph{2, {{0, 1}}, {1}});
    CHECK(half_of(after) == -LaurentPoly::one());
    CHECK(delta_of(after) == before);

    // pendant vertex 0 is in the singularity image, so R0 there must refuse
    CHECK_THROWS_AS(ribbon::apply_r0(chain, ReductionStep::r0(0)), NotApplicable);
    CHECK_THROWS_AS(ribbon::apply_r0(chain, ReductionStep::r0(1)), NotApplicable);
}

TEST_CASE("R1 contracts an edge with singularity at an end") {
    RibbonGraph single{2, {{0, 1}}, {0}};
    CHECK(ribbon::apply_r1(single, ReductionStep::r1(0)) == RibbonGraph{1, {}, {}});

    RibbonGraph chain{3, {{0, 1}, {1, 2}}, {1, 0}};
    LaurentPoly before_half = half_of(chain);
    RibbonGraph after = ribbon::apply_r1(chain, ReductionStep::r1(0));
    CHECK(after.genus() == 1);
    CHECK(after == RibbonGraph{2, {{0, 1}}, {0}});
    CHECK(delta_of(after) == delta_of(chain));

    auto unit = ribbon::unit_equivalent(before_half, half_of(after));
    REQUIRE(unit.has_value());

    RibbonGraph far{3, {{0, 1}, {1, 2}}, {2, 0}};
    CHECK_THROWS_AS(ribbon::apply_r1(far, ReductionStep::r1(0)), NotApplicable);
}

TEST_CASE("R2 fuses edges with a common end and equal singularity") {
    RibbonGraph pair{3, {{0, 2}, {1, 2}}, {0, 0}};
    CHECK(ribbon::ribbon_matrix(pair).doubled == std::vector<std::vector<int>>{{-1, -2}, {0, 1}});
    CHECK(half_of(pair) == LaurentPoly::term(1, 1));
    LaurentPoly before = delta_of(pair);

    // the free pendant tail and the tail-side singularity make R0 and R1
    // available too; the deterministic order lists them first
    auto steps = ribbon::find_reductions(pair);
    REQUIRE(steps == std::vector<ReductionStep>{ReductionStep::r0(1), ReductionStep::r1(0), ReductionStep::r2(0, 1)});

    RibbonGraph after = ribbon::apply_r2(pair, steps[2]);
    CHECK(after == RibbonGraph{2, {{0, 1}}, {0}});
    CHECK(delta_of(after) == before);

    RibbonGraph mismatch{3, {{0, 2}, {1, 2}}, {0, 1}};
    CHECK_THROWS_AS(ribbon::apply_r2(mismatch, ReductionStep::r2(0, 1)), NotApplicable);
}

TEST_CASE("R2 applications preserve delta on random graphs") {
    ribbon::SampleRng rng(246810);
    int applied = 0;
    for (int iter = 0; iter < 2500 && applied < 200; ++iter) {
        int genus = static_cast<int>(rng.uniform(2, 6));
        RibbonGraph g = ribbon::random_graph(rng, genus);
        LaurentPoly before = delta_of(g);
        for (const ReductionStep& s : ribbon::find_reductions(g)) {
            if (s.kind != ReductionKind::R2) continue;
            RibbonGraph after = ribbon::apply_r2(g, s);
            CHECK(ribbon::validate(after).empty());
            CHECK(after.genus() == genus - 1);
            REQUIRE(delta_of(after) == before);
            ++applied;
        }
    }
    CHECK(applied >= 200);
}

TEST_CASE("R3 interchanges the edges at a free degree-2 vertex") {
    // e1 runs into vertex 2, e2 runs out of it; e0 supplies the singularity
    // pattern. After the move the edge slots swap and S(e2) moves to the
    // tail of e0.
    RibbonGraph g{4, {{1, 3}, {0, 2}, {2, 3}}, {0, 0, 3}};
    auto steps = ribbon::find_reductions(g);
    ReductionStep r3 = ReductionStep::r3(0, 1, 2, 2);
    CHECK(std::count(steps.begin(), steps.end(), r3) == 1);

    RibbonGraph after = ribbon::apply_r3(g, r3);
    CHECK(after == RibbonGraph{4, {{1, 3}, {2, 3}, {0, 2}}, {0, 0, 1}});
    CHECK(after.genus() == g.genus());
    CHECK(delta_of(after) == delta_of(g));

    auto unit = ribbon::unit_equivalent(half_of(g), half_of(after));
    REQUIRE(unit.has_value());

    // same shape but with the second edge pointing into the vertex: not an
    // R3 situation
    RibbonGraph wrong_way{4, {{1, 3}, {0, 2}, {3, 2}}, {0, 0, 3}};
    CHECK_THROWS_AS(ribbon::apply_r3(wrong_way, r3), NotApplicable);
    for (const ReductionStep& s : ribbon::find_reductions(wrong_way)) CHECK(s.kind != ReductionKind::R3);
}

TEST_CASE("R3 applications preserve delta on random graphs") {
    ribbon::SampleRng rng(13579);
    int applied = 0;
    for (int iter = 0; iter < 3000 && applied < 60; ++iter) {
        int genus = static_cast<int>(rng.uniform(3, 6));
        RibbonGraph g = ribbon::random_graph(rng, genus);
        LaurentPoly before = delta_of(g);
        LaurentPoly before_half = half_of(g);
        for (const ReductionStep& s : ribbon::find_reductions(g)) {
            if (s.kind != ReductionKind::R3) continue;
            RibbonGraph after = ribbon::apply_r3(g, s);
            CHECK(ribbon::validate(after).empty());
            REQUIRE(delta_of(after) == before);
            REQUIRE(ribbon::unit_equivalent(before_half, half_of(after)).has_value());
            ++applied;
        }
    }
    CHECK(applied >= 60);
}

TEST_CASE("reduce_fully reaches a stuck graph deterministically") {
    auto [triv, triv_log] = ribbon::reduce_fully(RibbonGraph{1, {}, {}});
    CHECK(triv == RibbonGraph{1, {}, {}});
    CHECK(triv_log.empty());

    RibbonGraph chain{3, {{0, 1}, {1, 2}}, {1, 0}};
    auto [reduced, log] = ribbon::reduce_fully(chain);
    CHECK(reduced == RibbonGraph{1, {}, {}});
    // deleting the free pendant drops e1's singularity entry, which frees
    // vertex 0, so a second R0 fires before any R1
    REQUIRE(log.size() == 2);
    CHECK(log[0] == ReductionStep::r0(2));
    CHECK(log[1] == ReductionStep::r0(0));

    auto [reduced2, log2] = ribbon::reduce_fully(chain);
    CHECK(reduced2 == reduced);
    CHECK(log2 == log);
}

TEST_CASE("R3 can unlock a stuck graph") {
    // no R0/R1/R2 applies here, but interchanging e0 and e3 frees one
    RibbonGraph stuck{5, {{1, 0}, {0, 2}, {0, 3}, {4, 1}}, {2, 3, 4, 3}};
    auto [same, empty_log] = ribbon::reduce_fully(stuck, /*use_r3=*/false);
    CHECK(same == stuck);
    CHECK(empty_log.empty());

    LaurentPoly before = delta_of(stuck);
    auto [reduced, log] = ribbon::reduce_fully(stuck, /*use_r3=*/true);
    REQUIRE(log.size() >= 2);
    CHECK(log[0] == ReductionStep::r3(1, 3, 0, 1));
    CHECK(log[1] == ReductionStep::r0(2));
    CHECK(reduced.genus() < stuck.genus());
    CHECK(delta_of(reduced) == before);
}

TEST_CASE("reduce_fully preserves delta on random graphs") {
    ribbon::SampleRng rng(11235);
    for (int iter = 0; iter < 250; ++iter) {
        int genus = static_cast<int>(rng.uniform(0, 6));
        RibbonGraph g = ribbon::random_graph(rng, genus);
        LaurentPoly before = delta_of(g);
        bool use_r3 = (iter % 2) == 0;
        auto [reduced, log] = ribbon::reduce_fully(g, use_r3);
        CHECK(ribbon::validate(reduced).empty());
        REQUIRE(delta_of(reduced) == before);
        if (!use_r3)
            for (const ReductionStep& s : log) CHECK(s.kind != ReductionKind::R3);
    }
}

TEST_CASE("step log lines") {
    CHECK(ReductionStep::r0(3).to_string() == "R0 v=3");
    CHECK(ReductionStep::r1(0).to_string() == "R1 e=0");
    CHECK(ReductionStep::r2(1, 2).to_string() == "R2 e=1,2");
    CHECK(ReductionStep::r3(0, 1, 2, 3).to_string() == "R3 i=0 j=1 k=2 q=3");
}
