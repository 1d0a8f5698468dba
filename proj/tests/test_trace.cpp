#include "doctest.h"

#include "helpers.hpp"
#include "vmosaic/errors.hpp"
#include "vmosaic/surface.hpp"
#include "vmosaic/trace.hpp"

#include <map>
#include <random>
#include <set>

using namespace vmosaic;

TEST_CASE("straight strand with glued ends is an unknot") {
    const auto mo = parse_mosaic("1 1\nT5\ntop: a\nright: b\nbottom: a\nleft: b\n");
    const auto tr = trace(mo);
    CHECK(tr.components == 1);
    CHECK(tr.crossings == 0);
    REQUIRE(tr.gauss);
    CHECK(tr.gauss->symbols.empty());
}

TEST_CASE("all-blank mosaic has no diagram") {
    const auto mo = parse_mosaic("1 1\nT0\ntop: a\nright: a\nbottom: b\nleft: b\n");
    CHECK(crossing_count(mo) == 0);
    CHECK_THROWS_AS(trace(mo), NoDiagram);
}

TEST_CASE("trace rejects invalid mosaics") {
    const auto mo = parse_mosaic("1 1\nT5\ntop: a\nright: a\nbottom: b\nleft: b\n");
    CHECK_THROWS_AS(trace(mo), InvalidMosaic);
    CHECK_THROWS_AS(crossing_count(mo), InvalidMosaic);
}

TEST_CASE("one-row trefoil traces to a three-crossing knot") {
    const auto mo = vmtest::load_fixture("table1/3_1.vmos");
    const auto tr = trace(mo);
    CHECK(tr.components == 1);
    CHECK(tr.crossings == 3);
    REQUIRE(tr.gauss);
    CHECK(tr.gauss->symbols.size() == 6);
    std::map<int, std::set<bool>> passes;
    for (const auto& s : tr.gauss->symbols) passes[s.id].insert(s.over);
    for (const auto& [id, roles] : passes) {
        CAPTURE(id);
        CHECK(roles.size() == 2); // visited once over, once under
    }
}

TEST_CASE("one-row figure-eight code is pinned") {
    const auto mo = vmtest::load_fixture("table1/4_1.vmos");
    const auto tr = trace(mo);
    REQUIRE(tr.gauss);
    CHECK(print_code(*tr.gauss) == "U1-O2-U3+O4+U2-O1-U4+O3+");
}

TEST_CASE("four-crossing virtual example: all signs negative") {
    const auto mo = vmtest::load_fixture("figures/indexed_1x4.vmos");
    const auto tr = trace(mo);
    CHECK(tr.components == 1);
    CHECK(tr.crossings == 4);
    REQUIRE(tr.signs.size() == 4);
    for (const auto& [id, sign] : tr.signs) {
        CAPTURE(id);
        CHECK(sign == -1);
    }
}

TEST_CASE("crossing_count counts crossing tiles") {
    CHECK(crossing_count(vmtest::load_fixture("table1/7_1.vmos")) == 7);
    CHECK(crossing_count(vmtest::load_fixture("figures/k10_88_2x5.vmos")) == 10);
}

TEST_CASE("every crossing is visited once per axis, once over and once under") {
    std::mt19937 rng(4242);
    int traced = 0;
    for (int i = 0; i < 150 || traced < 60; ++i) {
        REQUIRE(i < 2000);
        const auto mo = vmtest::random_mosaic(rng);
        if (crossing_count(mo) == 0) continue;
        const auto tr = trace(mo);
        ++traced;
        std::map<std::pair<int, int>, std::set<Axis>> axes;
        std::map<std::pair<int, int>, std::set<bool>> roles;
        int visits = 0;
        for (const auto& component : tr.visits)
            for (const auto& visit : component) {
                axes[{visit.row, visit.col}].insert(visit.axis);
                roles[{visit.row, visit.col}].insert(visit.over);
                CHECK(is_over(mo.at(visit.row, visit.col), visit.axis) == visit.over);
                ++visits;
            }
        CHECK(static_cast<int>(axes.size()) == tr.crossings);
        CHECK(visits == 2 * tr.crossings);
        for (const auto& [cell, seen] : axes) CHECK(seen.size() == 2);
        for (const auto& [cell, seen] : roles) CHECK(seen.size() == 2);
        if (tr.components == 1) {
            REQUIRE(tr.gauss);
            CHECK(static_cast<int>(tr.gauss->symbols.size()) == 2 * tr.crossings);
        } else {
            CHECK_FALSE(tr.gauss.has_value());
        }
    }
}

TEST_CASE("signs are invariant under orientation reversal") {
    // Reversing the traversal flips both headings at a crossing; the
    // right-handed sign formula gives the same answer either way.
    std::mt19937 rng(555);
    for (int i = 0; i < 100; ++i) {
        const auto mo = vmtest::random_mosaic(rng);
        if (crossing_count(mo) == 0) continue;
        const auto tr = trace(mo);
        std::map<int, Side> over_heading, under_heading;
        for (const auto& component : tr.visits)
            for (const auto& visit : component)
                (visit.over ? over_heading : under_heading)[visit.crossing_id] = visit.heading;
        for (const auto& [id, sign] : tr.signs) {
            const int forward = rot90ccw(over_heading[id]) == under_heading[id] ? +1 : -1;
            const int backward =
                rot90ccw(opposite(over_heading[id])) == opposite(under_heading[id]) ? +1 : -1;
            CHECK(sign == forward);
            CHECK(forward == backward);
        }
    }
}

TEST_CASE("fixture corpus: single components with the named crossing counts") {
    for (const auto& rec : vmtest::manifest()) {
        CAPTURE(rec.name);
        const auto mo = vmtest::load_fixture(rec.file);
        const auto tr = trace(mo);
        CHECK(tr.components == 1);
        CHECK(tr.crossings == rec.crossings);
    }
}
