#include "doctest.h"

#include "helpers.hpp"
#include "vmosaic/errors.hpp"
#include "vmosaic/indexpoly.hpp"
#include "vmosaic/surface.hpp"
#include "vmosaic/trace.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

using namespace vmosaic;

namespace {

// Cells holding a crossing, in traversal order of first visit.
std::vector<std::pair<int, int>> crossing_cells(const Mosaic& mo) {
    std::vector<std::pair<int, int>> cells;
    for (const auto& component : trace(mo).visits) {
        for (const auto& visit : component) {
            const std::pair<int, int> cell{visit.row, visit.col};
            if (std::find(cells.begin(), cells.end(), cell) == cells.end()) cells.push_back(cell);
        }
    }
    return cells;
}

IndexPolynomial poly(std::map<int, int> coeff) { return IndexPolynomial{std::move(coeff)}; }

} // namespace

TEST_CASE("the four-crossing example has indices 3,-1,-1,-1 and p_t=-t^3-3t+4") {
    const auto mo = vmtest::load_fixture("figures/indexed_1x4.vmos");
    std::vector<int> indices;
    for (const auto& [r, c] : crossing_cells(mo)) indices.push_back(intersection_index(mo, r, c));
    std::sort(indices.begin(), indices.end());
    CHECK(indices == std::vector<int>{-1, -1, -1, 3});
    const auto p = index_polynomial(mo);
    CHECK(p == poly({{3, -1}, {1, -3}, {0, 4}}));
    CHECK(to_string(p) == "-t^3-3t+4");
}

TEST_CASE("both zero-sum fixtures vanish crossing by crossing") {
    for (const char* name : {"figures/zerosum_1x5.vmos", "figures/zerosum_1x7.vmos"}) {
        CAPTURE(name);
        const auto mo = vmtest::load_fixture(name);
        for (const auto& [r, c] : crossing_cells(mo)) {
            CHECK(intersection_index(mo, r, c) == 0);
        }
        const auto p = index_polynomial(mo);
        CHECK(p == IndexPolynomial{});
        CHECK(to_string(p) == "0");
    }
}

TEST_CASE("genus-zero diagrams have identically zero polynomials") {
    for (const auto& rec : vmtest::manifest()) {
        if (!rec.genus || *rec.genus != 0) continue;
        const auto mo = vmtest::load_fixture(rec.file);
        if (trace(mo).components != 1) continue;
        CAPTURE(rec.name);
        CHECK(index_polynomial(mo) == IndexPolynomial{});
        for (const auto& [r, c] : crossing_cells(mo)) {
            CHECK(intersection_index(mo, r, c) == 0);
        }
    }
}

TEST_CASE("polynomial printing") {
    CHECK(to_string(IndexPolynomial{}) == "0");
    CHECK(to_string(poly({{1, 1}})) == "t");
    CHECK(to_string(poly({{1, -1}})) == "-t");
    CHECK(to_string(poly({{0, -2}})) == "-2");
    CHECK(to_string(poly({{0, 1}})) == "1");
    CHECK(to_string(poly({{2, 5}, {0, -5}})) == "5t^2-5");
    CHECK(to_string(poly({{4, 1}, {2, -2}, {1, 1}})) == "t^4-2t^2+t");
}

TEST_CASE("smoothing a single-crossing kink picks the direction-matched arc tile") {
    struct Case {
        const char* text;
        int sign;
        Tile smoothed;
    };
    // Labels {top,right}+{bottom,left} route the strands W->E and N->S;
    // {top,left}+{bottom,right} route them W->E and S->N.
    const Case cases[] = {
        {"1 1\nT9\ntop: a\nright: a\nbottom: b\nleft: b\n", -1, Tile::T7},
        {"1 1\nT9\ntop: a\nright: b\nbottom: b\nleft: a\n", +1, Tile::T8},
        {"1 1\nT10\ntop: a\nright: a\nbottom: b\nleft: b\n", +1, Tile::T7},
        {"1 1\nT10\ntop: a\nright: b\nbottom: b\nleft: a\n", -1, Tile::T8},
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        const auto mo = parse_mosaic(c.text);
        const auto tr = trace(mo);
        REQUIRE(tr.components == 1);
        REQUIRE(tr.signs.size() == 1);
        CHECK(tr.signs.at(1) == c.sign);
        const auto sm = smooth(mo, 0, 0);
        CHECK(sm.mosaic.at(0, 0) == c.smoothed);
        CHECK(sm.row == 0);
        CHECK(sm.col == 0);
        CHECK(sm.component_of.empty()); // no crossings left
        CHECK(validate(sm.mosaic).valid());
        CHECK(trace(sm.mosaic).components == 2);
        CHECK(intersection_index(mo, 0, 0) == 0);
        CHECK(index_polynomial(mo) == IndexPolynomial{});
    }
}

TEST_CASE("smoothing errors") {
    const auto mo = vmtest::load_fixture("figures/inject_base_3x3.vmos");
    // Find a non-crossing cell.
    bool found = false;
    for (int r = 0; r < mo.m && !found; ++r) {
        for (int c = 0; c < mo.n && !found; ++c) {
            if (connection_count(mo.at(r, c)) == 4) continue;
            CHECK_THROWS_AS(smooth(mo, r, c), NotACrossingCell);
            CHECK_THROWS_AS(intersection_index(mo, r, c), NotACrossingCell);
            found = true;
        }
    }
    CHECK(found);

    auto broken = vmtest::load_fixture("figures/indexed_1x4.vmos");
    broken.at(0, 0) = Tile::T0;
    CHECK_THROWS_AS(index_polynomial(broken), InvalidMosaic);

    // A two-component link is not a knot.
    const auto link = parse_mosaic("1 1\nT9\ntop: a\nright: b\nbottom: a\nleft: b\n");
    REQUIRE(validate(link).valid());
    REQUIRE(trace(link).components == 2);
    CHECK_THROWS_AS(index_polynomial(link), NotAKnot);
    CHECK_THROWS_AS(smooth(link, 0, 0), NotAKnot);
}

TEST_CASE("the tile-level index always agrees with the cycle-splitting oracle") {
    for (const auto& rec : vmtest::manifest()) {
        const auto mo = vmtest::load_fixture(rec.file);
        if (trace(mo).components != 1) continue;
        CAPTURE(rec.name);
        for (const auto& [r, c] : crossing_cells(mo)) {
            CHECK(intersection_index(mo, r, c) == intersection_index_oracle(mo, r, c));
        }
    }

    std::mt19937 rng(777);
    int checked = 0;
    for (int iter = 0; iter < 400 && checked < 150; ++iter) {
        const auto mo = vmtest::random_mosaic(rng);
        TraceResult tr;
        try {
            tr = trace(mo);
        } catch (const NoDiagram&) {
            continue;
        }
        if (tr.components != 1) continue;
        for (const auto& [r, c] : crossing_cells(mo)) {
            CAPTURE(serialize(mo));
            CHECK(intersection_index(mo, r, c) == intersection_index_oracle(mo, r, c));
            ++checked;
        }
    }
    CHECK(checked >= 150);
}

TEST_CASE("smoothed diagrams stay valid and split every remaining pass in two") {
    std::mt19937 rng(4096);
    int smoothed = 0;
    for (int iter = 0; iter < 300 && smoothed < 80; ++iter) {
        const auto mo = vmtest::random_mosaic(rng);
        TraceResult tr;
        try {
            tr = trace(mo);
        } catch (const NoDiagram&) {
            continue; // all-blank sample
        }
        if (tr.components != 1 || tr.crossings == 0) continue;
        for (const auto& [r, c] : crossing_cells(mo)) {
            const auto sm = smooth(mo, r, c);
            CHECK(validate(sm.mosaic).valid());
            CHECK(trace(sm.mosaic).components == 2);
            CHECK(sm.component_of.size() == size_t(2 * (tr.crossings - 1)));
            for (const auto& [pass, comp] : sm.component_of) {
                CHECK((comp == 1 || comp == 2));
                CHECK(std::get<0>(pass) >= 0);
            }
            ++smoothed;
        }
    }
    CHECK(smoothed >= 80);
}
