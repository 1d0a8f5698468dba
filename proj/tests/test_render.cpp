#include "doctest.h"

#include "helpers.hpp"
#include "vmosaic/errors.hpp"
#include "vmosaic/render.hpp"
#include "vmosaic/surface.hpp"

#include <string>
#include <vector>

using namespace vmosaic;

namespace {

std::vector<std::vector<Tile>> grid_of(const Mosaic& mo) {
    std::vector<std::vector<Tile>> rows;
    for (int r = 0; r < mo.m; ++r) {
        rows.emplace_back();
        for (int c = 0; c < mo.n; ++c) rows.back().push_back(mo.at(r, c));
    }
    return rows;
}

int count_substring(const std::string& hay, const std::string& needle) {
    int count = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("the trefoil row renders to the pinned ascii sheet") {
    const auto mo = vmtest::load_fixture("table1/3_1.vmos");
    const std::string expected = "     b  a  a \n"
                                 "     |  |  | \n"
                                 "c   ----|---- b\n"
                                 "     |  |  | \n"
                                 "     d  d  c \n";
    CHECK(render_ascii(mo) == expected);
}

TEST_CASE("a blank tile renders as an empty cell with its margin labels") {
    const auto mo = parse_mosaic("1 1\nT0\ntop: a\nright: b\nbottom: a\nleft: b\n");
    const std::string expected = "     a \n"
                                 "       \n"
                                 "b       b\n"
                                 "       \n"
                                 "     a \n";
    CHECK(render_ascii(mo) == expected);
}

TEST_CASE("ascii art parses back to the tile grid for every fixture") {
    for (const auto& rec : vmtest::manifest()) {
        CAPTURE(rec.name);
        const auto mo = vmtest::load_fixture(rec.file);
        CHECK(read_ascii_tiles(render_ascii(mo)) == grid_of(mo));
    }
}

TEST_CASE("labels wider than a cell fall back to canonical names") {
    const auto mo = parse_mosaic("1 1\nT0\ntop: alpha\nright: b\nbottom: alpha\nleft: b\n");
    const auto art = render_ascii(mo);
    CHECK(art.find("alpha") == std::string::npos);
    CHECK(art.find('a') != std::string::npos);
    CHECK(read_ascii_tiles(art) == grid_of(mo));
}

TEST_CASE("invalid mosaics render with violation markers and still parse back") {
    // T5 runs east-west but the pairing joins east to north.
    const auto mo = parse_mosaic("1 1\nT5\ntop: a\nright: a\nbottom: b\nleft: b\n");
    REQUIRE(!validate(mo).valid());
    const auto art = render_ascii(mo);
    CHECK(art.find("\n! ") != std::string::npos);
    CHECK(read_ascii_tiles(art) == grid_of(mo));
}

TEST_CASE("ascii rendering is deterministic") {
    const auto mo = vmtest::load_fixture("figures/indexed_1x4.vmos");
    CHECK(render_ascii(mo) == render_ascii(mo));
    CHECK(render_svg(mo, true) == render_svg(mo, true));
}

TEST_CASE("garbage is rejected by the ascii reader") {
    CHECK_THROWS_AS(read_ascii_tiles("xyz"), SyntaxError);
    CHECK_THROWS_AS(read_ascii_tiles("ab\ncd\nef\ngh\nij\n"), SyntaxError);
    // A structurally sound sheet with an unknown 3x3 block.
    const std::string bogus = "     a \n"
                              "    ###\n"
                              "b   ###b\n"
                              "    ###\n"
                              "     a \n";
    CHECK_THROWS_AS(read_ascii_tiles(bogus), SyntaxError);
}

TEST_CASE("svg closures draw one virtual glyph per interlocking pair") {
    const auto demo = vmtest::load_fixture("figures/interlock_2x2.vmos");
    const auto svg2 = render_svg(demo, true);
    CHECK(svg2.rfind("<svg", 0) == 0);
    CHECK(count_substring(svg2, "class=\"virtual\"") == 1);
    CHECK(count_interlocking(demo) == 1);

    const auto seven = vmtest::load_fixture("table1/7_1.vmos");
    CHECK(count_substring(render_svg(seven, true), "class=\"virtual\"") == 0);

    for (const auto& rec : vmtest::manifest()) {
        const auto mo = vmtest::load_fixture(rec.file);
        CAPTURE(rec.name);
        CHECK(count_substring(render_svg(mo, true), "class=\"virtual\"") ==
              count_interlocking(mo));
    }
}

TEST_CASE("svg without closure renders any mosaic, valid or not") {
    const auto blank = parse_mosaic("1 1\nT0\ntop: a\nright: b\nbottom: a\nleft: b\n");
    const auto svg = render_svg(blank, false);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    const auto bad = parse_mosaic("1 1\nT5\ntop: a\nright: a\nbottom: b\nleft: b\n");
    REQUIRE(!validate(bad).valid());
    // Violations are printed into the image in warning red.
    CHECK(render_svg(bad, false).find("#cc0000") != std::string::npos);
    CHECK(render_svg(blank, false).find("#cc0000") == std::string::npos);
    CHECK_THROWS_AS(render_svg(bad, true), InvalidMosaic);
}
