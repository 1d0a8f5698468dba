#include "doctest.h"

#include "helpers.hpp"
#include "vmosaic/errors.hpp"
#include "vmosaic/gauss.hpp"
#include "vmosaic/surface.hpp"
#include "vmosaic/trace.hpp"

#include <algorithm>
#include <random>

using namespace vmosaic;

namespace {

GaussCode rotated(const GaussCode& code, size_t by) {
    GaussCode out = code;
    std::rotate(out.symbols.begin(), out.symbols.begin() + static_cast<long>(by),
                out.symbols.end());
    return out;
}

GaussCode reversed(const GaussCode& code) {
    GaussCode out = code;
    std::reverse(out.symbols.begin(), out.symbols.end());
    return out;
}

} // namespace

TEST_CASE("full grammar parses and renumbers") {
    const auto code = parse_code("O3+U5-O5-U3+");
    REQUIRE(code.symbols.size() == 4);
    CHECK(code.crossings() == 2);
    // ids renumbered by first appearance: 3 -> 1, 5 -> 2
    CHECK(print_code(code) == "O1+U2-O2-U1+");
}

TEST_CASE("full grammar is strict") {
    CHECK_THROWS_AS(parse_code(""), SyntaxError);
    CHECK_THROWS_AS(parse_code("   "), SyntaxError);
    CHECK_THROWS_AS(parse_code("O1"), SyntaxError);       // missing sign
    CHECK_THROWS_AS(parse_code("O1+U2"), SyntaxError);    // missing sign
    CHECK_THROWS_AS(parse_code("Q1+"), SyntaxError);      // bad pass letter
    CHECK_THROWS_AS(parse_code("O+"), SyntaxError);       // missing id
    CHECK_THROWS_AS(parse_code("O1+U2+"), BadCode);       // ids appear once
    CHECK_THROWS_AS(parse_code("O1+O1+"), BadCode);       // twice over
    CHECK_THROWS_AS(parse_code("O1+U1-"), BadCode);       // sign mismatch
    CHECK_THROWS_AS(parse_code("O1+U1+O2+U2+O1+U1+"), BadCode); // id four times
}

TEST_CASE("shorthand reads first occurrence as over") {
    const auto code = parse_code("1 2 1 2");
    CHECK(print_code(code) == "O1+O2+U1+U2+");
}

TEST_CASE("shorthand sign marks: first occurrence wins, unmarked is positive") {
    // 8 is marked + at its first occurrence and - at its second: + wins.
    // 3 is marked - first and left bare at the end.
    const auto code = parse_code("1-8+5-6+2-1+4-5+6-7+3-4+8-2+7-3");
    REQUIRE(code.crossings() == 8);
    const auto sign_of = [&](int id) {
        for (const auto& s : code.symbols)
            if (s.id == id) return s.sign;
        FAIL("id not found");
        return 0;
    };
    // Renumbered order of first appearance: 1,8,5,6,2,4,7,3 -> ids 1..8.
    CHECK(sign_of(1) == -1); // "1-"
    CHECK(sign_of(2) == +1); // "8+" despite the later "8-"
    CHECK(sign_of(5) == -1); // "2-" despite the later "2+"
    CHECK(sign_of(8) == -1); // "3-" with a bare second occurrence
    CHECK_THROWS_AS(parse_code("1 1 1 2 2"), BadCode);
}

TEST_CASE("print and parse are inverse") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto code = vmtest::random_code(rng);
        CHECK(parse_code(print_code(code)) == code);
    }
}

TEST_CASE("well-formedness checks each crossing") {
    GaussCode bad;
    bad.symbols = {{true, 1, +1}, {true, 1, +1}};
    CHECK_THROWS_AS(require_wellformed(bad), BadCode);
    bad.symbols = {{true, 1, +1}, {false, 1, -1}};
    CHECK_THROWS_AS(require_wellformed(bad), BadCode);
    bad.symbols = {{true, 1, +1}};
    CHECK_THROWS_AS(require_wellformed(bad), BadCode);
    GaussCode empty;
    CHECK_NOTHROW(require_wellformed(empty)); // vacuously fine
}

TEST_CASE("canonicalize is invariant under rotation") {
    const auto trefoil = parse_code("O1+U2+O3+U1+O2+U3+");
    const auto canon = canonicalize(trefoil, false);
    for (size_t by = 0; by < trefoil.symbols.size(); ++by) {
        CHECK(canonicalize(rotated(trefoil, by), false) == canon);
        CHECK(canonicalize(rotated(trefoil, by), true) == canonicalize(trefoil, true));
    }
    // The canonical representative prefers O first, then small ids.
    CHECK(print_code(canon) == "O1+U2+O3+U1+O2+U3+");
}

TEST_CASE("canonicalize with reversal identifies a cycle with its reverse") {
    std::mt19937 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto code = vmtest::random_code(rng, 6);
        const auto back = reversed(code);
        CHECK(canonicalize(code, true) == canonicalize(back, true));
    }
}

TEST_CASE("canonicalize orders O before U") {
    const auto kink = parse_code("U1+O1+");
    CHECK(print_code(canonicalize(kink, false)) == "O1+U1+");
    CHECK(print_code(canonicalize(parse_code("O1-U1-"), false)) == "O1-U1-");
}

TEST_CASE("max nonrepeating run length") {
    CHECK(max_nonrepeating(parse_code("O1+U1+")) == 1);
    CHECK(max_nonrepeating(parse_code("O1+U2+O3+U1+O2+U3+")) == 3);
    // The worked six-crossing example has a run of 5.
    CHECK(max_nonrepeating(parse_code("O1-U2+O3+U1-O4-U5+O2+U4-O6+U3+O5+U6+")) == 5);
    // The eight-crossing shorthand example has a run of 7.
    CHECK(max_nonrepeating(parse_code("1-8+5-6+2-1+4-5+6-7+3-4+8-2+7-3")) == 7);
    GaussCode empty;
    CHECK(max_nonrepeating(empty) == 0);
}

TEST_CASE("planarity: classical codes embed, the virtual trefoil does not") {
    CHECK(is_realizable_planar(parse_code("O1+U1+")));
    CHECK(is_realizable_planar(parse_code("O1+U2+O3+U1+O2+U3+"))); // trefoil
    CHECK(is_realizable_planar(parse_code("U1-O2-U3+O4+U2-O1-U4+O3+"))); // figure eight
    CHECK_FALSE(is_realizable_planar(parse_code("O1+U2+U1+O2+"))); // virtual trefoil
    GaussCode empty;
    CHECK(is_realizable_planar(empty));
}

TEST_CASE("planarity guard rejects oversized codes") {
    GaussCode big;
    for (int id = 1; id <= 19; ++id) big.symbols.push_back({true, id, +1});
    for (int id = 1; id <= 19; ++id) big.symbols.push_back({false, id, +1});
    CHECK_THROWS_AS(is_realizable_planar(big), SearchSpaceTooLarge);
}

TEST_CASE("genus-zero closures always trace to planar-realizable codes") {
    for (const auto& rec : vmtest::manifest()) {
        const auto mo = vmtest::load_fixture(rec.file);
        if (genus(mo).genus != 0) continue;
        const auto tr = trace(mo);
        if (tr.components != 1) continue;
        CAPTURE(rec.name);
        CHECK(is_realizable_planar(*tr.gauss));
    }
}

TEST_CASE("nonzero polynomial implies a nonplanar code") {
    // Only proper virtual knots have p_t != 0, and their codes never embed.
    const auto mo = vmtest::load_fixture("figures/indexed_1x4.vmos");
    const auto tr = trace(mo);
    REQUIRE(tr.gauss);
    CHECK_FALSE(is_realizable_planar(*tr.gauss));
}
