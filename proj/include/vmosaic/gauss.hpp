#pragma once

#include <string>
#include <vector>

#include "vmosaic/errors.hpp"

namespace vmosaic {

// One crossing visit: over or under, crossing id, crossing sign.
struct GaussSymbol {
    bool over = true;
    int id = 0;
    int sign = +1; // +1 or -1
    friend bool operator==(const GaussSymbol&, const GaussSymbol&) = default;
};

// Cyclic record of the crossing visits of a knot diagram. Each id appears
// exactly twice, once O and once U, with the same sign both times.
struct GaussCode {
    std::vector<GaussSymbol> symbols;
    int crossings() const { return static_cast<int>(symbols.size()) / 2; }
    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

// Accepts the full grammar ("O1-U2+...") or the classical shorthand
// ("1-2+...") where an id's first occurrence is read as O and its second as
// U. Shorthand sign marks may be omitted or disagree between occurrences
// (some sources mark passes rather than crossings); the first occurrence's
// mark wins, and an id with no mark at all is taken positive. The full
// grammar is strict: every symbol carries a sign and both must agree.
GaussCode parse_code(const std::string& text); // throws SyntaxError, BadCode

// Throws BadCode unless every id appears exactly twice, once over and once
// under, with matching signs.
void require_wellformed(const GaussCode& code);

// Same code with ids rewritten 1..k in order of first appearance.
GaussCode renumber_by_first_appearance(GaussCode code);

std::string print_code(const GaussCode& code); // "O1-U2+..."

// Lexicographically least representative over all rotations (and the
// reversed cycle when allow_reversal), ids renumbered by first appearance.
// Symbols order as O < U, then id, then + < -.
GaussCode canonicalize(const GaussCode& code, bool allow_reversal);

// Length of the longest cyclic run of symbols with pairwise distinct ids.
int max_nonrepeating(const GaussCode& code);

// True iff the code's chord diagram embeds in the plane. Decided exactly:
// a cheap interlacement parity filter first, then exhaustive search over
// the two transversal rotations per crossing for a genus-0 embedding.
bool is_realizable_planar(const GaussCode& code); // throws SearchSpaceTooLarge

} // namespace vmosaic
