#pragma once

#include "vmosaic/mosaic.hpp"
#include "vmosaic/tiles.hpp"

#include <map>
#include <string>
#include <tuple>

namespace vmosaic {

// One strand pass through a crossing cell, keyed by cell and strand axis.
using StrandPass = std::tuple<int, int, Axis>;

// A knot diagram with one crossing replaced by its oriented smoothing.
// component_of labels every remaining crossing pass with 1 or 2; component 1
// is the arc on the left when the smoothed site is turned so both outgoing
// arcs point upward.
struct SmoothedDiagram {
    Mosaic mosaic;
    std::map<StrandPass, int> component_of;
    int row = 0; // the smoothed cell
    int col = 0;
};

// p_t as a sparse exponent -> coefficient map; zero coefficients are never
// stored, so the zero polynomial is an empty map.
struct IndexPolynomial {
    std::map<int, int> coefficients;
    friend bool operator==(const IndexPolynomial&, const IndexPolynomial&) = default;
};

// Descending exponents with explicit signs, "t" for exponent 1 and a bare
// integer for exponent 0, e.g. "-t^3-3t+4"; the zero polynomial prints "0".
std::string to_string(const IndexPolynomial& poly);

// Replaces the crossing at (row, col) by the double-arc tile that reconnects
// each incoming strand to the other strand's outgoing end, then labels the
// two resulting components. Throws InvalidMosaic, NotACrossingCell, NotAKnot.
SmoothedDiagram smooth(const Mosaic& mosaic, int row, int col);

// Sum of alpha(x) over the crossings x traversed by both components of the
// smoothing at (row, col): alpha(x) = +1 when component 1 crosses x from
// left to right across component 2 (headings taken from the original
// orientation), -1 otherwise. Throws as smooth does.
int intersection_index(const Mosaic& mosaic, int row, int col);

// Independent recomputation of intersection_index that never builds the
// smoothed mosaic: it splits the traced visit cycle at the crossing's two
// passes and classifies every other crossing by which halves its passes fall
// into. Kept as a permanent cross-check for the tile-level route.
int intersection_index_oracle(const Mosaic& mosaic, int row, int col);

// p_t = sum over crossings d of sign(d) * (t^|i(d)| - 1). Throws
// InvalidMosaic, NotAKnot.
IndexPolynomial index_polynomial(const Mosaic& mosaic);

} // namespace vmosaic
