#pragma once

#include "vmosaic/gauss.hpp"
#include "vmosaic/mosaic.hpp"

namespace vmosaic {

// Builds a valid 1xw row mosaic whose trace canonicalizes to the given code,
// signs and over/under included, with w <= 2 * crossings.
//
// The code is rotated so a maximal nonrepeating run comes first. First
// encounters become crossing tiles laid left to right and crossed
// horizontally (O picks the tile whose horizontal strand is over). Each
// maximal run of second visits is walked vertically: the strand leaves the
// row through a routing tile (mid-code) or the right edge (at the end),
// re-enters each stored crossing from the top or bottom side that realizes
// its sign, and boundary pairs carry it between visits. The final exit pairs
// with the left edge, closing the loop. Throws EmptyCode, BadCode.
Mosaic build_row(const GaussCode& code);

// Width of build_row(code). Throws EmptyCode, BadCode.
int row_number_upper_bound(const GaussCode& code);

} // namespace vmosaic
