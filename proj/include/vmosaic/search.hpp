#pragma once

#include "vmosaic/gauss.hpp"
#include "vmosaic/mosaic.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace vmosaic {

struct SearchOptions {
    std::optional<int> genus_filter;
    bool require_knot = false;
    // Inclusive range of crossing-tile counts.
    std::optional<std::pair<int, int>> crossing_range;
    // Exhaustive-search guard; raise explicitly for larger runs.
    int max_cells = 12;
};

struct CensusEntry {
    GaussCode code; // canonical, reversal allowed
    Mosaic mosaic;  // first representative in stream order
    int genus = 0;
    int crossings = 0;
    int tiles = 0;
};

// Streams every valid m x n mosaic passing the filters, each exactly once,
// in a fixed order: tile grids by row-major backtracking with interior-edge
// pruning; per grid, every perfect matching of the arc-carrying boundary
// edges. Blank edges get one canonical adjacent pairing, except when
// genus_filter is set, in which case all blank pairings are enumerated too
// (blank gluings move the vertex count). Throws SearchSpaceTooLarge when
// m*n exceeds the guard.
void enumerate_mosaics(int m, int n, const SearchOptions& options,
                       const std::function<void(const Mosaic&)>& yield);

// Groups the stream of single-component mosaics by (canonical code, genus),
// keeping the first representative of each class, sorted by crossings then
// code text. Honors the VMOSAIC_THREADS cap when splitting the grid space
// across workers; output is identical at any thread count.
std::vector<CensusEntry> census(int m, int n, const SearchOptions& options);

// Least m*n <= max_area over all dimensions (area ascending, then m
// ascending) admitting a mosaic that traces to the given code up to
// canonical equivalence with reversal, with a witness. Dimensions and their
// transposes are distinct diagrams (transposition mirrors the knot), so both
// orders are searched. Throws NotFoundWithinBound.
std::pair<int, Mosaic> tile_number_bound(const GaussCode& code, int max_area);

// Least w <= max_width such that a 1 x w mosaic traces to the code, with a
// witness. Throws NotFoundWithinBound.
std::pair<int, Mosaic> row_number_bound(const GaussCode& code, int max_width);

} // namespace vmosaic
