#pragma once

#include "vmosaic/gauss.hpp"
#include "vmosaic/mosaic.hpp"
#include "vmosaic/tiles.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vmosaic {

// One pass of the traversal through a crossing tile.
struct CrossingVisit {
    int row = 0;
    int col = 0;
    Axis axis = Axis::NS;  // axis of the strand being traversed
    Side heading = Side::North;  // direction of travel
    bool over = false;
    int crossing_id = 0;  // crossings numbered 1.. by first encounter

    bool operator==(const CrossingVisit&) const = default;
};

struct TraceResult {
    int components = 0;
    std::vector<std::vector<CrossingVisit>> visits;  // one list per component
    std::map<int, int> signs;                        // crossing id -> +1 / -1
    std::optional<GaussCode> gauss;                  // set when components == 1
    int crossings = 0;                               // distinct crossing cells
};

// Follows every strand of the closure. Starts at the lowest-indexed
// arc-carrying boundary edge heading inward (or, when the boundary is all
// blank, at the first connected tile side in row-major N,E,S,W order) and
// restarts from unvisited strand points until all arcs are consumed.
// Crossing signs use the right-handed rule: +1 iff rotating the over-strand
// heading a quarter turn counterclockwise gives the under-strand heading.
// Throws InvalidMosaic on an invalid mosaic, NoDiagram when every tile is
// blank.
TraceResult trace(const Mosaic& mosaic);

// Number of crossing tiles in the grid. Throws InvalidMosaic.
int crossing_count(const Mosaic& mosaic);

} // namespace vmosaic
