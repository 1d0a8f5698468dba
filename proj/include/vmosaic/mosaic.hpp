#pragma once

#include <string>
#include <vector>

#include "vmosaic/tiles.hpp"

namespace vmosaic {

// Which cell and cell-side a boundary edge touches.
struct BoundaryEdgeRef {
    int row;
    int col;
    Side side;
};

// An m x n grid of tiles plus a perfect pairing of the 2(m+n) boundary
// edges. Boundary edges are indexed counterclockwise starting at the top of
// the left side: left top-to-bottom = 0..m-1, bottom left-to-right =
// m..m+n-1, right bottom-to-top = m+n..2m+n-1, top right-to-left =
// 2m+n..2(m+n)-1. Corner k is the point where edge k starts, so edge k runs
// from corner k to corner k+1 (mod 2(m+n)).
struct Mosaic {
    int m = 0;
    int n = 0;
    std::vector<Tile> grid;       // row-major, m*n entries
    std::vector<int> mate;        // mate[e] = partner edge, 2(m+n) entries
    std::vector<std::string> edge_labels; // optional, as parsed; may be empty

    Tile at(int r, int c) const { return grid[r * n + c]; }
    Tile& at(int r, int c) { return grid[r * n + c]; }
    int boundary_count() const { return 2 * (m + n); }
};

bool operator==(const Mosaic& a, const Mosaic& b); // labels are ignored

BoundaryEdgeRef boundary_cell(const Mosaic& mo, int edge);
int boundary_index(int m, int n, int row, int col, Side side);

// True iff the tile next to the boundary edge has a strand end there.
bool edge_has_arc(const Mosaic& mo, int edge);

// Reads the .vmos text format: first line "m n", then m lines of n tile
// tokens, then the four label lines "top:", "right:", "bottom:", "left:"
// (top/bottom left-to-right, left/right top-to-bottom). '#' starts a
// comment. Each label must appear exactly twice across the four lines.
Mosaic parse_mosaic(const std::string& text);

// Canonical .vmos text: labels renamed a, b, c, ... in order of first
// appearance along the counterclockwise boundary walk.
std::string serialize(const Mosaic& mo);

// Canonical label for each boundary edge (what serialize prints).
std::vector<std::string> canonical_labels(const Mosaic& mo);

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// A mosaic is suitably connected iff every interior cell edge is consistent
// (both tiles connect there or neither does) and every boundary pair joins
// two arc edges or two blank edges.
ValidationReport validate(const Mosaic& mo);

void require_valid(const Mosaic& mo); // throws InvalidMosaic

} // namespace vmosaic
