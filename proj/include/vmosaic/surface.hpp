#pragma once

#include "vmosaic/mosaic.hpp"

namespace vmosaic {

struct SurfaceReport {
    int v = 0;                 // distinct boundary vertex classes
    int genus = 0;             // (1 - v + m + n) / 2
    int virtual_crossings = 0; // interlocked arc-pair count
};

// Number of equivalence classes of the 2(m+n) rectangle corners under the
// pairing. Each pair {i, j} is glued orientation-reversingly along the
// boundary walk: start(i) ~ end(j) and end(i) ~ start(j).
int boundary_vertices(const Mosaic& mo); // throws InvalidMosaic

SurfaceReport genus(const Mosaic& mo); // throws InvalidMosaic

// Independent check: genus from the Euler characteristic of the full cell
// structure of the closure (lattice points, unit segments, and cells,
// modulo the boundary identifications).
int genus_oracle(const Mosaic& mo); // throws InvalidMosaic

// Number of unordered pairs of arc-carrying boundary pairs whose endpoints
// interleave cyclically (pattern i..j..i..j). Each such pair forces one
// virtual crossing in a planar rendering of the closure.
int count_interlocking(const Mosaic& mo); // throws InvalidMosaic

} // namespace vmosaic
