#pragma once

#include "vmosaic/mosaic.hpp"

#include <string>
#include <vector>

namespace vmosaic {

// Fixed-width ASCII drawing: one 3x3 character block per tile, boundary
// labels in the margins (stored labels when the mosaic has them, canonical
// otherwise). Invalid mosaics render too, with their violations appended as
// "! ..." lines. Deterministic.
std::string render_ascii(const Mosaic& mosaic);

// Recovers the tile grid from render_ascii output (the inverse used by the
// round-trip tests); tolerates the margin labels and trailing annotation
// lines. Throws SyntaxError when a block matches no tile.
std::vector<std::vector<Tile>> read_ascii_tiles(const std::string& art);

// Standalone SVG document. With show_closure (requires a valid mosaic) the
// boundary is unrolled onto a line under the grid and paired edges are
// joined by semicircular chords: arc pairs solid, blank pairs dashed, and
// every interlocking arc-pair intersection is marked with the small-circle
// virtual-crossing glyph, so glyph count equals count_interlocking.
std::string render_svg(const Mosaic& mosaic, bool show_closure);

} // namespace vmosaic
