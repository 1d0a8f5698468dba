#pragma once

#include "vmosaic/mosaic.hpp"

namespace vmosaic {

enum class MoveKind { Row, Column, Square };

// A cut position: Row uses i in [0, m] (band goes after the first i rows),
// Column uses j in [0, n], Square uses both. Ejection interprets the same
// coordinates as the index of the first band row/column to remove.
struct InjectionSite {
    MoveKind kind = MoveKind::Row;
    int i = 0;
    int j = 0;
};

// Inserts a two-row and/or two-column band of pass-through tiles at the cut:
// T6 where a vertical strand crosses a row cut, T5 where a horizontal strand
// crosses a column cut, T0 elsewhere. The band's new blank boundary edges are
// paired adjacently with fresh labels. Preserves validity, genus, and the
// traced code. Throws InvalidMosaic or SiteOutOfRange.
Mosaic inject(const Mosaic& mosaic, const InjectionSite& site);

// Exact inverse: removes the band inserted by inject at the same site, so
// eject(inject(M, s), s) == M including labels. The band must consist of
// straight pass-throughs only and its outer edges must be paired adjacently;
// otherwise throws NotEjectable naming the offending cells. Throws
// InvalidMosaic or SiteOutOfRange.
Mosaic eject(const Mosaic& mosaic, const InjectionSite& site);

} // namespace vmosaic
