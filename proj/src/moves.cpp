#include "vmosaic/moves.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace vmosaic {

namespace {

// Maps an old boundary edge to its post-injection index. Left/right edges
// follow their row and top/bottom edges their column; a band never severs a
// strand, it only lengthens it.
int shifted_edge(const Mosaic& mo, int edge, bool rows, int cut, int new_m,
                 int new_n) {
    auto ref = boundary_cell(mo, edge);
    int r = ref.row, c = ref.col;
    if (rows) {
        switch (ref.side) {
        case Side::West:
        case Side::East: r = r < cut ? r : r + 2; break;
        case Side::North: r = 0; break;
        case Side::South: r = new_m - 1; break;
        }
    } else {
        switch (ref.side) {
        case Side::North:
        case Side::South: c = c < cut ? c : c + 2; break;
        case Side::West: c = 0; break;
        case Side::East: c = new_n - 1; break;
        }
    }
    return boundary_index(new_m, new_n, r, c, ref.side);
}

std::string fresh_label(std::set<std::string>& used) {
    static const char* preferred[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
    for (const char* p : preferred)
        if (used.insert(p).second) return p;
    for (int k = 0;; ++k) {
        std::string candidate = "x" + std::to_string(k);
        if (used.insert(candidate).second) return candidate;
    }
}

Mosaic inject_band(const Mosaic& mo, bool rows, int cut) {
    Mosaic out;
    out.m = mo.m + (rows ? 2 : 0);
    out.n = mo.n + (rows ? 0 : 2);
    out.grid.resize(static_cast<size_t>(out.m) * out.n, Tile::T0);

    for (int r = 0; r < out.m; ++r) {
        for (int c = 0; c < out.n; ++c) {
            Tile t;
            if (rows && (r == cut || r == cut + 1)) {
                bool crossed = cut < mo.m
                                   ? has_connection(mo.at(cut, c), Side::North)
                                   : has_connection(mo.at(mo.m - 1, c), Side::South);
                t = crossed ? Tile::T6 : Tile::T0;
            } else if (!rows && (c == cut || c == cut + 1)) {
                bool crossed = cut < mo.n
                                   ? has_connection(mo.at(r, cut), Side::West)
                                   : has_connection(mo.at(r, mo.n - 1), Side::East);
                t = crossed ? Tile::T5 : Tile::T0;
            } else {
                int orr = rows && r > cut + 1 ? r - 2 : r;
                int occ = !rows && c > cut + 1 ? c - 2 : c;
                t = mo.at(orr, occ);
            }
            out.grid[static_cast<size_t>(r) * out.n + c] = t;
        }
    }

    out.mate.assign(out.boundary_count(), -1);
    bool keep_labels = !mo.edge_labels.empty();
    if (keep_labels) out.edge_labels.assign(out.boundary_count(), "");
    for (int e = 0; e < mo.boundary_count(); ++e) {
        int ne = shifted_edge(mo, e, rows, cut, out.m, out.n);
        out.mate[ne] = shifted_edge(mo, mo.mate[e], rows, cut, out.m, out.n);
        if (keep_labels) out.edge_labels[ne] = mo.edge_labels[e];
    }

    // The band's own four edges form two fresh adjacent pairs.
    std::pair<int, int> pairs[2];
    if (rows) {
        pairs[0] = {boundary_index(out.m, out.n, cut, 0, Side::West),
                    boundary_index(out.m, out.n, cut + 1, 0, Side::West)};
        pairs[1] = {boundary_index(out.m, out.n, cut, out.n - 1, Side::East),
                    boundary_index(out.m, out.n, cut + 1, out.n - 1, Side::East)};
    } else {
        pairs[0] = {boundary_index(out.m, out.n, out.m - 1, cut, Side::South),
                    boundary_index(out.m, out.n, out.m - 1, cut + 1, Side::South)};
        pairs[1] = {boundary_index(out.m, out.n, 0, cut, Side::North),
                    boundary_index(out.m, out.n, 0, cut + 1, Side::North)};
    }
    std::set<std::string> used(mo.edge_labels.begin(), mo.edge_labels.end());
    for (auto [a, b] : pairs) {
        out.mate[a] = b;
        out.mate[b] = a;
        if (keep_labels) out.edge_labels[a] = out.edge_labels[b] = fresh_label(used);
    }
    assert(validate(out).valid());
    return out;
}

Mosaic eject_band(const Mosaic& mo, bool rows, int cut) {
    int span = rows ? mo.m : mo.n;
    if (cut < 0 || cut + 1 >= span || span - 2 < 1)
        throw SiteOutOfRange("no removable band at position " +
                             std::to_string(cut));

    std::string offending;
    Tile pass = rows ? Tile::T6 : Tile::T5;
    for (int k = 0; k < 2; ++k) {
        for (int along = 0; along < (rows ? mo.n : mo.m); ++along) {
            int r = rows ? cut + k : along;
            int c = rows ? along : cut + k;
            Tile t = mo.at(r, c);
            if (t != Tile::T0 && t != pass)
                offending += " (" + std::to_string(r) + "," + std::to_string(c) +
                             ") holds " + std::string(tile_token(t));
        }
    }
    if (!offending.empty())
        throw NotEjectable("band is not a straight pass-through:" + offending);

    std::pair<int, int> pairs[2];
    if (rows) {
        pairs[0] = {boundary_index(mo.m, mo.n, cut, 0, Side::West),
                    boundary_index(mo.m, mo.n, cut + 1, 0, Side::West)};
        pairs[1] = {boundary_index(mo.m, mo.n, cut, mo.n - 1, Side::East),
                    boundary_index(mo.m, mo.n, cut + 1, mo.n - 1, Side::East)};
    } else {
        pairs[0] = {boundary_index(mo.m, mo.n, mo.m - 1, cut, Side::South),
                    boundary_index(mo.m, mo.n, mo.m - 1, cut + 1, Side::South)};
        pairs[1] = {boundary_index(mo.m, mo.n, 0, cut, Side::North),
                    boundary_index(mo.m, mo.n, 0, cut + 1, Side::North)};
    }
    for (auto [a, b] : pairs)
        if (mo.mate[a] != b)
            throw NotEjectable("band boundary edges are not paired adjacently");

    Mosaic out;
    out.m = mo.m - (rows ? 2 : 0);
    out.n = mo.n - (rows ? 0 : 2);
    out.grid.resize(static_cast<size_t>(out.m) * out.n);
    for (int r = 0; r < out.m; ++r)
        for (int c = 0; c < out.n; ++c)
            out.grid[static_cast<size_t>(r) * out.n + c] =
                mo.at(rows && r >= cut ? r + 2 : r, !rows && c >= cut ? c + 2 : c);

    // Surviving old edges and new edges correspond through the same shift
    // rule that injection used.
    std::vector<int> old_to_new(mo.boundary_count(), -1);
    std::vector<int> old_of(out.boundary_count(), -1);
    for (int ne = 0; ne < out.boundary_count(); ++ne) {
        int oe = shifted_edge(out, ne, rows, cut, mo.m, mo.n);
        old_of[ne] = oe;
        old_to_new[oe] = ne;
    }
    out.mate.assign(out.boundary_count(), -1);
    bool keep_labels = !mo.edge_labels.empty();
    if (keep_labels) out.edge_labels.assign(out.boundary_count(), "");
    for (int ne = 0; ne < out.boundary_count(); ++ne) {
        int om = mo.mate[old_of[ne]];
        assert(old_to_new[om] >= 0);
        out.mate[ne] = old_to_new[om];
        if (keep_labels) out.edge_labels[ne] = mo.edge_labels[old_of[ne]];
    }
    assert(validate(out).valid());
    return out;
}

void check_site(const Mosaic& mo, const InjectionSite& site) {
    bool row_ok = site.i >= 0 && site.i <= mo.m;
    bool col_ok = site.j >= 0 && site.j <= mo.n;
    switch (site.kind) {
    case MoveKind::Row:
        if (!row_ok) throw SiteOutOfRange("row cut " + std::to_string(site.i) +
                                          " outside [0, " + std::to_string(mo.m) + "]");
        break;
    case MoveKind::Column:
        if (!col_ok) throw SiteOutOfRange("column cut " + std::to_string(site.j) +
                                          " outside [0, " + std::to_string(mo.n) + "]");
        break;
    case MoveKind::Square:
        if (!row_ok || !col_ok)
            throw SiteOutOfRange("square cut (" + std::to_string(site.i) + ", " +
                                 std::to_string(site.j) + ") out of range");
        break;
    }
}

} // namespace

Mosaic inject(const Mosaic& mosaic, const InjectionSite& site) {
    require_valid(mosaic);
    check_site(mosaic, site);
    switch (site.kind) {
    case MoveKind::Row: return inject_band(mosaic, true, site.i);
    case MoveKind::Column: return inject_band(mosaic, false, site.j);
    case MoveKind::Square:
        return inject_band(inject_band(mosaic, true, site.i), false, site.j);
    }
    assert(false);
    return mosaic;
}

Mosaic eject(const Mosaic& mosaic, const InjectionSite& site) {
    require_valid(mosaic);
    switch (site.kind) {
    case MoveKind::Row: return eject_band(mosaic, true, site.i);
    case MoveKind::Column: return eject_band(mosaic, false, site.j);
    case MoveKind::Square:
        return eject_band(eject_band(mosaic, false, site.j), true, site.i);
    }
    assert(false);
    return mosaic;
}

} // namespace vmosaic
