#include "vmosaic/rowbuild.hpp"

#include "vmosaic/tiles.hpp"

#include <cassert>
#include <map>
#include <vector>

namespace vmosaic {

namespace {

// Side a second visit must enter from so the crossing gets the wanted sign,
// given that the first visit ran horizontally eastward.
Side entry_side(Tile tile, int sign) {
    assert(is_crossing(tile));
    bool positive = sign > 0;
    if (tile == Tile::T9) return positive ? Side::South : Side::North;
    return positive ? Side::North : Side::South;
}

} // namespace

Mosaic build_row(const GaussCode& code) {
    if (code.symbols.empty()) throw EmptyCode("cannot build a row mosaic from an empty code");
    require_wellformed(code);

    // Rotate so a maximal nonrepeating run leads.
    int L = static_cast<int>(code.symbols.size());
    int want = max_nonrepeating(code);
    int rot = 0;
    for (; rot < L; ++rot) {
        std::map<int, int> ids;
        bool ok = true;
        for (int k = 0; k < want && ok; ++k)
            ok = ++ids[code.symbols[(rot + k) % L].id] == 1;
        if (ok) break;
    }
    assert(rot < L);
    std::vector<GaussSymbol> syms(L);
    for (int k = 0; k < L; ++k) syms[k] = code.symbols[(rot + k) % L];

    // Lay out columns: one per crossing in first-encounter order, plus one
    // routing column in front of every run of second visits that is followed
    // by more first encounters.
    std::vector<char> is_first(L, 0);
    std::map<int, int> column;
    std::vector<Tile> tiles;
    std::vector<int> routing_col(L, -1); // at the run's first symbol
    for (int k = 0; k < L; ++k) {
        if (!column.count(syms[k].id)) {
            is_first[k] = 1;
            column[syms[k].id] = static_cast<int>(tiles.size());
            tiles.push_back(syms[k].over ? Tile::T9 : Tile::T10);
        } else if (is_first[k - 1] && column.size() < static_cast<size_t>(L / 2)) {
            // A run of second visits with first encounters still to come.
            routing_col[k] = static_cast<int>(tiles.size());
            tiles.push_back(Tile::T0); // tile kind chosen below
        }
    }

    int w = static_cast<int>(tiles.size());
    Mosaic out;
    out.m = 1;
    out.n = w;
    out.grid = tiles;
    out.mate.assign(out.boundary_count(), -1);

    auto edge = [&](int colv, Side s) { return boundary_index(1, w, 0, colv, s); };
    int left = boundary_index(1, w, 0, 0, Side::West);
    int right = boundary_index(1, w, 0, w - 1, Side::East);
    auto pair_edges = [&](int a, int b) {
        assert(out.mate[a] == -1 && out.mate[b] == -1 && a != b);
        out.mate[a] = b;
        out.mate[b] = a;
    };

    // Walk the code again, emitting boundary pairs for the vertical runs.
    int k = 0;
    while (k < L) {
        if (is_first[k]) {
            ++k; // horizontal pass, pure tile adjacency
            continue;
        }
        int run_end = k;
        while (run_end < L && !is_first[run_end]) ++run_end;

        int col0 = column[syms[k].id];
        Side s0 = entry_side(out.at(0, col0), syms[k].sign);
        if (routing_col[k] >= 0) {
            // Mid-code: divert through a routing tile opposite the first
            // re-entry side, and catch the run's exit on the tile's other arc.
            int rc = routing_col[k];
            Side divert = opposite(s0);
            out.grid[rc] = divert == Side::South ? Tile::T7 : Tile::T8;
            pair_edges(edge(rc, divert), edge(col0, s0));
        } else {
            // Code ends with this run: the strand has left through the right
            // edge after the last crossing column.
            pair_edges(right, edge(col0, s0));
        }
        Side exit = opposite(s0);
        int prev_col = col0;
        for (int j = k + 1; j < run_end; ++j) {
            int colj = column[syms[j].id];
            Side sj = entry_side(out.at(0, colj), syms[j].sign);
            pair_edges(edge(prev_col, exit), edge(colj, sj));
            exit = opposite(sj);
            prev_col = colj;
        }
        if (routing_col[k] >= 0) {
            Side catch_side = out.grid[routing_col[k]] == Tile::T7 ? Side::North
                                                                   : Side::South;
            pair_edges(edge(prev_col, exit), edge(routing_col[k], catch_side));
        } else {
            pair_edges(edge(prev_col, exit), left);
        }
        k = run_end;
    }

    for (int e = 0; e < out.boundary_count(); ++e) assert(out.mate[e] >= 0);
    assert(validate(out).valid());
    return out;
}

int row_number_upper_bound(const GaussCode& code) {
    return build_row(code).n;
}

} // namespace vmosaic
