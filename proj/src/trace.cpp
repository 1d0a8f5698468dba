#include "vmosaic/trace.hpp"

#include <algorithm>
#include <cassert>

namespace vmosaic {

namespace {

struct Position {
    int row;
    int col;
    Side entry;

    bool operator==(const Position&) const = default;
};

int side_index(Side s) { return static_cast<int>(s); }

} // namespace

TraceResult trace(const Mosaic& mosaic) {
    require_valid(mosaic);
    if (std::all_of(mosaic.grid.begin(), mosaic.grid.end(),
                    [](Tile t) { return t == Tile::T0; }))
        throw NoDiagram("mosaic has no arcs");

    int nb = mosaic.boundary_count();
    std::vector<char> edge_done(nb, 0);
    // visited[cell][side]: the strand through that connection point was traced.
    std::vector<std::array<char, 4>> visited(mosaic.grid.size(), {0, 0, 0, 0});
    auto cell_of = [&](int r, int c) { return r * mosaic.n + c; };

    TraceResult result;
    std::map<std::pair<int, int>, int> crossing_ids;
    struct Headings {
        Side over;
        Side under;
    };
    std::map<int, Headings> headings;

    auto next_start = [&]() -> std::optional<Position> {
        for (int e = 0; e < nb; ++e) {
            if (edge_done[e] || !edge_has_arc(mosaic, e)) continue;
            auto ref = boundary_cell(mosaic, e);
            return Position{ref.row, ref.col, ref.side};
        }
        for (int r = 0; r < mosaic.m; ++r)
            for (int c = 0; c < mosaic.n; ++c)
                for (Side s : all_sides)
                    if (has_connection(mosaic.at(r, c), s) &&
                        !visited[cell_of(r, c)][side_index(s)])
                        return Position{r, c, s};
        return std::nullopt;
    };

    while (auto start = next_start()) {
        std::vector<CrossingVisit> component;
        Position pos = *start;
        do {
            Tile tile = mosaic.at(pos.row, pos.col);
            Side exit = transit(tile, pos.entry);
            if (is_crossing(tile)) {
                Axis axis = (pos.entry == Side::North || pos.entry == Side::South)
                                ? Axis::NS
                                : Axis::EW;
                bool over = is_over(tile, axis);
                auto [it, fresh] = crossing_ids.try_emplace(
                    {pos.row, pos.col}, static_cast<int>(crossing_ids.size()) + 1);
                (void)fresh;
                Side heading = opposite(pos.entry);
                component.push_back(
                    {pos.row, pos.col, axis, heading, over, it->second});
                (over ? headings[it->second].over : headings[it->second].under) =
                    heading;
            }
            visited[cell_of(pos.row, pos.col)][side_index(pos.entry)] = 1;
            visited[cell_of(pos.row, pos.col)][side_index(exit)] = 1;

            int nr = pos.row, nc = pos.col;
            switch (exit) {
            case Side::North: --nr; break;
            case Side::South: ++nr; break;
            case Side::East: ++nc; break;
            case Side::West: --nc; break;
            }
            if (0 <= nr && nr < mosaic.m && 0 <= nc && nc < mosaic.n) {
                pos = {nr, nc, opposite(exit)};
            } else {
                int e = boundary_index(mosaic.m, mosaic.n, pos.row, pos.col, exit);
                int mate = mosaic.mate[e];
                edge_done[e] = edge_done[mate] = 1;
                auto ref = boundary_cell(mosaic, mate);
                pos = {ref.row, ref.col, ref.side};
            }
        } while (!(pos == *start));
        result.visits.push_back(std::move(component));
    }

    result.components = static_cast<int>(result.visits.size());
    result.crossings = static_cast<int>(crossing_ids.size());
    for (const auto& [id, h] : headings) {
        assert(h.over != h.under && h.over != opposite(h.under));
        result.signs[id] = rot90ccw(h.over) == h.under ? +1 : -1;
    }
    if (result.components == 1) {
        GaussCode code;
        for (const auto& v : result.visits.front())
            code.symbols.push_back({v.over, v.crossing_id, result.signs[v.crossing_id]});
        result.gauss = std::move(code);
    }
    return result;
}

int crossing_count(const Mosaic& mosaic) {
    require_valid(mosaic);
    return static_cast<int>(
        std::count_if(mosaic.grid.begin(), mosaic.grid.end(),
                      [](Tile t) { return is_crossing(t); }));
}

} // namespace vmosaic
