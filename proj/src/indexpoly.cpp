#include "vmosaic/indexpoly.hpp"

#include "vmosaic/trace.hpp"

#include <cassert>
#include <optional>

namespace vmosaic {

namespace {

// Grid directions as vectors with east = +x and north = +y.
std::pair<int, int> side_vec(Side s) {
    switch (s) {
    case Side::North: return {0, 1};
    case Side::East: return {1, 0};
    case Side::South: return {0, -1};
    case Side::West: return {-1, 0};
    }
    return {0, 0};
}

int cross(Side a, Side b) {
    auto [ax, ay] = side_vec(a);
    auto [bx, by] = side_vec(b);
    return ax * by - ay * bx;
}

struct CrossingSite {
    Side over_heading;
    Side under_heading;
    int pos_over;  // position in the single component's visit list
    int pos_under;
};

// The traced single component plus where it passes the chosen crossing.
CrossingSite site_of(const TraceResult& tr, int row, int col) {
    CrossingSite site{};
    int found = 0;
    const auto& visits = tr.visits.front();
    for (int p = 0; p < static_cast<int>(visits.size()); ++p) {
        const auto& v = visits[p];
        if (v.row != row || v.col != col) continue;
        (v.over ? site.over_heading : site.under_heading) = v.heading;
        (v.over ? site.pos_over : site.pos_under) = p;
        ++found;
    }
    assert(found == 2);
    return site;
}

TraceResult traced_knot(const Mosaic& mosaic) {
    TraceResult tr = trace(mosaic);
    if (tr.components != 1)
        throw NotAKnot("diagram has " + std::to_string(tr.components) +
                       " components");
    return tr;
}

// Entry side of the arc that sits on the left when the smoothed site is
// turned so both outgoing arcs point upward. The outgoing directions are the
// two original headings; the left arc is the one leaving along the
// counterclockwise of the pair, and it enters at the other pass's entry.
Side left_arc_entry(const CrossingSite& site) {
    return cross(site.over_heading, site.under_heading) > 0
               ? opposite(site.over_heading)
               : opposite(site.under_heading);
}

// Follows the strand from (row, col, entry) to the first crossing pass it
// reaches, or nullopt when the loop closes without meeting one.
std::optional<StrandPass> first_crossing_from(const Mosaic& mo, int row,
                                              int col, Side entry) {
    int r = row, c = col;
    Side s = entry;
    do {
        Side exit = transit(mo.at(r, c), s);
        int nr = r, nc = c;
        switch (exit) {
        case Side::North: --nr; break;
        case Side::South: ++nr; break;
        case Side::East: ++nc; break;
        case Side::West: --nc; break;
        }
        if (0 <= nr && nr < mo.m && 0 <= nc && nc < mo.n) {
            r = nr;
            c = nc;
            s = opposite(exit);
        } else {
            int e = boundary_index(mo.m, mo.n, r, c, exit);
            auto ref = boundary_cell(mo, mo.mate[e]);
            r = ref.row;
            c = ref.col;
            s = ref.side;
        }
        if (is_crossing(mo.at(r, c)))
            return StrandPass{r, c, (s == Side::North || s == Side::South)
                                        ? Axis::NS
                                        : Axis::EW};
    } while (!(r == row && c == col && s == entry));
    return std::nullopt;
}

} // namespace

SmoothedDiagram smooth(const Mosaic& mosaic, int row, int col) {
    require_valid(mosaic);
    if (row < 0 || row >= mosaic.m || col < 0 || col >= mosaic.n ||
        !is_crossing(mosaic.at(row, col)))
        throw NotACrossingCell("cell (" + std::to_string(row) + "," +
                               std::to_string(col) + ") is not a crossing");
    TraceResult tr = traced_knot(mosaic);
    CrossingSite site = site_of(tr, row, col);

    // Each incoming strand reconnects to the other strand's outgoing end:
    // the pass heading h_o leaves along h_u and vice versa, which always
    // yields one of the two double-arc tiles.
    Side entry_over = opposite(site.over_heading);
    Side entry_under = opposite(site.under_heading);
    auto wants = [&](Side a, Side b) {
        return (entry_over == a && site.under_heading == b) ||
               (entry_under == a && site.over_heading == b) ||
               (entry_over == b && site.under_heading == a) ||
               (entry_under == b && site.over_heading == a);
    };
    // T7 joins {N,E} and {S,W}; T8 joins {N,W} and {S,E}.
    bool t7 = wants(Side::North, Side::East);
    Tile replacement = t7 ? Tile::T7 : Tile::T8;
    assert(wants(Side::North, t7 ? Side::East : Side::West));

    SmoothedDiagram out;
    out.mosaic = mosaic;
    out.mosaic.grid[static_cast<size_t>(row) * mosaic.n + col] = replacement;
    out.row = row;
    out.col = col;

    TraceResult smoothed = trace(out.mosaic);
    assert(smoothed.components == 2);

    auto walked = first_crossing_from(out.mosaic, row, col, left_arc_entry(site));
    int left_component = -1;
    for (int comp = 0; comp < smoothed.components; ++comp) {
        bool has_left_pass = false;
        for (const auto& v : smoothed.visits[comp])
            if (walked && StrandPass{v.row, v.col, v.axis} == *walked)
                has_left_pass = true;
        if (walked ? has_left_pass : smoothed.visits[comp].empty()) {
            left_component = comp;
            break;
        }
    }
    if (left_component < 0) left_component = 0; // both components crossing-free
    for (int comp = 0; comp < smoothed.components; ++comp)
        for (const auto& v : smoothed.visits[comp])
            out.component_of[{v.row, v.col, v.axis}] =
                comp == left_component ? 1 : 2;
    return out;
}

namespace {

int alpha(Side h1, Side h2) {
    assert(h1 != h2 && h1 != opposite(h2));
    return h1 == rot90cw(h2) ? +1 : -1;
}

} // namespace

int intersection_index(const Mosaic& mosaic, int row, int col) {
    TraceResult tr = traced_knot(mosaic);
    SmoothedDiagram sd = smooth(mosaic, row, col);

    // Original-orientation headings per pass; smoothing preserves them.
    std::map<StrandPass, Side> heading;
    for (const auto& v : tr.visits.front())
        heading[{v.row, v.col, v.axis}] = v.heading;

    int total = 0;
    for (int r = 0; r < mosaic.m; ++r) {
        for (int c = 0; c < mosaic.n; ++c) {
            if (!is_crossing(sd.mosaic.at(r, c))) continue;
            int comp_ns = sd.component_of.at({r, c, Axis::NS});
            int comp_ew = sd.component_of.at({r, c, Axis::EW});
            if (comp_ns == comp_ew) continue;
            Side h1 = heading.at({r, c, comp_ns == 1 ? Axis::NS : Axis::EW});
            Side h2 = heading.at({r, c, comp_ns == 1 ? Axis::EW : Axis::NS});
            total += alpha(h1, h2);
        }
    }
    return total;
}

int intersection_index_oracle(const Mosaic& mosaic, int row, int col) {
    require_valid(mosaic);
    if (row < 0 || row >= mosaic.m || col < 0 || col >= mosaic.n ||
        !is_crossing(mosaic.at(row, col)))
        throw NotACrossingCell("cell (" + std::to_string(row) + "," +
                               std::to_string(col) + ") is not a crossing");
    TraceResult tr = traced_knot(mosaic);
    const auto& visits = tr.visits.front();
    int L = static_cast<int>(visits.size());
    CrossingSite site = site_of(tr, row, col);

    // Splitting the cycle at the two passes of d leaves two open segments;
    // each becomes one component. The segment that starts right after the
    // pass entering at the left arc's entry side is component 1's crossing
    // list, because the smoothed strand continues along the other pass's
    // outgoing path.
    bool left_is_over_entry =
        left_arc_entry(site) == opposite(site.over_heading);
    int from = left_is_over_entry ? site.pos_under : site.pos_over;
    int to = left_is_over_entry ? site.pos_over : site.pos_under;
    auto in_component_1 = [&](int pos) {
        int steps_from = (pos - from + L) % L;
        int span = (to - from + L) % L;
        return 0 < steps_from && steps_from < span;
    };

    std::map<std::pair<int, int>, std::vector<int>> positions;
    for (int p = 0; p < L; ++p)
        positions[{visits[p].row, visits[p].col}].push_back(p);

    int total = 0;
    for (const auto& [cell, pos] : positions) {
        if (cell == std::pair{row, col}) continue;
        assert(pos.size() == 2);
        bool a = in_component_1(pos[0]);
        bool b = in_component_1(pos[1]);
        if (a == b) continue;
        int p1 = a ? pos[0] : pos[1];
        int p2 = a ? pos[1] : pos[0];
        total += alpha(visits[p1].heading, visits[p2].heading);
    }
    return total;
}

IndexPolynomial index_polynomial(const Mosaic& mosaic) {
    TraceResult tr = traced_knot(mosaic);
    IndexPolynomial poly;
    auto add = [&](int exponent, int coeff) {
        if (coeff == 0) return;
        int& slot = poly.coefficients[exponent];
        slot += coeff;
        if (slot == 0) poly.coefficients.erase(exponent);
    };
    for (int r = 0; r < mosaic.m; ++r) {
        for (int c = 0; c < mosaic.n; ++c) {
            if (!is_crossing(mosaic.at(r, c))) continue;
            int id = -1;
            for (const auto& v : tr.visits.front())
                if (v.row == r && v.col == c) id = v.crossing_id;
            assert(id > 0);
            int s = tr.signs.at(id);
            int index = intersection_index(mosaic, r, c);
            add(std::abs(index), s);
            add(0, -s);
        }
    }
    return poly;
}

std::string to_string(const IndexPolynomial& poly) {
    if (poly.coefficients.empty()) return "0";
    std::string out;
    for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend();
         ++it) {
        auto [exp, coeff] = *it;
        assert(coeff != 0);
        if (coeff > 0 && !out.empty()) out += '+';
        if (coeff < 0) out += '-';
        int mag = std::abs(coeff);
        if (mag != 1 || exp == 0) out += std::to_string(mag);
        if (exp >= 1) out += 't';
        if (exp >= 2) out += '^' + std::to_string(exp);
    }
    return out;
}

} // namespace vmosaic
