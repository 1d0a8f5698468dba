#include "vmosaic/render.hpp"

#include "vmosaic/errors.hpp"
#include "vmosaic/surface.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace vmosaic {

namespace {

// 3x3 block per tile. Crossings show the over strand unbroken: T9 draws the
// horizontal run solid, T10 interrupts it with the vertical bar.
constexpr std::array<std::array<const char*, 3>, 11> kBlocks = {{
    {"   ", "   ", "   "}, // T0
    {"   ", "-. ", " | "}, // T1  S-W
    {"   ", " .-", " | "}, // T2  S-E
    {" | ", " '-", "   "}, // T3  N-E
    {" | ", "-' ", "   "}, // T4  N-W
    {"   ", "---", "   "}, // T5  E-W
    {" | ", " | ", " | "}, // T6  N-S
    {" | ", ".'-", "'. "}, // T7  N-E over S-W
    {" | ", "-'.", " .'"}, // T8  N-W over S-E
    {" | ", "---", " | "}, // T9  crossing, E-W on top
    {" | ", "-|-", " | "}, // T10 crossing, N-S on top
}};

constexpr int kMargin = 4; // character columns reserved for left-side labels

std::vector<std::string> display_labels(const Mosaic& mo) {
    const size_t nb = static_cast<size_t>(mo.boundary_count());
    if (mo.edge_labels.size() == nb) {
        bool fits = true;
        for (const auto& s : mo.edge_labels)
            if (s.empty() || s.size() > 3) fits = false;
        if (fits) return mo.edge_labels;
    }
    return canonical_labels(mo);
}

std::string centered3(const std::string& s) {
    if (s.size() >= 3) return s;
    if (s.size() == 2) return s + " ";
    return " " + s + " ";
}

std::string padded(const std::string& s, size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
}

} // namespace

std::string render_ascii(const Mosaic& mo) {
    const auto labels = display_labels(mo);
    std::ostringstream out;

    std::string top(kMargin, ' ');
    for (int c = 0; c < mo.n; ++c)
        top += centered3(labels[boundary_index(mo.m, mo.n, 0, c, Side::North)]);
    out << top << "\n";

    for (int r = 0; r < mo.m; ++r) {
        for (int i = 0; i < 3; ++i) {
            std::string line = i == 1 ? padded(labels[boundary_index(mo.m, mo.n, r, 0, Side::West)], kMargin)
                                      : std::string(kMargin, ' ');
            for (int c = 0; c < mo.n; ++c)
                line += kBlocks[static_cast<int>(mo.at(r, c))][i];
            if (i == 1) {
                line += " ";
                line += labels[boundary_index(mo.m, mo.n, r, mo.n - 1, Side::East)];
            }
            out << line << "\n";
        }
    }

    std::string bottom(kMargin, ' ');
    for (int c = 0; c < mo.n; ++c)
        bottom += centered3(labels[boundary_index(mo.m, mo.n, mo.m - 1, c, Side::South)]);
    out << bottom << "\n";

    const auto report = validate(mo);
    for (const auto& violation : report.violations)
        out << "! " << violation.message << "\n";

    return out.str();
}

std::vector<std::vector<Tile>> read_ascii_tiles(const std::string& art) {
    std::vector<std::string> lines;
    std::istringstream in(art);
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    // Layout: top label line, 3m grid lines, bottom label line, then any
    // number of annotation lines starting with '!'.
    size_t end = lines.size();
    while (end > 0 && !lines[end - 1].empty() && lines[end - 1][0] == '!') --end;
    if (end < 3) throw SyntaxError("not an ASCII mosaic rendering");
    const size_t grid_lines = end - 2;
    if (grid_lines % 3 != 0) throw SyntaxError("grid line count is not a multiple of 3");
    const int m = static_cast<int>(grid_lines / 3);

    if (lines[1].size() < kMargin || (lines[1].size() - kMargin) % 3 != 0)
        throw SyntaxError("first grid line has unexpected width");
    const int n = static_cast<int>((lines[1].size() - kMargin) / 3);

    std::vector<std::vector<Tile>> grid(m, std::vector<Tile>(n, Tile::T0));
    for (int r = 0; r < m; ++r) {
        std::array<std::string, 3> rows;
        for (int i = 0; i < 3; ++i) {
            std::string line = lines[1 + 3 * r + i];
            if (line.size() < kMargin) line = std::string(kMargin, ' ');
            line = line.substr(kMargin);
            rows[i] = padded(line, static_cast<size_t>(3 * n));
        }
        for (int c = 0; c < n; ++c) {
            const std::string key = rows[0].substr(3 * c, 3) + rows[1].substr(3 * c, 3) +
                                    rows[2].substr(3 * c, 3);
            bool found = false;
            for (size_t t = 0; t < kBlocks.size(); ++t) {
                const std::string candidate = std::string(kBlocks[t][0]) + kBlocks[t][1] + kBlocks[t][2];
                if (key == candidate) {
                    grid[r][c] = static_cast<Tile>(t);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw SyntaxError("unrecognized tile block at row " + std::to_string(r) +
                                  " column " + std::to_string(c));
        }
    }
    return grid;
}

namespace {

// Fixed-precision float text keeps the SVG byte-deterministic.
std::string fmt(double x) {
    char buf[32];
    if (x == 0.0) x = 0.0; // avoid "-0.00"
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

struct Point {
    double x = 0;
    double y = 0;
};

constexpr double kCell = 40.0;
constexpr double kPad = 60.0;

Point side_mid(double x0, double y0, Side s) {
    switch (s) {
        case Side::North: return {x0 + kCell / 2, y0};
        case Side::East: return {x0 + kCell, y0 + kCell / 2};
        case Side::South: return {x0 + kCell / 2, y0 + kCell};
        case Side::West: return {x0, y0 + kCell / 2};
    }
    return {};
}

void emit_line(std::ostringstream& out, Point a, Point b) {
    out << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\"/>\n";
}

// Quarter turn through the tile center.
void emit_arc(std::ostringstream& out, Point a, Point center, Point b) {
    out << "  <path d=\"M " << fmt(a.x) << " " << fmt(a.y) << " Q " << fmt(center.x) << " "
        << fmt(center.y) << " " << fmt(b.x) << " " << fmt(b.y) << "\"/>\n";
}

Point toward(Point from, Point to, double dist) {
    const double len = std::hypot(to.x - from.x, to.y - from.y);
    assert(len > 0);
    return {from.x + (to.x - from.x) * dist / len, from.y + (to.y - from.y) * dist / len};
}

void emit_tile(std::ostringstream& out, Tile t, double x0, double y0) {
    const Point center{x0 + kCell / 2, y0 + kCell / 2};
    const auto mid = [&](Side s) { return side_mid(x0, y0, s); };
    const double gap = 7.0;
    switch (t) {
        case Tile::T0: break;
        case Tile::T1: emit_arc(out, mid(Side::South), center, mid(Side::West)); break;
        case Tile::T2: emit_arc(out, mid(Side::South), center, mid(Side::East)); break;
        case Tile::T3: emit_arc(out, mid(Side::North), center, mid(Side::East)); break;
        case Tile::T4: emit_arc(out, mid(Side::North), center, mid(Side::West)); break;
        case Tile::T5: emit_line(out, mid(Side::West), mid(Side::East)); break;
        case Tile::T6: emit_line(out, mid(Side::North), mid(Side::South)); break;
        case Tile::T7:
            emit_arc(out, mid(Side::North), center, mid(Side::East));
            emit_arc(out, mid(Side::South), center, mid(Side::West));
            break;
        case Tile::T8:
            emit_arc(out, mid(Side::North), center, mid(Side::West));
            emit_arc(out, mid(Side::South), center, mid(Side::East));
            break;
        case Tile::T9:
            emit_line(out, mid(Side::West), mid(Side::East));
            emit_line(out, mid(Side::North), toward(center, mid(Side::North), gap));
            emit_line(out, mid(Side::South), toward(center, mid(Side::South), gap));
            break;
        case Tile::T10:
            emit_line(out, mid(Side::North), mid(Side::South));
            emit_line(out, mid(Side::West), toward(center, mid(Side::West), gap));
            emit_line(out, mid(Side::East), toward(center, mid(Side::East), gap));
            break;
    }
}

bool in_open_cyclic(int lo, int hi, int x) {
    return lo < hi ? (lo < x && x < hi) : (x > lo || x < hi);
}

bool interleaved(std::pair<int, int> p, std::pair<int, int> q) {
    return in_open_cyclic(p.first, p.second, q.first) !=
           in_open_cyclic(p.first, p.second, q.second);
}

} // namespace

std::string render_svg(const Mosaic& mo, bool show_closure) {
    if (show_closure) require_valid(mo);
    const auto labels = display_labels(mo);
    const int nb = mo.boundary_count();
    const double grid_w = mo.n * kCell;
    const double grid_h = mo.m * kCell;

    const double chord_spacing = 30.0;
    const double chord_y = kPad + grid_h + 80.0;
    const double chord_w = chord_spacing * (nb - 1);

    double width = kPad * 2 + grid_w;
    double height = kPad * 2 + grid_h;
    if (show_closure) {
        width = std::max(width, kPad * 2 + chord_w);
        // Deepest possible chord reaches half the unrolled boundary length.
        height = chord_y + chord_w / 2 + 40.0;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    out << "  <rect width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" fill=\"white\"/>\n";

    // Cell frame.
    out << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int r = 0; r <= mo.m; ++r)
        emit_line(out, {kPad, kPad + r * kCell}, {kPad + grid_w, kPad + r * kCell});
    for (int c = 0; c <= mo.n; ++c)
        emit_line(out, {kPad + c * kCell, kPad}, {kPad + c * kCell, kPad + grid_h});
    out << "  </g>\n";

    // Strands.
    out << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\" stroke-linecap=\"round\">\n";
    for (int r = 0; r < mo.m; ++r)
        for (int c = 0; c < mo.n; ++c)
            emit_tile(out, mo.at(r, c), kPad + c * kCell, kPad + r * kCell);
    out << "  </g>\n";

    // Boundary labels around the rectangle.
    out << "  <g font-family=\"monospace\" font-size=\"13\">\n";
    for (int e = 0; e < nb; ++e) {
        const auto ref = boundary_cell(mo, e);
        const Point mid = side_mid(kPad + ref.col * kCell, kPad + ref.row * kCell, ref.side);
        Point at = mid;
        const char* anchor = "middle";
        switch (ref.side) {
            case Side::North: at.y -= 8; break;
            case Side::South: at.y += 17; break;
            case Side::West: at.x -= 8; at.y += 4; anchor = "end"; break;
            case Side::East: at.x += 8; at.y += 4; anchor = "start"; break;
        }
        out << "    <text x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y) << "\" text-anchor=\""
            << anchor << "\">" << labels[e] << "</text>\n";
    }
    out << "  </g>\n";

    if (show_closure) {
        // The boundary walk unrolled onto a line; pairs joined by semicircles
        // below it. Two arc chords cross (exactly once) iff the pairs
        // interlock, and each such crossing gets the virtual-crossing glyph.
        const auto px = [&](int e) { return kPad + chord_spacing * e; };
        out << "  <g stroke=\"black\" stroke-width=\"1\">\n";
        emit_line(out, {px(0), chord_y}, {px(nb - 1), chord_y});
        for (int e = 0; e < nb; ++e)
            emit_line(out, {px(e), chord_y - 4}, {px(e), chord_y + 4});
        out << "  </g>\n";
        out << "  <g font-family=\"monospace\" font-size=\"13\">\n";
        for (int e = 0; e < nb; ++e)
            out << "    <text x=\"" << fmt(px(e)) << "\" y=\"" << fmt(chord_y - 10)
                << "\" text-anchor=\"middle\">" << labels[e] << "</text>\n";
        out << "  </g>\n";

        std::vector<std::pair<int, int>> arc_pairs;
        std::vector<std::pair<int, int>> blank_pairs;
        for (int e = 0; e < nb; ++e) {
            if (mo.mate[e] <= e) continue;
            (edge_has_arc(mo, e) ? arc_pairs : blank_pairs).push_back({e, mo.mate[e]});
        }

        out << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
        for (const auto& [a, b] : arc_pairs) {
            const double r = (px(b) - px(a)) / 2;
            out << "    <path d=\"M " << fmt(px(a)) << " " << fmt(chord_y) << " A " << fmt(r)
                << " " << fmt(r) << " 0 0 0 " << fmt(px(b)) << " " << fmt(chord_y) << "\"/>\n";
        }
        out << "  </g>\n";
        out << "  <g stroke=\"#888888\" stroke-width=\"1.5\" fill=\"none\" stroke-dasharray=\"6 4\">\n";
        for (const auto& [a, b] : blank_pairs) {
            const double r = (px(b) - px(a)) / 2;
            out << "    <path d=\"M " << fmt(px(a)) << " " << fmt(chord_y) << " A " << fmt(r)
                << " " << fmt(r) << " 0 0 0 " << fmt(px(b)) << " " << fmt(chord_y) << "\"/>\n";
        }
        out << "  </g>\n";

        int glyphs = 0;
        out << "  <g class=\"virtual-marks\">\n";
        for (size_t i = 0; i < arc_pairs.size(); ++i) {
            for (size_t j = i + 1; j < arc_pairs.size(); ++j) {
                if (!interleaved(arc_pairs[i], arc_pairs[j])) continue;
                const double c1 = (px(arc_pairs[i].first) + px(arc_pairs[i].second)) / 2;
                const double r1 = (px(arc_pairs[i].second) - px(arc_pairs[i].first)) / 2;
                const double c2 = (px(arc_pairs[j].first) + px(arc_pairs[j].second)) / 2;
                const double r2 = (px(arc_pairs[j].second) - px(arc_pairs[j].first)) / 2;
                assert(c1 != c2); // distinct endpoints on a line
                const double x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
                const double under = r1 * r1 - (x - c1) * (x - c1);
                assert(under > 0); // interlocking chords genuinely cross
                const double y = chord_y + std::sqrt(under);
                out << "    <circle class=\"virtual\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                    << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
                ++glyphs;
            }
        }
        out << "  </g>\n";
        assert(glyphs == count_interlocking(mo));
        (void)glyphs;
    }

    const auto report = validate(mo);
    if (!report.valid()) {
        out << "  <g font-family=\"monospace\" font-size=\"12\" fill=\"#cc0000\">\n";
        double y = height - 8.0 - 14.0 * (report.violations.size() - 1);
        for (const auto& violation : report.violations) {
            out << "    <text x=\"8\" y=\"" << fmt(y) << "\">" << violation.message
                << "</text>\n";
            y += 14.0;
        }
        out << "  </g>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace vmosaic
