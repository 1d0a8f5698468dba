#include "vmosaic/mosaic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

#include "vmosaic/errors.hpp"

namespace vmosaic {

bool operator==(const Mosaic& a, const Mosaic& b) {
    return a.m == b.m && a.n == b.n && a.grid == b.grid && a.mate == b.mate;
}

BoundaryEdgeRef boundary_cell(const Mosaic& mo, int edge) {
    int m = mo.m, n = mo.n;
    assert(edge >= 0 && edge < 2 * (m + n));
    if (edge < m) return {edge, 0, Side::West};
    if (edge < m + n) return {m - 1, edge - m, Side::South};
    if (edge < 2 * m + n) return {m - 1 - (edge - m - n), n - 1, Side::East};
    return {0, n - 1 - (edge - 2 * m - n), Side::North};
}

int boundary_index(int m, int n, int row, int col, Side side) {
    switch (side) {
    case Side::West:
        assert(col == 0);
        return row;
    case Side::South:
        assert(row == m - 1);
        return m + col;
    case Side::East:
        assert(col == n - 1);
        return m + n + (m - 1 - row);
    case Side::North:
        assert(row == 0);
        return 2 * m + n + (n - 1 - col);
    }
    assert(false);
    return -1;
}

bool edge_has_arc(const Mosaic& mo, int edge) {
    auto ref = boundary_cell(mo, edge);
    return has_connection(mo.at(ref.row, ref.col), ref.side);
}

namespace {

// Strips comments and splits into nonempty whitespace-separated tokens.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int side_line_index(const std::string& head) {
    if (head == "top:") return 0;
    if (head == "right:") return 1;
    if (head == "bottom:") return 2;
    if (head == "left:") return 3;
    return -1;
}

} // namespace

Mosaic parse_mosaic(const std::string& text) {
    auto lines = token_lines(text);
    if (lines.empty()) throw SyntaxError("empty input");
    if (lines[0].size() != 2)
        throw SyntaxError("first line must be \"m n\"");
    Mosaic mo;
    try {
        mo.m = std::stoi(lines[0][0]);
        mo.n = std::stoi(lines[0][1]);
    } catch (const std::exception&) {
        throw SyntaxError("first line must be \"m n\"");
    }
    if (mo.m < 1 || mo.n < 1) throw BadDimensions("dimensions must be positive");
    if (static_cast<int>(lines.size()) != 1 + mo.m + 4)
        throw SyntaxError("expected " + std::to_string(mo.m) +
                          " tile lines plus 4 label lines");

    for (int r = 0; r < mo.m; ++r) {
        const auto& toks = lines[1 + r];
        if (static_cast<int>(toks.size()) != mo.n)
            throw BadDimensions("tile row " + std::to_string(r) + " has " +
                                std::to_string(toks.size()) + " entries, want " +
                                std::to_string(mo.n));
        for (const auto& tok : toks) {
            auto t = tile_from_token(tok);
            if (!t) throw SyntaxError("unknown tile token \"" + tok + "\"");
            mo.grid.push_back(*t);
        }
    }

    // The four label lines may come in any order but each exactly once.
    std::array<const std::vector<std::string>*, 4> side_lines{};
    for (int k = 0; k < 4; ++k) {
        const auto& toks = lines[1 + mo.m + k];
        int which = side_line_index(toks[0]);
        if (which < 0)
            throw SyntaxError("expected a top:/right:/bottom:/left: line, got \"" +
                              toks[0] + "\"");
        if (side_lines[which])
            throw SyntaxError("duplicate " + toks[0] + " line");
        side_lines[which] = &toks;
    }

    int nb = mo.boundary_count();
    std::vector<std::string> labels(nb);
    auto take = [&](int which, int count, auto edge_of) {
        const auto& toks = *side_lines[which];
        if (static_cast<int>(toks.size()) != 1 + count)
            throw BadDimensions(toks[0] + " line has " +
                                std::to_string(toks.size() - 1) +
                                " labels, want " + std::to_string(count));
        for (int k = 0; k < count; ++k) {
            const std::string& lab = toks[1 + k];
            if (!std::all_of(lab.begin(), lab.end(), [](unsigned char c) {
                    return std::isalnum(c);
                }))
                throw SyntaxError("label \"" + lab + "\" is not alphanumeric");
            labels[edge_of(k)] = lab;
        }
    };
    int m = mo.m, n = mo.n;
    take(0, n, [&](int k) { return boundary_index(m, n, 0, k, Side::North); });
    take(1, m, [&](int k) { return boundary_index(m, n, k, n - 1, Side::East); });
    take(2, n, [&](int k) { return boundary_index(m, n, m - 1, k, Side::South); });
    take(3, m, [&](int k) { return boundary_index(m, n, k, 0, Side::West); });

    std::map<std::string, std::vector<int>> where;
    for (int e = 0; e < nb; ++e) where[labels[e]].push_back(e);
    mo.mate.assign(nb, -1);
    for (const auto& [lab, edges] : where) {
        if (edges.size() != 2)
            throw BadPairing("label \"" + lab + "\" appears " +
                             std::to_string(edges.size()) + " times, want 2");
        mo.mate[edges[0]] = edges[1];
        mo.mate[edges[1]] = edges[0];
    }
    mo.edge_labels = std::move(labels);
    return mo;
}

std::vector<std::string> canonical_labels(const Mosaic& mo) {
    int nb = mo.boundary_count();
    std::vector<std::string> labels(nb);
    int next = 0;
    auto name = [](int k) {
        std::string s;
        do {
            s.insert(s.begin(), static_cast<char>('a' + k % 26));
            k = k / 26 - 1;
        } while (k >= 0);
        return s;
    };
    for (int e = 0; e < nb; ++e) {
        if (!labels[e].empty()) continue;
        labels[e] = labels[mo.mate[e]] = name(next++);
    }
    return labels;
}

std::string serialize(const Mosaic& mo) {
    auto labels = canonical_labels(mo);
    std::ostringstream out;
    out << mo.m << ' ' << mo.n << '\n';
    for (int r = 0; r < mo.m; ++r) {
        for (int c = 0; c < mo.n; ++c)
            out << (c ? " " : "") << tile_token(mo.at(r, c));
        out << '\n';
    }
    auto emit = [&](const char* head, int count, auto edge_of) {
        out << head;
        for (int k = 0; k < count; ++k) out << ' ' << labels[edge_of(k)];
        out << '\n';
    };
    int m = mo.m, n = mo.n;
    emit("top:", n, [&](int k) { return boundary_index(m, n, 0, k, Side::North); });
    emit("right:", m,
         [&](int k) { return boundary_index(m, n, k, n - 1, Side::East); });
    emit("bottom:", n,
         [&](int k) { return boundary_index(m, n, m - 1, k, Side::South); });
    emit("left:", m, [&](int k) { return boundary_index(m, n, k, 0, Side::West); });
    return out.str();
}

ValidationReport validate(const Mosaic& mo) {
    ValidationReport report;
    auto cellname = [](int r, int c) {
        return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    };
    // Interior edges: both neighbors connect there, or neither does.
    for (int r = 0; r < mo.m; ++r)
        for (int c = 0; c < mo.n; ++c) {
            if (c + 1 < mo.n) {
                bool a = has_connection(mo.at(r, c), Side::East);
                bool b = has_connection(mo.at(r, c + 1), Side::West);
                if (a != b)
                    report.violations.push_back(
                        {"interior edge between " + cellname(r, c) + " and " +
                         cellname(r, c + 1) + ": " +
                         (a ? "east strand meets a blank side"
                            : "west strand meets a blank side")});
            }
            if (r + 1 < mo.m) {
                bool a = has_connection(mo.at(r, c), Side::South);
                bool b = has_connection(mo.at(r + 1, c), Side::North);
                if (a != b)
                    report.violations.push_back(
                        {"interior edge between " + cellname(r, c) + " and " +
                         cellname(r + 1, c) + ": " +
                         (a ? "south strand meets a blank side"
                            : "north strand meets a blank side")});
            }
        }
    // Boundary pairs: arc with arc, blank with blank.
    for (int e = 0; e < mo.boundary_count(); ++e) {
        int f = mo.mate[e];
        if (e < f && edge_has_arc(mo, e) != edge_has_arc(mo, f))
            report.violations.push_back(
                {"boundary pair (" + std::to_string(e) + "," + std::to_string(f) +
                 ") joins an arc edge with a blank edge"});
    }
    return report;
}

void require_valid(const Mosaic& mo) {
    auto report = validate(mo);
    if (report.valid()) return;
    std::string what = "invalid mosaic:";
    for (const auto& v : report.violations) what += "\n  " + v.message;
    throw InvalidMosaic(what);
}

} // namespace vmosaic
