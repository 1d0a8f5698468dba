#include "vmosaic/search.hpp"

#include "vmosaic/surface.hpp"
#include "vmosaic/tiles.hpp"
#include "vmosaic/trace.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <map>
#include <thread>

namespace vmosaic {

namespace {

// Row-major tile enumeration. Cells below prefix_len are fixed; every cell,
// fixed or free, must agree with its west and north neighbors on connection
// presence, and the crossing-tile count must be reachable within [lo, hi].
void backtrack_grids(int m, int n, int lo, int hi,
                     const std::vector<Tile>& prefix, std::vector<Tile>& grid,
                     int idx, int ncross,
                     const std::function<void(const std::vector<Tile>&)>& out) {
    int cells = m * n;
    if (idx == cells) {
        if (ncross >= lo) out(grid);
        return;
    }
    int r = idx / n, c = idx % n;
    auto fits = [&](Tile t) {
        if (c > 0 && has_connection(grid[idx - 1], Side::East) !=
                         has_connection(t, Side::West))
            return false;
        if (r > 0 && has_connection(grid[idx - n], Side::South) !=
                         has_connection(t, Side::North))
            return false;
        return true;
    };
    auto place = [&](Tile t) {
        if (!fits(t)) return;
        int next = ncross + (is_crossing(t) ? 1 : 0);
        if (next > hi || next + (cells - idx - 1) < lo) return;
        grid[idx] = t;
        backtrack_grids(m, n, lo, hi, prefix, grid, idx + 1, next, out);
    };
    if (idx < static_cast<int>(prefix.size())) {
        place(prefix[idx]);
    } else {
        for (Tile t : all_tiles) place(t);
    }
}

// All perfect matchings of the listed edges: the first unused edge pairs
// with every later unused edge, ascending.
void matchings(const std::vector<int>& edges, std::vector<char>& used,
               std::vector<std::pair<int, int>>& acc,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& out) {
    size_t first = 0;
    while (first < edges.size() && used[first]) ++first;
    if (first == edges.size()) {
        out(acc);
        return;
    }
    used[first] = 1;
    for (size_t j = first + 1; j < edges.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        acc.push_back({edges[first], edges[j]});
        matchings(edges, used, acc, out);
        acc.pop_back();
        used[j] = 0;
    }
    used[first] = 0;
}

struct EdgeSplit {
    std::vector<int> arcs;
    std::vector<int> blanks;
};

EdgeSplit split_edges(const Mosaic& shell) {
    EdgeSplit split;
    for (int e = 0; e < shell.boundary_count(); ++e)
        (edge_has_arc(shell, e) ? split.arcs : split.blanks).push_back(e);
    return split;
}

void apply_pairs(Mosaic& mo, const std::vector<std::pair<int, int>>& pairs) {
    for (auto [a, b] : pairs) {
        mo.mate[a] = b;
        mo.mate[b] = a;
    }
}

// Streams filtered mosaics for every grid that backtrack_grids emits with
// the given prefix. Shared by the sequential and the per-task parallel path.
void enumerate_with_prefix(int m, int n, const SearchOptions& options,
                           const std::vector<Tile>& prefix,
                           const std::function<void(const Mosaic&)>& yield) {
    int lo = 0, hi = m * n;
    if (options.crossing_range) {
        lo = std::max(lo, options.crossing_range->first);
        hi = std::min(hi, options.crossing_range->second);
        if (lo > hi) return;
    }
    bool all_blank_pairings = options.genus_filter.has_value();

    std::vector<Tile> grid(static_cast<size_t>(m) * n, Tile::T0);
    backtrack_grids(m, n, lo, hi, prefix, grid, 0, 0, [&](const std::vector<Tile>& g) {
        Mosaic shell;
        shell.m = m;
        shell.n = n;
        shell.grid = g;
        shell.mate.assign(shell.boundary_count(), -1);
        bool blank_grid =
            std::all_of(g.begin(), g.end(), [](Tile t) { return t == Tile::T0; });
        if (blank_grid && options.require_knot) return;

        EdgeSplit split = split_edges(shell);
        auto emit_with_blanks = [&](const std::vector<std::pair<int, int>>& arc_pairs,
                                    const std::vector<std::pair<int, int>>& blank_pairs) {
            Mosaic mo = shell;
            apply_pairs(mo, arc_pairs);
            apply_pairs(mo, blank_pairs);
            assert(validate(mo).valid());
            if (options.genus_filter && genus(mo).genus != *options.genus_filter) return;
            if (options.require_knot && trace(mo).components != 1) return;
            yield(mo);
        };

        std::vector<char> arc_used(split.arcs.size(), 0);
        std::vector<std::pair<int, int>> arc_acc;
        matchings(split.arcs, arc_used, arc_acc, [&](const auto& arc_pairs) {
            if (all_blank_pairings) {
                std::vector<char> blank_used(split.blanks.size(), 0);
                std::vector<std::pair<int, int>> blank_acc;
                matchings(split.blanks, blank_used, blank_acc,
                          [&](const auto& blank_pairs) {
                              emit_with_blanks(arc_pairs, blank_pairs);
                          });
            } else {
                std::vector<std::pair<int, int>> blank_pairs;
                for (size_t i = 0; i + 1 < split.blanks.size(); i += 2)
                    blank_pairs.push_back({split.blanks[i], split.blanks[i + 1]});
                emit_with_blanks(arc_pairs, blank_pairs);
            }
        });
    });
}

void check_guard(int m, int n, const SearchOptions& options) {
    if (m * n > options.max_cells)
        throw SearchSpaceTooLarge(
            std::to_string(m) + "x" + std::to_string(n) + " exceeds the " +
            std::to_string(options.max_cells) + "-cell search guard");
}

} // namespace

void enumerate_mosaics(int m, int n, const SearchOptions& options,
                       const std::function<void(const Mosaic&)>& yield) {
    if (m < 1 || n < 1) return;
    check_guard(m, n, options);
    enumerate_with_prefix(m, n, options, {}, yield);
}

namespace {

int thread_count() {
    if (const char* env = std::getenv("VMOSAIC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(static_cast<int>(hw), 1, 8);
}

struct KeyedEntries {
    std::vector<CensusEntry> entries; // local stream order
    std::map<std::pair<std::string, int>, size_t> index;
};

void absorb(KeyedEntries& sink, const Mosaic& mo) {
    TraceResult tr = trace(mo);
    assert(tr.components == 1 && tr.gauss);
    CensusEntry entry;
    entry.code = canonicalize(*tr.gauss, true);
    entry.mosaic = mo;
    entry.genus = genus(mo).genus;
    entry.crossings = tr.crossings;
    entry.tiles = mo.m * mo.n;
    std::pair<std::string, int> key{print_code(entry.code), entry.genus};
    if (sink.index.try_emplace(key, sink.entries.size()).second)
        sink.entries.push_back(std::move(entry));
}

} // namespace

std::vector<CensusEntry> census(int m, int n, const SearchOptions& user) {
    SearchOptions options = user;
    options.require_knot = true;
    KeyedEntries merged;
    if (m >= 1 && n >= 1) {
        check_guard(m, n, options);
        int workers = std::min(thread_count(), 8);
        if (workers <= 1 || m * n < 2) {
            enumerate_with_prefix(m, n, options, {},
                                  [&](const Mosaic& mo) { absorb(merged, mo); });
        } else {
            // Partition the grid space by the first two tiles; tasks merge in
            // prefix order, so the result is identical at any worker count.
            std::vector<std::vector<Tile>> prefixes;
            for (Tile a : all_tiles)
                for (Tile b : all_tiles) prefixes.push_back({a, b});
            std::vector<KeyedEntries> results(prefixes.size());
            std::atomic<size_t> next{0};
            auto work = [&] {
                for (size_t id; (id = next.fetch_add(1)) < prefixes.size();)
                    enumerate_with_prefix(m, n, options, prefixes[id],
                                          [&](const Mosaic& mo) {
                                              absorb(results[id], mo);
                                          });
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
            for (const auto& local : results)
                for (const auto& entry : local.entries) {
                    std::pair<std::string, int> key{print_code(entry.code),
                                                    entry.genus};
                    if (merged.index.try_emplace(key, merged.entries.size()).second)
                        merged.entries.push_back(entry);
                }
        }
    }
    std::vector<CensusEntry> out = std::move(merged.entries);
    std::stable_sort(out.begin(), out.end(),
                     [](const CensusEntry& a, const CensusEntry& b) {
                         if (a.crossings != b.crossings)
                             return a.crossings < b.crossings;
                         std::string ka = print_code(a.code), kb = print_code(b.code);
                         if (ka != kb) return ka < kb;
                         return a.genus < b.genus;
                     });
    return out;
}

namespace {

// Target-driven completion: given a fixed tile grid holding exactly the
// code's crossing count, walk the strand and choose boundary mates lazily,
// keeping only pairings whose emitted visit sequence stays a prefix of some
// rotation (or reversed rotation) of the target code.
class GuidedCompletion {
public:
    GuidedCompletion(Mosaic shell, const std::vector<std::vector<GaussSymbol>>& cands)
        : mo_(std::move(shell)), candidates_(cands) {
        for (Tile t : mo_.grid) total_endpoints_ += connection_count(t);
        length_ = candidates_.empty() ? 0
                                      : static_cast<int>(candidates_.front().size());
        for (int e = 0; e < mo_.boundary_count(); ++e)
            if (edge_has_arc(mo_, e)) arc_edges_.push_back(e);
    }

    std::optional<Mosaic> run() {
        State state;
        state.mate.assign(mo_.boundary_count(), -1);
        state.alive.assign(candidates_.size(), 1);

        Step start;
        if (!arc_edges_.empty()) {
            auto ref = boundary_cell(mo_, arc_edges_.front());
            start = {ref.row, ref.col, ref.side};
            start_edge_ = arc_edges_.front();
        } else {
            start_edge_ = -1;
            bool found = false;
            for (int r = 0; r < mo_.m && !found; ++r)
                for (int c = 0; c < mo_.n && !found; ++c)
                    for (Side s : all_sides)
                        if (has_connection(mo_.at(r, c), s)) {
                            start = {r, c, s};
                            found = true;
                            break;
                        }
            if (!found) return std::nullopt;
        }
        start_ = start;
        if (!walk(std::move(state), start)) return std::nullopt;
        return result_;
    }

private:
    struct Step {
        int r = 0, c = 0;
        Side entry = Side::North;
        bool operator==(const Step&) const = default;
    };
    struct State {
        std::vector<int> mate;
        std::vector<char> alive;
        std::map<std::pair<int, int>, int> id_of;
        std::map<int, std::pair<Side, bool>> first_visit; // id -> heading, over
        int emitted = 0;
        int endpoints = 0;
    };

    bool finish(State state) {
        if (state.emitted != length_ || state.endpoints != total_endpoints_)
            return false;
        Mosaic done = mo_;
        done.mate = state.mate;
        std::vector<int> blanks;
        for (int e = 0; e < done.boundary_count(); ++e)
            if (done.mate[e] < 0) blanks.push_back(e);
        for (size_t i = 0; i + 1 < blanks.size(); i += 2) {
            done.mate[blanks[i]] = blanks[i + 1];
            done.mate[blanks[i + 1]] = blanks[i];
        }
        assert(validate(done).valid());
        result_ = std::move(done);
        return true;
    }

    // Advances through tiles until the strand either closes (accept/reject),
    // hits an unmated boundary edge (branch over mates), or contradicts
    // every candidate (reject).
    bool walk(State state, Step at) {
        while (true) {
            Tile tile = mo_.at(at.r, at.c);
            if (is_crossing(tile)) {
                if (!emit(state, at)) return false;
            }
            state.endpoints += 2;
            Side exit = transit(tile, at.entry);
            int nr = at.r, nc = at.c;
            switch (exit) {
            case Side::North: --nr; break;
            case Side::South: ++nr; break;
            case Side::East: ++nc; break;
            case Side::West: --nc; break;
            }
            if (0 <= nr && nr < mo_.m && 0 <= nc && nc < mo_.n) {
                at = {nr, nc, opposite(exit)};
                if (at == start_) return finish(std::move(state));
                continue;
            }
            int e = boundary_index(mo_.m, mo_.n, at.r, at.c, exit);
            if (state.mate[e] >= 0) {
                auto ref = boundary_cell(mo_, state.mate[e]);
                at = {ref.row, ref.col, ref.side};
                if (at == start_) return finish(std::move(state));
                continue;
            }
            // Branch: try every still-unmated arc edge, the start edge
            // included (pairing with it closes the loop).
            for (int e2 : arc_edges_) {
                if (e2 == e || state.mate[e2] >= 0) continue;
                State child = state;
                child.mate[e] = e2;
                child.mate[e2] = e;
                auto ref = boundary_cell(mo_, e2);
                Step next{ref.row, ref.col, ref.side};
                bool closed = e2 == start_edge_;
                if (closed ? finish(std::move(child)) : walk(std::move(child), next))
                    return true;
            }
            return false;
        }
    }

    bool emit(State& state, const Step& at) {
        if (state.emitted >= length_) return false;
        Axis axis = (at.entry == Side::North || at.entry == Side::South)
                        ? Axis::NS
                        : Axis::EW;
        bool over = is_over(mo_.at(at.r, at.c), axis);
        Side heading = opposite(at.entry);
        auto [it, fresh] = state.id_of.try_emplace(
            {at.r, at.c}, static_cast<int>(state.id_of.size()) + 1);
        int id = it->second;
        int sign = 0;
        if (fresh) {
            state.first_visit[id] = {heading, over};
        } else {
            auto [h1, over1] = state.first_visit.at(id);
            Side h_over = over1 ? h1 : heading;
            Side h_under = over1 ? heading : h1;
            sign = rot90ccw(h_over) == h_under ? +1 : -1;
        }
        bool any = false;
        int pos = state.emitted;
        for (size_t k = 0; k < candidates_.size(); ++k) {
            if (!state.alive[k]) continue;
            const GaussSymbol& want = candidates_[k][pos];
            bool ok = want.over == over && want.id == id &&
                      (sign == 0 || want.sign == sign);
            state.alive[k] = ok;
            any = any || ok;
        }
        ++state.emitted;
        return any;
    }

    Mosaic mo_;
    const std::vector<std::vector<GaussSymbol>>& candidates_;
    std::vector<int> arc_edges_;
    int total_endpoints_ = 0;
    int length_ = 0;
    int start_edge_ = -1;
    Step start_;
    std::optional<Mosaic> result_;
};

std::vector<std::vector<GaussSymbol>> candidate_rotations(const GaussCode& code) {
    std::vector<std::vector<GaussSymbol>> out;
    int L = static_cast<int>(code.symbols.size());
    auto add_all = [&](const std::vector<GaussSymbol>& seq) {
        for (int r = 0; r < L; ++r) {
            GaussCode rotated;
            for (int k = 0; k < L; ++k)
                rotated.symbols.push_back(seq[(r + k) % L]);
            rotated = renumber_by_first_appearance(std::move(rotated));
            out.push_back(std::move(rotated.symbols));
        }
    };
    add_all(code.symbols);
    auto rev = code.symbols;
    std::reverse(rev.begin(), rev.end());
    add_all(rev);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::lexicographical_compare(
                      a.begin(), a.end(), b.begin(), b.end(),
                      [](const GaussSymbol& x, const GaussSymbol& y) {
                          return std::tuple(x.over, x.id, x.sign) <
                                 std::tuple(y.over, y.id, y.sign);
                      });
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Searches one dimension pair for a guided completion; grids stream in
// row-major tile order, so the first hit is deterministic.
std::optional<Mosaic> search_dimensions(int m, int n, int crossings,
                                        const std::vector<std::vector<GaussSymbol>>& cands) {
    std::optional<Mosaic> found;
    std::vector<Tile> grid(static_cast<size_t>(m) * n, Tile::T0);
    backtrack_grids(m, n, crossings, crossings, {}, grid, 0, 0,
                    [&](const std::vector<Tile>& g) {
                        if (found) return;
                        Mosaic shell;
                        shell.m = m;
                        shell.n = n;
                        shell.grid = g;
                        shell.mate.assign(shell.boundary_count(), -1);
                        GuidedCompletion completion(std::move(shell), cands);
                        found = completion.run();
                    });
    return found;
}

constexpr int kGuidedGuard = 12;

} // namespace

std::pair<int, Mosaic> tile_number_bound(const GaussCode& code, int max_area) {
    require_wellformed(code);
    if (code.symbols.empty())
        throw NotFoundWithinBound("no mosaic is sought for an empty code");
    if (max_area > kGuidedGuard)
        throw SearchSpaceTooLarge("max_area " + std::to_string(max_area) +
                                  " exceeds the " + std::to_string(kGuidedGuard) +
                                  "-cell search guard");
    auto cands = candidate_rotations(code);
    int k = code.crossings();
    for (int area = std::max(1, k); area <= max_area; ++area)
        for (int m = 1; m <= area; ++m) {
            if (area % m) continue;
            if (auto hit = search_dimensions(m, area / m, k, cands))
                return {area, *hit};
        }
    throw NotFoundWithinBound("no mosaic with at most " +
                              std::to_string(max_area) + " tiles traces to " +
                              print_code(code));
}

std::pair<int, Mosaic> row_number_bound(const GaussCode& code, int max_width) {
    require_wellformed(code);
    if (code.symbols.empty())
        throw NotFoundWithinBound("no mosaic is sought for an empty code");
    if (max_width > kGuidedGuard)
        throw SearchSpaceTooLarge("max_width " + std::to_string(max_width) +
                                  " exceeds the " + std::to_string(kGuidedGuard) +
                                  "-cell search guard");
    auto cands = candidate_rotations(code);
    int k = code.crossings();
    for (int w = std::max(1, k); w <= max_width; ++w)
        if (auto hit = search_dimensions(1, w, k, cands)) return {w, *hit};
    throw NotFoundWithinBound("no row mosaic of width at most " +
                              std::to_string(max_width) + " traces to " +
                              print_code(code));
}

} // namespace vmosaic
