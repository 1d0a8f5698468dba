#pragma once

#include "vmosaic/fixtures.hpp"
#include "vmosaic/gauss.hpp"
#include "vmosaic/mosaic.hpp"
#include "vmosaic/tiles.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmtest {

inline std::string fixtures_dir() { return VMOSAIC_FIXTURES_DIR; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline vmosaic::Mosaic load_fixture(const std::string& rel) {
    return vmosaic::parse_mosaic(read_file(fixtures_dir() + "/" + rel));
}

inline std::vector<vmosaic::FixtureRecord> manifest() {
    return vmosaic::load_manifest(fixtures_dir());
}

// Uniformly random valid mosaic: tiles are chosen cell by cell among those
// compatible with the already-placed west and north neighbors, then the arc
// and blank boundary edges each get a random perfect matching. Every output
// passes validate by construction.
inline vmosaic::Mosaic random_mosaic(std::mt19937& rng, int max_m = 3, int max_n = 4) {
    using vmosaic::Side;
    using vmosaic::Tile;
    vmosaic::Mosaic mo;
    mo.m = std::uniform_int_distribution<int>(1, max_m)(rng);
    mo.n = std::uniform_int_distribution<int>(1, max_n)(rng);
    mo.grid.assign(static_cast<size_t>(mo.m) * mo.n, Tile::T0);
    for (int r = 0; r < mo.m; ++r) {
        for (int c = 0; c < mo.n; ++c) {
            std::vector<Tile> options;
            for (Tile t : vmosaic::all_tiles) {
                if (c > 0 && vmosaic::has_connection(mo.at(r, c - 1), Side::East) !=
                                 vmosaic::has_connection(t, Side::West))
                    continue;
                if (r > 0 && vmosaic::has_connection(mo.at(r - 1, c), Side::South) !=
                                 vmosaic::has_connection(t, Side::North))
                    continue;
                options.push_back(t);
            }
            mo.at(r, c) = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
        }
    }
    mo.mate.assign(mo.boundary_count(), -1);
    std::vector<int> arcs, blanks;
    for (int e = 0; e < mo.boundary_count(); ++e)
        (vmosaic::edge_has_arc(mo, e) ? arcs : blanks).push_back(e);
    const auto pair_up = [&](std::vector<int>& edges) {
        std::shuffle(edges.begin(), edges.end(), rng);
        for (size_t i = 0; i + 1 < edges.size(); i += 2) {
            mo.mate[edges[i]] = edges[i + 1];
            mo.mate[edges[i + 1]] = edges[i];
        }
    };
    pair_up(arcs);
    pair_up(blanks);
    return mo;
}

// Random well-formed Gauss code with 1..max_crossings crossings: each id's O
// and U symbols land at random positions and both carry the same random
// sign. Any such arrangement is a legal virtual knot code.
inline vmosaic::GaussCode random_code(std::mt19937& rng, int max_crossings = 8) {
    const int k = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    std::vector<int> slots(static_cast<size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        slots[2 * i] = i + 1;
        slots[2 * i + 1] = i + 1;
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> signs(static_cast<size_t>(k) + 1);
    for (int i = 1; i <= k; ++i)
        signs[i] = std::uniform_int_distribution<int>(0, 1)(rng) ? +1 : -1;
    vmosaic::GaussCode code;
    std::vector<bool> seen(static_cast<size_t>(k) + 1, false);
    std::vector<bool> first_is_over(static_cast<size_t>(k) + 1, false);
    for (int id : slots) {
        vmosaic::GaussSymbol sym;
        sym.id = id;
        sym.sign = signs[id];
        if (!seen[id]) {
            seen[id] = true;
            first_is_over[id] = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
            sym.over = first_is_over[id];
        } else {
            sym.over = !first_is_over[id];
        }
        code.symbols.push_back(sym);
    }
    return vmosaic::renumber_by_first_appearance(std::move(code));
}

} // namespace vmtest
