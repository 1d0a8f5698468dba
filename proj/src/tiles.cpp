#include "vmosaic/tiles.hpp"

#include <cassert>

namespace vmosaic {

namespace {

// Connection points per tile as a 4-bit mask indexed by Side value.
constexpr int bit(Side s) { return 1 << static_cast<int>(s); }
constexpr int N = bit(Side::North), E = bit(Side::East), S = bit(Side::South),
              W = bit(Side::West);

constexpr std::array<int, 11> kMask{
    0,             // T0
    S | W,         // T1
    S | E,         // T2
    N | E,         // T3
    N | W,         // T4
    E | W,         // T5
    N | S,         // T6
    N | E | S | W, // T7: arcs NE + SW
    N | E | S | W, // T8: arcs NW + SE
    N | E | S | W, // T9
    N | E | S | W, // T10
};

} // namespace

char side_char(Side s) {
    switch (s) {
    case Side::North: return 'N';
    case Side::East: return 'E';
    case Side::South: return 'S';
    case Side::West: return 'W';
    }
    assert(false);
    return '?';
}

bool has_connection(Tile t, Side s) {
    return (kMask[static_cast<int>(t)] & bit(s)) != 0;
}

int connection_count(Tile t) {
    int m = kMask[static_cast<int>(t)];
    int c = 0;
    for (; m; m >>= 1) c += m & 1;
    return c;
}

std::vector<std::pair<Side, Side>> connections(Tile t) {
    using enum Side;
    switch (t) {
    case Tile::T0: return {};
    case Tile::T1: return {{South, West}};
    case Tile::T2: return {{South, East}};
    case Tile::T3: return {{North, East}};
    case Tile::T4: return {{North, West}};
    case Tile::T5: return {{East, West}};
    case Tile::T6: return {{North, South}};
    case Tile::T7: return {{North, East}, {South, West}};
    case Tile::T8: return {{North, West}, {South, East}};
    case Tile::T9:
    case Tile::T10: return {{North, South}, {East, West}};
    }
    assert(false);
    return {};
}

Side transit(Tile t, Side entry) {
    if (!has_connection(t, entry))
        throw NotAConnectionPoint(std::string(tile_token(t)) +
                                  " has no connection point on side " +
                                  side_char(entry));
    for (auto [a, b] : connections(t)) {
        if (a == entry) return b;
        if (b == entry) return a;
    }
    assert(false);
    return entry;
}

bool is_over(Tile t, Axis axis) {
    if (!is_crossing(t))
        throw NotACrossingTile(std::string(tile_token(t)) +
                               " is not a crossing tile");
    bool ns = axis == Axis::NS;
    return t == Tile::T9 ? !ns : ns;
}

std::string_view tile_token(Tile t) {
    static constexpr std::array<std::string_view, 11> kTokens{
        "T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10"};
    return kTokens[static_cast<int>(t)];
}

std::optional<Tile> tile_from_token(std::string_view token) {
    for (Tile t : all_tiles)
        if (tile_token(t) == token) return t;
    return std::nullopt;
}

} // namespace vmosaic
