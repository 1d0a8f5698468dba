#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vmosaic/errors.hpp"

namespace vmosaic {

// Compass sides of a cell, in clockwise order. The numeric values matter:
// opposite(s) = s+2 mod 4, and the same values double as travel headings
// (heading North means moving toward decreasing row).
enum class Side : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Side, 4> all_sides{Side::North, Side::East,
                                               Side::South, Side::West};

constexpr Side opposite(Side s) {
    return static_cast<Side>((static_cast<int>(s) + 2) % 4);
}
constexpr Side rot90cw(Side s) {
    return static_cast<Side>((static_cast<int>(s) + 1) % 4);
}
constexpr Side rot90ccw(Side s) {
    return static_cast<Side>((static_cast<int>(s) + 3) % 4);
}
char side_char(Side s);

// The eleven tiles. T0 is blank; T1..T4 are quarter arcs (T1=SW, T2=SE,
// T3=NE, T4=NW); T5/T6 are straight strands (EW/NS); T7/T8 are double arcs
// (T7=NE+SW, T8=NW+SE); T9/T10 are crossings. At a crossing the two strands
// run straight through; T9 carries its East-West strand over, T10 its
// North-South strand over (the choice that reproduces the worked sign
// examples; see trace for the sign convention it feeds).
enum class Tile : std::uint8_t { T0, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline constexpr std::array<Tile, 11> all_tiles{
    Tile::T0, Tile::T1, Tile::T2, Tile::T3, Tile::T4, Tile::T5,
    Tile::T6, Tile::T7, Tile::T8, Tile::T9, Tile::T10};

enum class Axis : std::uint8_t { NS, EW };

// True iff the tile has a strand end on the given side.
bool has_connection(Tile t, Side s);

int connection_count(Tile t);

constexpr bool is_crossing(Tile t) { return t == Tile::T9 || t == Tile::T10; }

// The tile's arcs as unordered side pairs; crossings report their two
// transversal strands {N,S} and {E,W}.
std::vector<std::pair<Side, Side>> connections(Tile t);

// Follow the strand entering at `entry` to its other end. Crossing strands
// are straight, so transit never mixes the NS and EW passes.
Side transit(Tile t, Side entry); // throws NotAConnectionPoint

// Which strand of a crossing tile lies on top.
bool is_over(Tile t, Axis axis); // throws NotACrossingTile on T0..T8

std::string_view tile_token(Tile t); // "T0".."T10"
std::optional<Tile> tile_from_token(std::string_view token);

} // namespace vmosaic
