#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "cvt/pattern.hpp"

namespace cvt {

/// A tile paints black or white and substitutes into a 2x2 block of tiles,
/// ordered [nw, ne, sw, se] with nw = (low row, low column).
struct Tile {
  bool black = false;
  std::array<std::string, 4> children;
};

struct TileSet {
  std::map<std::string, Tile> tiles;
  std::string start;
};

/// Checks that the start tile exists and every substitution child names a
/// tile in the set.
void validate(const TileSet& set);

struct TilingOptions {
  std::size_t max_side = 4096;
};

/// Expands the start tile depth times into a 2^depth square grid and
/// paints each leaf cell.
PatternGrid substitute(const TileSet& set, int depth, const TilingOptions& opts = {});

/// Text format, one directive per line ('#' starts a comment):
///   tile <name> <black|white>
///   rule <name> = <nw> <ne> <sw> <se>
///   start <name>
TileSet parse_tileset(std::string_view text);

/// Two-tile substitution generating the CV-table ZERO pattern: the black
/// tile keeps three black quadrants and turns the se quadrant white; white
/// stays white everywhere.
TileSet cvt_preset_tiles();

}  // namespace cvt
