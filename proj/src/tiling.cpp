#include "cvt/tiling.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace cvt {

void validate(const TileSet& set) {
  if (set.tiles.empty()) throw std::invalid_argument("TileSet: no tiles defined");
  if (set.start.empty()) throw std::invalid_argument("TileSet: no start tile designated");
  if (!set.tiles.contains(set.start)) {
    throw std::invalid_argument("TileSet: start tile '" + set.start + "' is not defined");
  }
  for (const auto& [name, tile] : set.tiles) {
    for (const std::string& child : tile.children) {
      if (!set.tiles.contains(child)) {
        throw std::invalid_argument("TileSet: tile '" + name + "' substitutes unknown tile '" +
                                    child + "'");
      }
    }
  }
}

PatternGrid substitute(const TileSet& set, int depth, const TilingOptions& opts) {
  validate(set);
  if (depth < 0) throw std::invalid_argument("substitute: depth must be >= 0");
  if (depth >= 63 || (std::size_t{1} << depth) > opts.max_side) {
    throw std::invalid_argument("substitute: depth " + std::to_string(depth) +
                                " exceeds the size limit of " + std::to_string(opts.max_side));
  }

  // name -> dense id, children as ids
  std::vector<const Tile*> tiles;
  std::map<std::string, std::size_t> ids;
  for (const auto& [name, tile] : set.tiles) {
    ids.emplace(name, tiles.size());
    tiles.push_back(&tile);
  }
  std::vector<std::array<std::size_t, 4>> children(tiles.size());
  {
    std::size_t id = 0;
    for (const auto& [name, tile] : set.tiles) {
      for (std::size_t q = 0; q < 4; ++q) children[id][q] = ids.at(tile.children[q]);
      ++id;
    }
  }

  std::vector<std::size_t> grid{ids.at(set.start)};
  std::size_t side = 1;
  for (int level = 0; level < depth; ++level) {
    const std::size_t next_side = side * 2;
    std::vector<std::size_t> next(next_side * next_side);
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t c = 0; c < side; ++c) {
        const auto& kids = children[grid[r * side + c]];
        next[(2 * r) * next_side + 2 * c] = kids[0];
        next[(2 * r) * next_side + 2 * c + 1] = kids[1];
        next[(2 * r + 1) * next_side + 2 * c] = kids[2];
        next[(2 * r + 1) * next_side + 2 * c + 1] = kids[3];
      }
    }
    grid = std::move(next);
    side = next_side;
  }

  PatternGrid pattern(side, side, "tiling:" + set.start);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      pattern.set(r, c, tiles[grid[r * side + c]]->black);
    }
  }
  return pattern;
}

TileSet parse_tileset(std::string_view text) {
  TileSet set;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;

    const std::string where = "tileset line " + std::to_string(line_no);
    if (keyword == "tile") {
      std::string name, paint;
      if (!(words >> name >> paint) || (paint != "black" && paint != "white")) {
        throw std::invalid_argument(where + ": expected 'tile <name> <black|white>'");
      }
      set.tiles[name].black = paint == "black";
    } else if (keyword == "rule") {
      std::string name, eq;
      std::array<std::string, 4> kids;
      if (!(words >> name >> eq >> kids[0] >> kids[1] >> kids[2] >> kids[3]) || eq != "=") {
        throw std::invalid_argument(where + ": expected 'rule <name> = <nw> <ne> <sw> <se>'");
      }
      if (!set.tiles.contains(name)) {
        throw std::invalid_argument(where + ": rule for undeclared tile '" + name + "'");
      }
      set.tiles[name].children = kids;
    } else if (keyword == "start") {
      if (!set.start.empty()) throw std::invalid_argument(where + ": duplicate start directive");
      if (!(words >> set.start)) {
        throw std::invalid_argument(where + ": expected 'start <name>'");
      }
    } else {
      throw std::invalid_argument(where + ": unknown directive '" + keyword + "'");
    }
  }
  validate(set);
  return set;
}

TileSet cvt_preset_tiles() {
  TileSet set;
  set.tiles["Z"] = Tile{true, {"Z", "Z", "Z", "N"}};
  set.tiles["N"] = Tile{false, {"N", "N", "N", "N"}};
  set.start = "Z";
  return set;
}

}  // namespace cvt
