#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvt/raster.hpp"

namespace cvt {

using SymbolString = std::vector<std::string>;

/// Parallel rewriting grammar: variables get replaced each generation,
/// constants are copied unchanged.
struct LSystemSpec {
  std::vector<std::string> variables;
  std::vector<std::string> constants;
  SymbolString axiom;
  std::map<std::string, SymbolString> rules;
  double turn_angle_deg = 90.0;
};

/// Rejects rule keys outside the variable set, axiom or replacement
/// symbols outside variables + constants, and overlapping symbol sets.
void validate(const LSystemSpec& spec);

/// Applies every rule simultaneously for the given number of generations.
SymbolString rewrite(const LSystemSpec& spec, int generations);

std::string join(std::span<const std::string> symbols);

std::size_t count_draw_symbols(std::span<const std::string> symbols);

/// What the turtle does on one symbol. By default symbols beginning with
/// 'F' draw a unit segment, "-" turns clockwise by the spec angle, "+"
/// counterclockwise, and anything else is a no-op; the turn field is an
/// extra rotation applied after the symbol's own action.
struct TurtleAction {
  bool draw = false;
  double turn_deg = 0.0;
};

struct TurtleOptions {
  double initial_heading_deg = 0.0;               // 0 = east, positive turns counterclockwise
  std::map<std::string, TurtleAction> overrides;  // full replacement per symbol
};

/// Draws the symbol string onto a canvas, uniformly scaled and centered.
/// Throws if nothing is drawn.
Bitmap turtle_render(std::span<const std::string> symbols, const LSystemSpec& spec,
                     int canvas_width, int canvas_height, const TurtleOptions& opts = {});

/// Text format, one directive per line ('#' starts a comment):
///   angle <degrees>
///   axiom <symbols...>
///   variables <symbols...>     (optional; defaults to the rule keys)
///   constants <symbols...>     (optional; defaults to other symbols seen)
///   rule <variable> = <symbols...>
LSystemSpec parse_lsystem(std::string_view text);

/// The two-variable grammar with axiom "F2 - F1", rules
/// F1 -> F1 - F2 - F2 - F1 and F2 -> F2 - F1 - F1 - F2, 90 degree turns.
LSystemSpec cvt_preset();

/// Documented render convention for the preset. The grammar's figures are
/// underdetermined, so the turtle parameters are chosen so that the
/// rendered curve reproduces the CV-table fractal's box dimension; see
/// README for the parameter values.
TurtleOptions cvt_render_options();

}  // namespace cvt
