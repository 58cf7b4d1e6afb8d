#include "cvt/lsystem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cvt {

namespace {

constexpr std::size_t kMaxSymbols = std::size_t{1} << 26;

std::set<std::string> to_set(const std::vector<std::string>& v) {
  return std::set<std::string>(v.begin(), v.end());
}

struct Segment {
  double x0, y0, x1, y1;
};

double normalize_heading(double deg) {
  double h = std::fmod(deg, 360.0);
  if (h < 0) h += 360.0;
  return h;
}

}  // namespace

void validate(const LSystemSpec& spec) {
  const auto vars = to_set(spec.variables);
  const auto consts = to_set(spec.constants);
  if (spec.axiom.empty()) throw std::invalid_argument("LSystemSpec: axiom is empty");
  for (const std::string& v : spec.variables) {
    if (consts.contains(v)) {
      throw std::invalid_argument("LSystemSpec: symbol '" + v +
                                  "' is both a variable and a constant");
    }
  }
  for (const auto& [key, body] : spec.rules) {
    if (!vars.contains(key)) {
      throw std::invalid_argument("LSystemSpec: rule for non-variable symbol '" + key + "'");
    }
    for (const std::string& s : body) {
      if (!vars.contains(s) && !consts.contains(s)) {
        throw std::invalid_argument("LSystemSpec: rule for '" + key +
                                    "' uses unknown symbol '" + s + "'");
      }
    }
  }
  for (const std::string& s : spec.axiom) {
    if (!vars.contains(s) && !consts.contains(s)) {
      throw std::invalid_argument("LSystemSpec: axiom uses unknown symbol '" + s + "'");
    }
  }
}

SymbolString rewrite(const LSystemSpec& spec, int generations) {
  if (generations < 0) throw std::invalid_argument("rewrite: generations must be >= 0");
  validate(spec);

  SymbolString current = spec.axiom;
  for (int gen = 0; gen < generations; ++gen) {
    SymbolString next;
    std::size_t projected = 0;
    for (const std::string& s : current) {
      auto it = spec.rules.find(s);
      projected += it == spec.rules.end() ? 1 : it->second.size();
    }
    if (projected > kMaxSymbols) {
      throw std::invalid_argument("rewrite: generation " + std::to_string(gen + 1) +
                                  " would exceed " + std::to_string(kMaxSymbols) + " symbols");
    }
    next.reserve(projected);
    for (const std::string& s : current) {
      auto it = spec.rules.find(s);
      if (it == spec.rules.end()) {
        next.push_back(s);
      } else {
        next.insert(next.end(), it->second.begin(), it->second.end());
      }
    }
    current = std::move(next);
  }
  return current;
}

std::string join(std::span<const std::string> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) out += ' ';
    out += symbols[i];
  }
  return out;
}

std::size_t count_draw_symbols(std::span<const std::string> symbols) {
  return static_cast<std::size_t>(std::count_if(
      symbols.begin(), symbols.end(),
      [](const std::string& s) { return !s.empty() && s.front() == 'F'; }));
}

Bitmap turtle_render(std::span<const std::string> symbols, const LSystemSpec& spec,
                     int canvas_width, int canvas_height, const TurtleOptions& opts) {
  if (canvas_width < 1 || canvas_height < 1) {
    throw std::invalid_argument("turtle_render: canvas dimensions must be positive");
  }

  auto action_for = [&](const std::string& s) -> TurtleAction {
    auto it = opts.overrides.find(s);
    if (it != opts.overrides.end()) return it->second;
    if (!s.empty() && s.front() == 'F') return TurtleAction{true, 0.0};
    if (s == "-") return TurtleAction{false, -spec.turn_angle_deg};
    if (s == "+") return TurtleAction{false, spec.turn_angle_deg};
    return TurtleAction{};
  };

  // trace in mathematical coordinates (y up)
  std::vector<Segment> segments;
  double x = 0.0, y = 0.0;
  double heading = normalize_heading(opts.initial_heading_deg);
  for (const std::string& s : symbols) {
    const TurtleAction action = action_for(s);
    if (action.draw) {
      const double rad = heading * std::numbers::pi / 180.0;
      const double nx = x + std::cos(rad);
      const double ny = y + std::sin(rad);
      segments.push_back({x, y, nx, ny});
      x = nx;
      y = ny;
    }
    if (action.turn_deg != 0.0) heading = normalize_heading(heading + action.turn_deg);
  }
  if (segments.empty()) throw std::invalid_argument("turtle_render: nothing to draw");

  double min_x = segments.front().x0, max_x = min_x;
  double min_y = segments.front().y0, max_y = min_y;
  for (const Segment& s : segments) {
    min_x = std::min({min_x, s.x0, s.x1});
    max_x = std::max({max_x, s.x0, s.x1});
    min_y = std::min({min_y, s.y0, s.y1});
    max_y = std::max({max_y, s.y0, s.y1});
  }
  const double bw = max_x - min_x;
  const double bh = max_y - min_y;
  double scale = std::numeric_limits<double>::infinity();
  if (bw > 0) scale = (canvas_width - 1) / bw;
  if (bh > 0) scale = std::min(scale, (canvas_height - 1) / bh);
  if (!std::isfinite(scale)) scale = 1.0;  // single point or degenerate drawing
  const double off_x = (canvas_width - 1 - bw * scale) / 2.0;
  const double off_y = (canvas_height - 1 - bh * scale) / 2.0;

  Bitmap bitmap(canvas_width, canvas_height);
  auto to_col = [&](double wx) { return static_cast<int>(std::lround((wx - min_x) * scale + off_x)); };
  auto to_row = [&](double wy) {
    return canvas_height - 1 - static_cast<int>(std::lround((wy - min_y) * scale + off_y));
  };
  for (const Segment& s : segments) {
    int c0 = to_col(s.x0), r0 = to_row(s.y0);
    const int c1 = to_col(s.x1), r1 = to_row(s.y1);
    // Bresenham
    const int dc = std::abs(c1 - c0), dr = -std::abs(r1 - r0);
    const int sc = c0 < c1 ? 1 : -1, sr = r0 < r1 ? 1 : -1;
    int err = dc + dr;
    while (true) {
      bitmap.set(r0, c0, true);
      if (c0 == c1 && r0 == r1) break;
      const int e2 = 2 * err;
      if (e2 >= dr) {
        err += dr;
        c0 += sc;
      }
      if (e2 <= dc) {
        err += dc;
        r0 += sr;
      }
    }
  }
  return bitmap;
}

LSystemSpec parse_lsystem(std::string_view text) {
  LSystemSpec spec;
  bool saw_angle = false;
  std::set<std::string> seen_symbols;
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

    const std::string where = "lsystem line " + std::to_string(line_no);
    if (keyword == "angle") {
      if (!(words >> spec.turn_angle_deg)) {
        throw std::invalid_argument(where + ": expected 'angle <degrees>'");
      }
      saw_angle = true;
    } else if (keyword == "axiom") {
      std::string s;
      while (words >> s) {
        spec.axiom.push_back(s);
        seen_symbols.insert(s);
      }
      if (spec.axiom.empty()) throw std::invalid_argument(where + ": empty axiom");
    } else if (keyword == "variables") {
      std::string s;
      while (words >> s) spec.variables.push_back(s);
    } else if (keyword == "constants") {
      std::string s;
      while (words >> s) spec.constants.push_back(s);
    } else if (keyword == "rule") {
      std::string key, eq, s;
      if (!(words >> key >> eq) || eq != "=") {
        throw std::invalid_argument(where + ": expected 'rule <variable> = <symbols...>'");
      }
      SymbolString body;
      while (words >> s) {
        body.push_back(s);
        seen_symbols.insert(s);
      }
      if (body.empty()) throw std::invalid_argument(where + ": empty rule body");
      if (spec.rules.contains(key)) {
        throw std::invalid_argument(where + ": duplicate rule for '" + key + "'");
      }
      seen_symbols.insert(key);
      spec.rules.emplace(key, std::move(body));
    } else {
      throw std::invalid_argument(where + ": unknown directive '" + keyword + "'");
    }
  }
  if (!saw_angle) throw std::invalid_argument("lsystem: missing angle directive");
  if (spec.axiom.empty()) throw std::invalid_argument("lsystem: missing axiom directive");

  if (spec.variables.empty()) {
    for (const auto& [key, body] : spec.rules) spec.variables.push_back(key);
  }
  if (spec.constants.empty()) {
    const auto vars = to_set(spec.variables);
    for (const std::string& s : seen_symbols) {
      if (!vars.contains(s)) spec.constants.push_back(s);
    }
  }
  validate(spec);
  return spec;
}

LSystemSpec cvt_preset() {
  LSystemSpec spec;
  spec.variables = {"F1", "F2"};
  spec.constants = {"-"};
  spec.axiom = {"F2", "-", "F1"};
  spec.rules["F1"] = {"F1", "-", "F2", "-", "F2", "-", "F1"};
  spec.rules["F2"] = {"F2", "-", "F1", "-", "F1", "-", "F2"};
  spec.turn_angle_deg = 90.0;
  return spec;
}

TurtleOptions cvt_render_options() {
  // Placeholder until the render convention is pinned by the dimension
  // check; see cvt_render_options tests.
  return TurtleOptions{};
}

}  // namespace cvt
