#include "cvt/dimension.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cvt {

namespace {

bool is_pow2(std::size_t v) { return v != 0 && std::has_single_bit(v); }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::size_t occupied_boxes(const PatternGrid& pattern, std::size_t side) {
  const std::size_t boxes_per_axis = pattern.rows() / side;
  std::vector<std::uint8_t> hit(boxes_per_axis * boxes_per_axis, 0);
  for (std::size_t r = 0; r < pattern.rows(); ++r) {
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      if (pattern.at(r, c)) hit[(r / side) * boxes_per_axis + (c / side)] = 1;
    }
  }
  std::size_t count = 0;
  for (std::uint8_t h : hit) count += h;
  return count;
}

}  // namespace

BoxCountSeries box_count(const PatternGrid& pattern, std::span<const std::size_t> sides) {
  if (pattern.rows() != pattern.cols() || !is_pow2(pattern.rows())) {
    throw std::invalid_argument("box_count: pattern must be square with a power-of-two side");
  }
  if (pattern.count_true() == 0) {
    throw std::invalid_argument("box_count: pattern has no true cells");
  }
  std::vector<std::size_t> sorted(sides.begin(), sides.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) {
    throw std::invalid_argument("box_count: need at least two distinct scales");
  }
  for (std::size_t side : sorted) {
    if (!is_pow2(side) || side > pattern.rows()) {
      throw std::invalid_argument("box_count: box side " + std::to_string(side) +
                                  " must be a power of two dividing the pattern side");
    }
  }

  BoxCountSeries series;
  series.entries.reserve(sorted.size());
  for (std::size_t side : sorted) {
    series.entries.push_back({side, occupied_boxes(pattern, side)});
  }

  // least squares in log space: x = log(1/side), y = log(occupied)
  const double n = static_cast<double>(series.entries.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& e : series.entries) {
    const double x = -std::log(static_cast<double>(e.box_side));
    const double y = std::log(static_cast<double>(e.occupied_boxes));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  series.fitted_dimension = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - series.fitted_dimension * sx) / n;
  double ss = 0;
  for (const auto& e : series.entries) {
    const double x = -std::log(static_cast<double>(e.box_side));
    const double y = std::log(static_cast<double>(e.occupied_boxes));
    const double r = y - (series.fitted_dimension * x + intercept);
    ss += r * r;
  }
  series.fit_residual = std::sqrt(ss / n);
  return series;
}

std::vector<std::size_t> dyadic_sides(std::size_t pattern_side) {
  if (!is_pow2(pattern_side) || pattern_side < 4) {
    throw std::invalid_argument("dyadic_sides: pattern side must be a power of two >= 4");
  }
  std::vector<std::size_t> sides;
  for (std::size_t s = 1; s < pattern_side; s *= 2) sides.push_back(s);
  return sides;
}

double similarity_dimension(std::size_t pieces, double scale_factor) {
  if (pieces < 1) throw std::invalid_argument("similarity_dimension: pieces must be >= 1");
  if (!(scale_factor > 0.0) || !(scale_factor < 1.0)) {
    throw std::invalid_argument("similarity_dimension: scale factor must lie in (0, 1)");
  }
  return std::log(static_cast<double>(pieces)) / std::log(1.0 / scale_factor);
}

std::string to_csv(const BoxCountSeries& series) {
  std::string out = "side,occupied\n";
  for (const auto& e : series.entries) {
    out += std::to_string(e.box_side) + "," + std::to_string(e.occupied_boxes) + "\n";
  }
  out += "slope," + format_double(series.fitted_dimension) + "\n";
  out += "residual," + format_double(series.fit_residual) + "\n";
  return out;
}

}  // namespace cvt
