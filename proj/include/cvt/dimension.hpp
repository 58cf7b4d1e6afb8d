#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvt/pattern.hpp"

namespace cvt {

struct BoxCountEntry {
  std::size_t box_side;
  std::size_t occupied_boxes;
};

/// Box counts over dyadic scales plus the least-squares slope of
/// log(occupied) versus log(1/side). Entries are sorted by strictly
/// decreasing box side; fit_residual is the RMS residual in log space.
struct BoxCountSeries {
  std::vector<BoxCountEntry> entries;
  double fitted_dimension = 0.0;
  double fit_residual = 0.0;
};

/// Counts occupied axis-aligned boxes anchored at the grid origin. The
/// pattern must be square with side 2^m and contain at least one true
/// cell; sides must be powers of two dividing the pattern side, at least
/// two distinct scales.
BoxCountSeries box_count(const PatternGrid& pattern, std::span<const std::size_t> sides);

/// All dyadic box sides 1, 2, 4, ..., pattern_side / 2.
std::vector<std::size_t> dyadic_sides(std::size_t pattern_side);

/// Self-similarity dimension log(N) / log(1/S) for N pieces at scale S.
double similarity_dimension(std::size_t pieces, double scale_factor);

/// CSV of side,occupied pairs followed by slope and residual lines.
std::string to_csv(const BoxCountSeries& series);

}  // namespace cvt
