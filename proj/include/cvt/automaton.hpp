#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cvt/pattern.hpp"

namespace cvt {

using CaRow = std::vector<std::uint8_t>;

/// One-way two-neighborhood binary CA rule: each cell's next state depends
/// on its left neighbor and itself. The (left, self) row of the truth
/// table is bit (2*left + self) of the rule number. Rule 6 is the XOR
/// stencil.
class CaRule2 {
 public:
  explicit CaRule2(int number);

  int number() const { return number_; }
  bool next(bool left, bool self) const {
    return (number_ >> ((left ? 2 : 0) + (self ? 1 : 0))) & 1;
  }

 private:
  int number_;
};

/// Space-time diagram: row t is the configuration at time t, null boundary
/// (cells outside the array read 0).
class SpaceTime {
 public:
  explicit SpaceTime(std::vector<CaRow> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t width() const { return rows_.front().size(); }
  bool at(std::size_t t, std::size_t i) const;

  const std::vector<CaRow>& rows() const { return rows_; }

 private:
  std::vector<CaRow> rows_;
};

/// Configuration with a single 1 at the given position.
CaRow single_seed(std::size_t width, std::size_t position = 0);

/// One synchronous update under the rule with null boundary.
CaRow step(const CaRow& config, const CaRule2& rule);

/// steps+1 rows; row 0 is the seed.
SpaceTime evolve(const CaRow& seed, const CaRule2& rule, std::size_t steps);

/// True iff C(t, i) is odd, by Lucas' criterion: i AND (t - i) == 0.
/// False outside 0 <= i <= t. Independent oracle for rule-6 evolution.
bool binomial_parity_oracle(std::uint64_t t, std::uint64_t i);

/// Space-time rows as a boolean grid (1 = true = black).
PatternGrid to_pattern(const SpaceTime& st);

/// Reads cell (i, j) of the output from space-time cell (i+j, i): the
/// anti-diagonal traversal that reproduces the CV-table ZERO pattern from
/// a rule-6 run. Requires at least 2*size - 1 rows and width >= size.
PatternGrid antidiagonal_pattern(const SpaceTime& st, std::size_t size);

}  // namespace cvt
