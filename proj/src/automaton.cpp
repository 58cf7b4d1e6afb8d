#include "cvt/automaton.hpp"

#include <stdexcept>

namespace cvt {

CaRule2::CaRule2(int number) : number_(number) {
  if (number < 0 || number > 15) {
    throw std::invalid_argument("CaRule2: rule number must be in [0, 15], got " +
                                std::to_string(number));
  }
}

SpaceTime::SpaceTime(std::vector<CaRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw std::invalid_argument("SpaceTime: need at least one non-empty row");
  }
  for (const CaRow& row : rows_) {
    if (row.size() != rows_.front().size()) {
      throw std::invalid_argument("SpaceTime: rows must share a width");
    }
  }
}

bool SpaceTime::at(std::size_t t, std::size_t i) const {
  if (t >= rows_.size() || i >= width()) {
    throw std::out_of_range("SpaceTime: cell (" + std::to_string(t) + ", " +
                            std::to_string(i) + ") outside diagram");
  }
  return rows_[t][i] != 0;
}

CaRow single_seed(std::size_t width, std::size_t position) {
  if (width == 0) throw std::invalid_argument("single_seed: width must be >= 1");
  if (position >= width) throw std::invalid_argument("single_seed: position outside array");
  CaRow row(width, 0);
  row[position] = 1;
  return row;
}

CaRow step(const CaRow& config, const CaRule2& rule) {
  if (config.empty()) throw std::invalid_argument("step: configuration is empty");
  CaRow out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    const bool left = i > 0 && config[i - 1] != 0;
    out[i] = rule.next(left, config[i] != 0) ? 1 : 0;
  }
  return out;
}

SpaceTime evolve(const CaRow& seed, const CaRule2& rule, std::size_t steps) {
  std::vector<CaRow> rows;
  rows.reserve(steps + 1);
  rows.push_back(seed);
  for (std::size_t t = 0; t < steps; ++t) {
    rows.push_back(step(rows.back(), rule));
  }
  return SpaceTime(std::move(rows));
}

bool binomial_parity_oracle(std::uint64_t t, std::uint64_t i) {
  if (i > t) return false;
  return (i & (t - i)) == 0;
}

PatternGrid to_pattern(const SpaceTime& st) {
  PatternGrid grid(st.row_count(), st.width(), "ca");
  for (std::size_t t = 0; t < st.row_count(); ++t) {
    for (std::size_t i = 0; i < st.width(); ++i) {
      grid.set(t, i, st.at(t, i));
    }
  }
  return grid;
}

PatternGrid antidiagonal_pattern(const SpaceTime& st, std::size_t size) {
  if (size == 0) throw std::invalid_argument("antidiagonal_pattern: size must be >= 1");
  if (st.row_count() < 2 * size - 1 || st.width() < size) {
    throw std::invalid_argument("antidiagonal_pattern: diagram too small for size " +
                                std::to_string(size) + " (need " +
                                std::to_string(2 * size - 1) + " rows and width " +
                                std::to_string(size) + ")");
  }
  PatternGrid grid(size, size, "ca-antidiagonal");
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      grid.set(i, j, st.at(i + j, i));
    }
  }
  return grid;
}

}  // namespace cvt
