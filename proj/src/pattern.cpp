#include "cvt/pattern.hpp"

#include <numeric>
#include <stdexcept>

namespace cvt {

PatternGrid::PatternGrid(std::size_t rows, std::size_t cols, std::string predicate_label)
    : rows_(rows),
      cols_(cols),
      cells_(rows * cols, 0),
      predicate_label_(std::move(predicate_label)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("PatternGrid: dimensions must be positive");
  }
}

std::size_t PatternGrid::index(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw std::out_of_range("PatternGrid: cell (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside " + std::to_string(rows_) +
                            "x" + std::to_string(cols_) + " grid");
  }
  return row * cols_ + col;
}

bool PatternGrid::at(std::size_t row, std::size_t col) const {
  return cells_[index(row, col)] != 0;
}

void PatternGrid::set(std::size_t row, std::size_t col, bool value) {
  cells_[index(row, col)] = value ? 1 : 0;
}

std::size_t PatternGrid::count_true() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::size_t{0});
}

}  // namespace cvt
