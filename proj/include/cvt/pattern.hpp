#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cvt {

/// Dense 2D boolean grid. Row 0 is the top row in every output; all
/// orientation changes are explicit raster operations. Equality compares
/// dimensions and cells; the predicate label is provenance metadata.
class PatternGrid {
 public:
  PatternGrid(std::size_t rows, std::size_t cols, std::string predicate_label = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  const std::string& predicate_label() const { return predicate_label_; }
  void set_predicate_label(std::string label) { predicate_label_ = std::move(label); }

  std::size_t count_true() const;

  friend bool operator==(const PatternGrid& a, const PatternGrid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t index(std::size_t row, std::size_t col) const;

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
  std::string predicate_label_;
};

}  // namespace cvt
