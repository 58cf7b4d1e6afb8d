#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvt/pattern.hpp"

namespace cvt {

/// Source elements for a CV-table, with a human-readable label.
struct SourceSequence {
  std::vector<std::uint64_t> elements;
  std::string label;
};

SourceSequence naturals(std::uint64_t count);
SourceSequence odds(std::uint64_t count);
SourceSequence explicit_sequence(std::vector<std::uint64_t> elements, std::string label = {});

/// Multiplies every element by 2^pow2. The ZERO pattern of the scaled
/// table equals the ZERO pattern of the original.
SourceSequence scale_sequence(const SourceSequence& source, int pow2);

/// Square table with entries[i][j] = cvt(s_i, s_j) = 2 * (s_i AND s_j).
/// Symmetric, every entry even.
class CvTable {
 public:
  CvTable(SourceSequence source, int width, std::vector<std::uint64_t> entries);

  const SourceSequence& source() const { return source_; }
  int width() const { return width_; }
  std::size_t size() const { return source_.elements.size(); }

  std::uint64_t at(std::size_t i, std::size_t j) const;
  std::uint64_t min_entry() const { return min_entry_; }

 private:
  SourceSequence source_;
  int width_;
  std::vector<std::uint64_t> entries_;
  std::uint64_t min_entry_;
};

struct TableOptions {
  int threads = 1;                 // rows are built in parallel; output is thread-count independent
  std::size_t max_elements = 4096; // dense tables are bounded to keep memory explicit
};

CvTable build_table(const SourceSequence& source, int width, const TableOptions& opts = {});

enum class Predicate { Zero, MinValue, Equals };

/// Boolean grid marking entries that satisfy the predicate. MinValue marks
/// cells attaining the table's global minimum, which realizes the "pattern
/// of zeros" for sequences whose table has no zero entry.
PatternGrid extract_pattern(const CvTable& table, Predicate predicate,
                            std::uint64_t equals_value = 0);

/// Row-major CSV of the decimal entries, one table row per line.
std::string to_csv(const CvTable& table);

}  // namespace cvt
