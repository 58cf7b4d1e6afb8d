#include "cvt/cvtable.hpp"

#include <algorithm>
#include <stdexcept>

#include "cvt/parallel.hpp"

namespace cvt {

namespace {

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

SourceSequence naturals(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("naturals: count must be >= 1");
  SourceSequence s;
  s.elements.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) s.elements.push_back(v);
  s.label = "naturals 0.." + std::to_string(count - 1);
  return s;
}

SourceSequence odds(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("odds: count must be >= 1");
  SourceSequence s;
  s.elements.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) s.elements.push_back(2 * i + 1);
  s.label = "odds 1.." + std::to_string(2 * count - 1);
  return s;
}

SourceSequence explicit_sequence(std::vector<std::uint64_t> elements, std::string label) {
  if (elements.empty()) throw std::invalid_argument("explicit_sequence: sequence is empty");
  return SourceSequence{std::move(elements), std::move(label)};
}

SourceSequence scale_sequence(const SourceSequence& source, int pow2) {
  if (pow2 < 0) throw std::invalid_argument("scale_sequence: exponent must be >= 0");
  if (pow2 > 63) throw std::invalid_argument("scale_sequence: exponent must be <= 63");
  SourceSequence scaled;
  scaled.elements.reserve(source.elements.size());
  const std::uint64_t limit = pow2 == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> pow2);
  for (std::uint64_t v : source.elements) {
    if (v > limit) {
      throw std::invalid_argument("scale_sequence: element " + std::to_string(v) +
                                  " * 2^" + std::to_string(pow2) + " overflows 64 bits");
    }
    scaled.elements.push_back(v << pow2);
  }
  scaled.label = source.label + " * 2^" + std::to_string(pow2);
  return scaled;
}

CvTable::CvTable(SourceSequence source, int width, std::vector<std::uint64_t> entries)
    : source_(std::move(source)), width_(width), entries_(std::move(entries)) {
  const std::size_t n = source_.elements.size();
  if (entries_.size() != n * n) {
    throw std::invalid_argument("CvTable: entry count does not match the source size");
  }
  min_entry_ = *std::min_element(entries_.begin(), entries_.end());
}

std::uint64_t CvTable::at(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i >= n || j >= n) {
    throw std::out_of_range("CvTable: entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside " + std::to_string(n) +
                            "x" + std::to_string(n) + " table");
  }
  return entries_[i * n + j];
}

CvTable build_table(const SourceSequence& source, int width, const TableOptions& opts) {
  if (source.elements.empty()) {
    throw std::invalid_argument("build_table: source sequence is empty");
  }
  if (width < 1 || width > 63) {
    throw std::invalid_argument("build_table: width must be in [1, 63]");
  }
  if (source.elements.size() > opts.max_elements) {
    throw std::invalid_argument("build_table: " + std::to_string(source.elements.size()) +
                                " elements exceed the table limit of " +
                                std::to_string(opts.max_elements));
  }
  const std::uint64_t mask = width_mask(width);
  for (std::uint64_t v : source.elements) {
    if ((v & mask) != v) {
      throw std::invalid_argument("build_table: element " + std::to_string(v) +
                                  " does not fit in " + std::to_string(width) + " bits");
    }
  }

  const std::size_t n = source.elements.size();
  std::vector<std::uint64_t> entries(n * n);
  const auto& s = source.elements;
  parallel_chunks(n, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        entries[i * n + j] = 2 * (s[i] & s[j]);
      }
    }
  });
  return CvTable(source, width, std::move(entries));
}

PatternGrid extract_pattern(const CvTable& table, Predicate predicate,
                            std::uint64_t equals_value) {
  const std::size_t n = table.size();
  std::uint64_t target = 0;
  std::string label;
  switch (predicate) {
    case Predicate::Zero:
      target = 0;
      label = "zero";
      break;
    case Predicate::MinValue:
      target = table.min_entry();
      label = "min=" + std::to_string(target);
      break;
    case Predicate::Equals:
      target = equals_value;
      label = "equals " + std::to_string(target);
      break;
  }
  PatternGrid grid(n, n, label);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grid.set(i, j, table.at(i, j) == target);
    }
  }
  return grid;
}

std::string to_csv(const CvTable& table) {
  std::string out;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(table.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cvt
