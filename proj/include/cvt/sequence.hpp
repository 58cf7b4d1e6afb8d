#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvt/pattern.hpp"

namespace cvt {

/// Base-10 digit sequence with provenance. integer_digits is the number of
/// leading digits before the decimal point (0 for fractions and literals).
struct DigitSequence {
  std::vector<std::uint8_t> digits;
  std::size_t integer_digits = 0;
  std::string provenance;
};

/// First count fractional digits of p/q by long division (0 <= p < q).
DigitSequence rational_digits(std::uint64_t p, std::uint64_t q, std::size_t count);

/// Integer-part digits of sqrt(n) followed by count fractional digits,
/// extracted exactly with the decimal digit-pair method (no floating
/// point). Perfect squares are rejected.
DigitSequence sqrt_digits(std::uint64_t n, std::size_t count);

/// Wraps a string of decimal digits.
DigitSequence literal_digits(std::string_view digits);

std::string to_decimal_string(const DigitSequence& s);

struct PeriodReport {
  bool periodic = false;
  std::size_t preperiod = 0;
  std::optional<std::size_t> period;  // absent when no period was found
  std::size_t search_bound = 0;
  std::size_t digits_examined = 0;
};

/// Smallest (preperiod, period) with period <= max_period such that the
/// tail repeats across the whole sequence, requiring at least two full
/// periods of evidence. Needs at least 2 * max_period digits.
PeriodReport detect_period(const DigitSequence& s, std::size_t max_period);

/// ZERO pattern of the CV-table over the digits, each digit a 4-bit word.
PatternGrid sequence_table_pattern(const DigitSequence& s);

}  // namespace cvt
