#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace cvt {

inline constexpr int kMaxWordWidth = 64;

/// Unsigned integer carrying an explicit bit width (1..64).
class BitWord {
 public:
  BitWord(std::uint64_t value, int width);

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }

  /// MSB-first binary string, exactly width() characters.
  std::string to_binary() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  std::uint64_t value_;
  int width_;
};

/// All-ones word of the given width; the identity element of mcvt.
BitWord all_ones(int width);

/// Carry word of a + b: the columnwise AND shifted left by the trailing
/// pad, numerically 2 * (a AND b). One bit wider than the inputs, so the
/// inputs may be at most 63 bits wide. Always even.
BitWord cvt(const BitWord& a, const BitWord& b);

/// Sum-bit word of a + b ignoring carries: bitwise XOR, width preserved.
/// Satisfies cvt(a,b) + xor_sum(a,b) = a + b.
BitWord xor_sum(const BitWord& a, const BitWord& b);

/// Carry word without the trailing pad: a AND b, width preserved.
/// Equals cvt(a,b) / 2.
BitWord mcvt(const BitWord& a, const BitWord& b);

/// Left fold of cvt over xs (k >= 2 operands of equal width). The running
/// result grows one bit per step; the shorter operand is zero-extended on
/// the left before each binary step.
BitWord cvt_kary(std::span<const BitWord> xs);

/// Left fold of mcvt over xs (k >= 2 operands of equal width); the AND of
/// all values, independent of fold order.
BitWord mcvt_kary(std::span<const BitWord> xs);

}  // namespace cvt
