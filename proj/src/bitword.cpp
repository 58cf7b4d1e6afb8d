#include "cvt/bitword.hpp"

#include <stdexcept>

namespace cvt {

namespace {

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_same_width(const BitWord& a, const BitWord& b, const char* op) {
  if (a.width() != b.width()) {
    throw std::invalid_argument(std::string(op) + ": operand widths differ (" +
                                std::to_string(a.width()) + " vs " +
                                std::to_string(b.width()) + ")");
  }
}

void require_fold_arity(std::size_t k, const char* op) {
  if (k < 2) {
    throw std::invalid_argument(std::string(op) + ": need at least 2 operands, got " +
                                std::to_string(k));
  }
}

}  // namespace

BitWord::BitWord(std::uint64_t value, int width) : value_(value), width_(width) {
  if (width < 1 || width > kMaxWordWidth) {
    throw std::invalid_argument("BitWord: width must be in [1, 64], got " +
                                std::to_string(width));
  }
  if (value > width_mask(width)) {
    throw std::invalid_argument("BitWord: value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) + " bits");
  }
}

std::string BitWord::to_binary() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((value_ >> i) & 1) out[static_cast<std::size_t>(width_ - 1 - i)] = '1';
  }
  return out;
}

BitWord all_ones(int width) { return BitWord(width_mask(width), width); }

BitWord cvt(const BitWord& a, const BitWord& b) {
  require_same_width(a, b, "cvt");
  if (a.width() > kMaxWordWidth - 1) {
    throw std::invalid_argument("cvt: inputs may be at most 63 bits wide");
  }
  return BitWord(2 * (a.value() & b.value()), a.width() + 1);
}

BitWord xor_sum(const BitWord& a, const BitWord& b) {
  require_same_width(a, b, "xor_sum");
  return BitWord(a.value() ^ b.value(), a.width());
}

BitWord mcvt(const BitWord& a, const BitWord& b) {
  require_same_width(a, b, "mcvt");
  return BitWord(a.value() & b.value(), a.width());
}

BitWord cvt_kary(std::span<const BitWord> xs) {
  require_fold_arity(xs.size(), "cvt_kary");
  const int base_width = xs.front().width();
  for (const BitWord& x : xs) {
    if (x.width() != base_width) {
      throw std::invalid_argument("cvt_kary: operands must share a width");
    }
  }
  if (base_width + static_cast<int>(xs.size()) - 1 > kMaxWordWidth) {
    throw std::invalid_argument("cvt_kary: result width would exceed 64 bits");
  }
  BitWord acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = cvt(acc, BitWord(xs[i].value(), acc.width()));
  }
  return acc;
}

BitWord mcvt_kary(std::span<const BitWord> xs) {
  require_fold_arity(xs.size(), "mcvt_kary");
  BitWord acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = mcvt(acc, xs[i]);
  }
  return acc;
}

}  // namespace cvt
