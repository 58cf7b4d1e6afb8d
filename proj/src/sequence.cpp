#include "cvt/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvt/cvtable.hpp"

namespace cvt {

namespace {

// Little unsigned bignum, base 1e9 limbs, little-endian. Only what the
// digit-pair square root needs.
class BigUint {
 public:
  static constexpr std::uint64_t kBase = 1'000'000'000;

  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    while (v > 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  // this * m + a, for small m and a (both < kBase)
  BigUint& mul_small_add(std::uint64_t m, std::uint64_t a) {
    std::uint64_t carry = a;
    for (std::uint32_t& limb : limbs_) {
      const std::uint64_t t = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(t % kBase);
      carry = t / kBase;
    }
    while (carry > 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
    return *this;
  }

  // -1, 0, 1 as this <=> other
  int compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) {
      return limbs_.size() < other.limbs_.size() ? -1 : 1;
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  // this -= other; requires this >= other
  BigUint& subtract(const BigUint& other) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::int64_t t = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < other.limbs_.size() ? other.limbs_[i] : 0);
      if (t < 0) {
        t += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      limbs_[i] = static_cast<std::uint32_t>(t);
    }
    if (borrow != 0) throw std::logic_error("BigUint: subtraction underflow");
    trim();
    return *this;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  using u128 = unsigned __int128;
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

DigitSequence rational_digits(std::uint64_t p, std::uint64_t q, std::size_t count) {
  if (q == 0) throw std::invalid_argument("rational_digits: denominator is zero");
  if (p >= q) throw std::invalid_argument("rational_digits: need 0 <= p < q");
  if (count == 0) throw std::invalid_argument("rational_digits: count must be >= 1");
  if (q > (~std::uint64_t{0}) / 10) {
    throw std::invalid_argument("rational_digits: denominator too large");
  }
  DigitSequence seq;
  seq.digits.reserve(count);
  seq.provenance = "rational " + std::to_string(p) + "/" + std::to_string(q);
  std::uint64_t r = p;
  for (std::size_t i = 0; i < count; ++i) {
    r *= 10;
    seq.digits.push_back(static_cast<std::uint8_t>(r / q));
    r %= q;
  }
  return seq;
}

DigitSequence sqrt_digits(std::uint64_t n, std::size_t count) {
  if (n < 2) throw std::invalid_argument("sqrt_digits: need n >= 2");
  if (count == 0) throw std::invalid_argument("sqrt_digits: count must be >= 1");
  const std::uint64_t root = isqrt_u64(n);
  if (root * root == n) {
    throw std::invalid_argument("sqrt_digits: " + std::to_string(n) +
                                " is a perfect square; use the rational form");
  }

  // integer part as base-100 chunks, most significant first
  const std::string decimal = std::to_string(n);
  std::vector<int> pairs;
  std::size_t pos = decimal.size() % 2;
  if (pos == 1) pairs.push_back(decimal[0] - '0');
  for (; pos < decimal.size(); pos += 2) {
    pairs.push_back((decimal[pos] - '0') * 10 + (decimal[pos + 1] - '0'));
  }

  DigitSequence seq;
  seq.integer_digits = pairs.size();
  seq.digits.reserve(pairs.size() + count);
  seq.provenance = "sqrt " + std::to_string(n);

  // classic digit-pair extraction: remainder = remainder*100 + pair, then
  // the next digit d is the largest with (20*root + d)*d <= remainder
  BigUint remainder;
  BigUint y;  // root so far
  const std::size_t total = pairs.size() + count;
  for (std::size_t step = 0; step < total; ++step) {
    const std::uint64_t chunk = step < pairs.size() ? static_cast<std::uint64_t>(pairs[step]) : 0;
    remainder.mul_small_add(100, chunk);
    int digit = 0;
    BigUint accepted_term;
    for (int d = 9; d >= 1; --d) {
      BigUint term = y;
      term.mul_small_add(20, static_cast<std::uint64_t>(d));
      term.mul_small_add(static_cast<std::uint64_t>(d), 0);
      if (term.compare(remainder) <= 0) {
        digit = d;
        accepted_term = std::move(term);
        break;
      }
    }
    if (digit > 0) remainder.subtract(accepted_term);
    y.mul_small_add(10, static_cast<std::uint64_t>(digit));
    seq.digits.push_back(static_cast<std::uint8_t>(digit));
  }
  return seq;
}

DigitSequence literal_digits(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("literal_digits: empty digit string");
  DigitSequence seq;
  seq.digits.reserve(digits.size());
  seq.provenance = "literal";
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument(std::string("literal_digits: bad digit '") + ch + "'");
    }
    seq.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return seq;
}

std::string to_decimal_string(const DigitSequence& s) {
  std::string out;
  if (s.integer_digits == 0) {
    out = "0";
  } else {
    for (std::size_t i = 0; i < s.integer_digits && i < s.digits.size(); ++i) {
      out += static_cast<char>('0' + s.digits[i]);
    }
  }
  if (s.digits.size() > s.integer_digits) {
    out += '.';
    for (std::size_t i = s.integer_digits; i < s.digits.size(); ++i) {
      out += static_cast<char>('0' + s.digits[i]);
    }
  }
  return out;
}

PeriodReport detect_period(const DigitSequence& s, std::size_t max_period) {
  if (max_period == 0) throw std::invalid_argument("detect_period: bound must be >= 1");
  const auto& d = s.digits;
  if (d.size() < 2 * max_period) {
    throw std::invalid_argument("detect_period: need at least " +
                                std::to_string(2 * max_period) + " digits for bound " +
                                std::to_string(max_period) + ", have " +
                                std::to_string(d.size()));
  }
  PeriodReport report;
  report.search_bound = max_period;
  report.digits_examined = d.size();
  for (std::size_t a = 0; a + 2 <= d.size(); ++a) {
    const std::size_t longest = std::min(max_period, (d.size() - a) / 2);
    for (std::size_t p = 1; p <= longest; ++p) {
      bool repeats = true;
      for (std::size_t i = a; i + p < d.size(); ++i) {
        if (d[i] != d[i + p]) {
          repeats = false;
          break;
        }
      }
      if (repeats) {
        report.periodic = true;
        report.preperiod = a;
        report.period = p;
        return report;
      }
    }
  }
  return report;
}

PatternGrid sequence_table_pattern(const DigitSequence& s) {
  if (s.digits.empty()) throw std::invalid_argument("sequence_table_pattern: no digits");
  std::vector<std::uint64_t> elements(s.digits.begin(), s.digits.end());
  const SourceSequence source = explicit_sequence(std::move(elements), s.provenance);
  const CvTable table = build_table(source, 4);
  PatternGrid grid = extract_pattern(table, Predicate::Zero);
  grid.set_predicate_label("zero over " + s.provenance);
  return grid;
}

}  // namespace cvt
