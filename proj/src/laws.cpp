#include "cvt/laws.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "cvt/parallel.hpp"

namespace cvt {

namespace {

using Triple = std::array<std::uint64_t, 3>;

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_width(int width, int max_width, const char* what) {
  if (width < 1) {
    throw std::invalid_argument(std::string(what) + ": width must be >= 1");
  }
  if (width > max_width) {
    throw std::invalid_argument(std::string(what) + ": width " + std::to_string(width) +
                                " exceeds the bound of " + std::to_string(max_width) +
                                "; use the sampled check");
  }
}

std::array<BitWord, 3> to_words(const Triple& t, int width) {
  return {BitWord(t[0], width), BitWord(t[1], width), BitWord(t[2], width)};
}

// Integer-semantics carry value: the (n+1)-bit output read as a number.
std::uint64_t cvt_value(std::uint64_t a, std::uint64_t b) { return 2 * (a & b); }

bool action_law_holds_at(ActionVariant variant, std::uint64_t a, std::uint64_t b,
                         std::uint64_t x) {
  if (variant == ActionVariant::Mcvt) {
    return ((a & x) & (b & x)) == ((a & b) & x);
  }
  return cvt_value(cvt_value(a, x), cvt_value(b, x)) == cvt_value(cvt_value(a, b), x);
}

std::optional<Triple> first_assoc_violation(std::uint64_t a, std::uint64_t count) {
  for (std::uint64_t b = 0; b < count; ++b) {
    for (std::uint64_t c = 0; c < count; ++c) {
      if (((a & b) & c) != (a & (b & c))) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

std::optional<Triple> first_action_violation(ActionVariant variant, std::uint64_t a,
                                             std::uint64_t count) {
  for (std::uint64_t b = 0; b < count; ++b) {
    for (std::uint64_t x = 0; x < count; ++x) {
      if (!action_law_holds_at(variant, a, b, x)) return Triple{a, b, x};
    }
  }
  return std::nullopt;
}

// Runs fn for every a in [0, count) across workers; each worker scans its
// contiguous range ascending, so picking the slot with the smallest a gives
// the lexicographically smallest violation regardless of thread count.
std::optional<Triple> scan_outer(
    std::uint64_t count, int threads,
    const std::function<std::optional<Triple>(std::uint64_t)>& fn) {
  std::vector<std::optional<Triple>> slots(count);
  parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) slots[a] = fn(a);
  });
  for (const auto& slot : slots) {
    if (slot) return slot;
  }
  return std::nullopt;
}

std::string exhaustive_domain(int width, std::uint64_t words) {
  return "width " + std::to_string(width) + ": exhaustive, " + std::to_string(words) +
         " words, " + std::to_string(words * words * words) + " triples";
}

std::string sampled_domain(int width, std::uint64_t trials, std::uint64_t seed) {
  return "width " + std::to_string(width) + ": sampled, " + std::to_string(trials) +
         " trials, seed " + std::to_string(seed);
}

}  // namespace

LawReport check_monoid_laws(int width, const LawCheckOptions& opts) {
  require_width(width, opts.exhaustive_bound, "check_monoid_laws");
  const std::uint64_t mask = width_mask(width);
  const std::uint64_t count = mask + 1;
  LawReport report{"mcvt-monoid", true, std::nullopt, exhaustive_domain(width, count)};

  // identity element 2^n - 1
  for (std::uint64_t a = 0; a < count; ++a) {
    if ((a & mask) != a) {
      report.law_name = "mcvt-monoid:identity";
      report.holds = false;
      report.counterexample = to_words({a, mask, a}, width);
      return report;
    }
  }

  // closure of every pairwise product, and commutativity
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = 0; b < count; ++b) {
      const std::uint64_t ab = a & b;
      if ((ab & mask) != ab) {
        report.law_name = "mcvt-monoid:closure";
        report.holds = false;
        report.counterexample = to_words({a, b, b}, width);
        return report;
      }
      if (ab != (b & a)) {
        report.law_name = "mcvt-monoid:commutativity";
        report.holds = false;
        report.counterexample = to_words({a, b, a}, width);
        return report;
      }
    }
  }

  // associativity over all triples
  auto ce = scan_outer(count, opts.threads,
                       [count](std::uint64_t a) { return first_assoc_violation(a, count); });
  if (ce) {
    report.law_name = "mcvt-monoid:associativity";
    report.holds = false;
    report.counterexample = to_words(*ce, width);
  }
  return report;
}

LawReport check_action_law(int width, ActionVariant variant, const LawCheckOptions& opts) {
  require_width(width, std::min(opts.exhaustive_bound, 61), "check_action_law");
  const std::uint64_t count = width_mask(width) + 1;
  const char* name = variant == ActionVariant::Cvt ? "cvt-action" : "mcvt-action";
  LawReport report{name, true, std::nullopt, exhaustive_domain(width, count)};

  auto ce = scan_outer(count, opts.threads, [variant, count](std::uint64_t a) {
    return first_action_violation(variant, a, count);
  });
  if (ce) {
    report.holds = false;
    report.counterexample = to_words(*ce, width);
  }
  return report;
}

LawReport check_monoid_laws_sampled(int width, std::uint64_t trials, std::uint64_t seed) {
  require_width(width, 61, "check_monoid_laws_sampled");
  if (trials == 0) {
    throw std::invalid_argument("check_monoid_laws_sampled: trials must be >= 1");
  }
  const std::uint64_t mask = width_mask(width);
  LawReport report{"mcvt-monoid", true, std::nullopt, sampled_domain(width, trials, seed)};

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t a = rng() & mask;
    const std::uint64_t b = rng() & mask;
    const std::uint64_t c = rng() & mask;
    const std::uint64_t ab = a & b;
    if ((ab & mask) != ab) {
      report.law_name = "mcvt-monoid:closure";
      report.holds = false;
      report.counterexample = to_words({a, b, b}, width);
      return report;
    }
    if ((a & mask) != a) {
      report.law_name = "mcvt-monoid:identity";
      report.holds = false;
      report.counterexample = to_words({a, mask, a}, width);
      return report;
    }
    if (ab != (b & a)) {
      report.law_name = "mcvt-monoid:commutativity";
      report.holds = false;
      report.counterexample = to_words({a, b, a}, width);
      return report;
    }
    if ((ab & c) != (a & (b & c))) {
      report.law_name = "mcvt-monoid:associativity";
      report.holds = false;
      report.counterexample = to_words({a, b, c}, width);
      return report;
    }
  }
  return report;
}

LawReport check_action_law_sampled(int width, ActionVariant variant, std::uint64_t trials,
                                   std::uint64_t seed) {
  require_width(width, 61, "check_action_law_sampled");
  if (trials == 0) {
    throw std::invalid_argument("check_action_law_sampled: trials must be >= 1");
  }
  const std::uint64_t mask = width_mask(width);
  const char* name = variant == ActionVariant::Cvt ? "cvt-action" : "mcvt-action";
  LawReport report{name, true, std::nullopt, sampled_domain(width, trials, seed)};

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t a = rng() & mask;
    const std::uint64_t b = rng() & mask;
    const std::uint64_t x = rng() & mask;
    if (!action_law_holds_at(variant, a, b, x)) {
      report.holds = false;
      report.counterexample = to_words({a, b, x}, width);
      return report;
    }
  }
  return report;
}

bool counterexample_violates(const LawReport& report) {
  if (!report.counterexample) return false;
  const auto& words = *report.counterexample;
  const std::uint64_t a = words[0].value(), b = words[1].value(), c = words[2].value();
  const std::uint64_t mask = width_mask(words[0].width());
  const std::string& name = report.law_name;

  if (name == "mcvt-monoid:closure") return ((a & b) & mask) != (a & b);
  if (name == "mcvt-monoid:identity") return (a & mask) != a;
  if (name == "mcvt-monoid:commutativity") return (a & b) != (b & a);
  if (name == "mcvt-monoid:associativity") return ((a & b) & c) != (a & (b & c));
  if (name == "cvt-action") return !action_law_holds_at(ActionVariant::Cvt, a, b, c);
  if (name == "mcvt-action") return !action_law_holds_at(ActionVariant::Mcvt, a, b, c);
  return false;
}

}  // namespace cvt
