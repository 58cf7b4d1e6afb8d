#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cvt/bitword.hpp"

namespace cvt {

/// Result of one machine-checked algebraic law. When a check fails,
/// law_name names the violated sub-law and counterexample holds the
/// smallest offending triple in lexicographic scan order.
struct LawReport {
  std::string law_name;
  bool holds = true;
  std::optional<std::array<BitWord, 3>> counterexample;
  std::string domain_checked;
};

enum class ActionVariant { Cvt, Mcvt };

struct LawCheckOptions {
  int exhaustive_bound = 8;  // widths above this are rejected; use the sampled checks
  int threads = 1;           // workers for the triple loops; result is thread-count independent
};

/// Exhaustively verifies closure, associativity, commutativity and the
/// all-ones identity for mcvt over every word of the given width.
LawReport check_monoid_laws(int width, const LawCheckOptions& opts = {});

/// Checks f(T_a(x), T_b(x)) = T_{f(a,b)}(x) over all triples of the given
/// width, for f = mcvt (holds) or f = cvt under integer semantics
/// cvt(p,q) = 2(p AND q) (fails; the report carries the smallest
/// counterexample, (1,1,1)).
LawReport check_action_law(int width, ActionVariant variant,
                           const LawCheckOptions& opts = {});

/// Sampled variants for widths above the exhaustive bound. Trials come
/// from a fixed-seed generator, so reports are reproducible. Widths are
/// capped at 61 so the cvt action evaluation cannot overflow 64 bits.
LawReport check_monoid_laws_sampled(int width, std::uint64_t trials, std::uint64_t seed);
LawReport check_action_law_sampled(int width, ActionVariant variant,
                                   std::uint64_t trials, std::uint64_t seed);

/// Re-evaluates a report's counterexample; true when the triple indeed
/// violates the named law.
bool counterexample_violates(const LawReport& report);

}  // namespace cvt
