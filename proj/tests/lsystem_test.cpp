#include "cvt/lsystem.hpp"

#include <random>

#include "cvt/dimension.hpp"
#include "doctest.h"

using namespace cvt;

TEST_CASE("preset axiom and generation-1 expansion") {
  const LSystemSpec spec = cvt_preset();
  CHECK(join(rewrite(spec, 0)) == "F2 - F1");
  CHECK(join(rewrite(spec, 1)) == "F2 - F1 - F1 - F2 - F1 - F2 - F2 - F1");
}

TEST_CASE("preset symbol counts grow as 2*4^k draws and 2*4^k - 1 turns") {
  const LSystemSpec spec = cvt_preset();
  std::size_t expected_draws = 2;
  for (int k = 0; k <= 8; ++k) {
    const SymbolString s = rewrite(spec, k);
    CAPTURE(k);
    REQUIRE(count_draw_symbols(s) == expected_draws);
    REQUIRE(s.size() == 2 * expected_draws - 1);  // turns fill the rest
    expected_draws *= 4;
  }
}

TEST_CASE("rewriting is a homomorphism over concatenation") {
  const LSystemSpec spec = cvt_preset();
  std::mt19937_64 rng(31);
  const std::vector<std::string> alphabet{"F1", "F2", "-"};
  for (int trial = 0; trial < 50; ++trial) {
    SymbolString s1, s2;
    for (std::size_t i = 0, n = rng() % 12; i < n; ++i) s1.push_back(alphabet[rng() % 3]);
    for (std::size_t i = 0, n = rng() % 12; i < n; ++i) s2.push_back(alphabet[rng() % 3]);
    if (s1.empty()) s1.push_back("F1");
    if (s2.empty()) s2.push_back("F2");

    LSystemSpec from1 = spec;
    from1.axiom = s1;
    LSystemSpec from2 = spec;
    from2.axiom = s2;
    LSystemSpec joined = spec;
    joined.axiom = s1;
    joined.axiom.insert(joined.axiom.end(), s2.begin(), s2.end());

    SymbolString expected = rewrite(from1, 1);
    const SymbolString tail = rewrite(from2, 1);
    expected.insert(expected.end(), tail.begin(), tail.end());
    REQUIRE(rewrite(joined, 1) == expected);
  }
}

TEST_CASE("rewrite composes over generations") {
  const LSystemSpec spec = cvt_preset();
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; k <= 3; ++k) {
      LSystemSpec restarted = spec;
      restarted.axiom = rewrite(spec, j);
      CAPTURE(j);
      CAPTURE(k);
      REQUIRE(rewrite(restarted, k) == rewrite(spec, j + k));
    }
  }
}

TEST_CASE("rewrite validates the spec") {
  LSystemSpec spec = cvt_preset();
  spec.axiom.push_back("F3");
  CHECK_THROWS_AS(rewrite(spec, 1), std::invalid_argument);

  LSystemSpec bad_rule = cvt_preset();
  bad_rule.rules["F1"].push_back("X");
  CHECK_THROWS_AS(rewrite(bad_rule, 1), std::invalid_argument);

  LSystemSpec overlap = cvt_preset();
  overlap.constants.push_back("F1");
  CHECK_THROWS_AS(rewrite(overlap, 1), std::invalid_argument);

  LSystemSpec rule_for_constant = cvt_preset();
  rule_for_constant.rules["-"] = {"-"};
  CHECK_THROWS_AS(rewrite(rule_for_constant, 1), std::invalid_argument);

  CHECK_THROWS_AS(rewrite(cvt_preset(), -1), std::invalid_argument);
}

TEST_CASE("spec files parse") {
  const char* text =
      "# the shipped grammar\n"
      "angle 90\n"
      "axiom F2 - F1\n"
      "rule F1 = F1 - F2 - F2 - F1\n"
      "rule F2 = F2 - F1 - F1 - F2\n";
  const LSystemSpec spec = parse_lsystem(text);
  CHECK(spec.turn_angle_deg == 90.0);
  CHECK(join(spec.axiom) == "F2 - F1");
  CHECK(rewrite(spec, 1) == rewrite(cvt_preset(), 1));

  CHECK_THROWS_AS(parse_lsystem("axiom F\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lsystem("angle 90\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lsystem("angle 90\naxiom F\nrule F = \n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lsystem("angle 90\naxiom F\nbogus\n"), std::invalid_argument);
}

TEST_CASE("turtle draws single segments") {
  LSystemSpec spec = cvt_preset();
  const Bitmap horizontal = turtle_render(SymbolString{"F1"}, spec, 8, 8);
  CHECK(horizontal.ink_count() == 8);
  for (int c = 0; c < 8; ++c) CHECK(horizontal.at(3, c));  // one horizontal run

  // one clockwise turn gives an L shape: both a horizontal and vertical run
  const Bitmap corner = turtle_render(SymbolString{"F1", "-", "F1"}, spec, 9, 9);
  CHECK(corner.ink_count() == 17);
  CHECK(corner.at(0, 0));
  CHECK(corner.at(0, 8));
  CHECK(corner.at(8, 8));
}

TEST_CASE("turtle rejects empty drawings") {
  const LSystemSpec spec = cvt_preset();
  CHECK_THROWS_AS(turtle_render(SymbolString{"-", "-"}, spec, 8, 8), std::invalid_argument);
  CHECK_THROWS_AS(turtle_render(SymbolString{"F1"}, spec, 0, 8), std::invalid_argument);
}

TEST_CASE("preset render at generation 6 has the fractal's box dimension") {
  const LSystemSpec spec = cvt_preset();
  const SymbolString s = rewrite(spec, 6);
  const Bitmap bitmap = turtle_render(s, spec, 512, 512, cvt_render_options());
  const BoxCountSeries series = box_count(to_pattern(bitmap), dyadic_sides(512));
  CHECK(series.fitted_dimension == doctest::Approx(1.585).epsilon(0.1 / 1.585));
}
