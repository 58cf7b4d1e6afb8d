#include "cvt/automaton.hpp"

#include <random>

#include "cvt/cvtable.hpp"
#include "doctest.h"

using namespace cvt;

namespace {

// Independent parity route: build Pascal's triangle mod 2 row by row.
std::vector<std::uint8_t> pascal_row_mod2(std::size_t t) {
  std::vector<std::uint8_t> row{1};
  for (std::size_t step = 0; step < t; ++step) {
    std::vector<std::uint8_t> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      const std::uint8_t a = i < row.size() ? row[i] : 0;
      const std::uint8_t b = i > 0 ? row[i - 1] : 0;
      next[i] = a ^ b;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

TEST_CASE("rule numbering follows bit (2*left + self)") {
  const CaRule2 rule6(6);
  CHECK(!rule6.next(false, false));
  CHECK(rule6.next(false, true));
  CHECK(rule6.next(true, false));
  CHECK(!rule6.next(true, true));
  CHECK_THROWS_AS(CaRule2(16), std::invalid_argument);
  CHECK_THROWS_AS(CaRule2(-1), std::invalid_argument);
}

TEST_CASE("step applies the null boundary") {
  const CaRule2 rule6(6);
  CHECK(step({0, 0, 0}, rule6) == CaRow{0, 0, 0});
  CHECK(step({1, 0, 0, 0}, rule6) == CaRow{1, 1, 0, 0});
  CHECK(step({0, 1, 0}, rule6) == CaRow{0, 1, 1});
  CHECK_THROWS_AS(step({}, rule6), std::invalid_argument);

  // rule 0 erases everything
  CHECK(step({1, 1, 1}, CaRule2(0)) == CaRow{0, 0, 0});
}

TEST_CASE("rule 6 evolution rows are Pascal's triangle mod 2") {
  const SpaceTime st = evolve(single_seed(5), CaRule2(6), 4);
  REQUIRE(st.row_count() == 5);
  const std::vector<CaRow> expected{
      {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {1, 1, 1, 1, 0}, {1, 0, 0, 0, 1}};
  CHECK(st.rows() == expected);
}

TEST_CASE("evolve with zero steps returns the seed") {
  const SpaceTime st = evolve(single_seed(3, 1), CaRule2(6), 0);
  CHECK(st.row_count() == 1);
  CHECK(st.rows().front() == CaRow{0, 1, 0});
}

TEST_CASE("binomial parity oracle") {
  CHECK(binomial_parity_oracle(4, 2) == false);  // C(4,2) = 6
  CHECK(binomial_parity_oracle(3, 1) == true);   // C(3,1) = 3
  for (std::uint64_t t = 0; t < 12; ++t) CHECK(binomial_parity_oracle(t, 0));
  CHECK(!binomial_parity_oracle(3, 4));

  // against the Pascal-row oracle
  for (std::size_t t = 0; t < 64; ++t) {
    const auto row = pascal_row_mod2(t);
    for (std::size_t i = 0; i <= t; ++i) {
      REQUIRE(binomial_parity_oracle(t, i) == (row[i] != 0));
    }
  }
}

TEST_CASE("rule-6 evolution matches the binomial parity oracle for 256 steps") {
  const std::size_t steps = 256;
  const SpaceTime st = evolve(single_seed(steps + 1), CaRule2(6), steps);
  for (std::size_t t = 0; t <= steps; ++t) {
    for (std::size_t i = 0; i <= steps; ++i) {
      REQUIRE(st.at(t, i) == binomial_parity_oracle(t, i));
    }
  }
}

TEST_CASE("rule 6 step is XOR-linear") {
  std::mt19937_64 rng(23);
  const CaRule2 rule6(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t width = 1 + rng() % 64;
    CaRow a(width), b(width), both(width);
    for (std::size_t i = 0; i < width; ++i) {
      a[i] = static_cast<std::uint8_t>(rng() % 2);
      b[i] = static_cast<std::uint8_t>(rng() % 2);
      both[i] = a[i] ^ b[i];
    }
    const CaRow sa = step(a, rule6), sb = step(b, rule6), sboth = step(both, rule6);
    for (std::size_t i = 0; i < width; ++i) {
      REQUIRE(sboth[i] == (sa[i] ^ sb[i]));
    }
  }
}

TEST_CASE("anti-diagonal traversal reproduces the CV-table ZERO pattern") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t size = std::size_t{1} << n;
    const SpaceTime st = evolve(single_seed(2 * size - 1), CaRule2(6), 2 * size - 2);
    const PatternGrid from_ca = antidiagonal_pattern(st, size);
    const PatternGrid from_table = extract_pattern(
        build_table(naturals(size), static_cast<int>(n)), Predicate::Zero);
    CAPTURE(n);
    REQUIRE(from_ca == from_table);
  }
}

TEST_CASE("antidiagonal_pattern validates diagram size") {
  const SpaceTime st = evolve(single_seed(4), CaRule2(6), 4);
  CHECK_THROWS_AS(antidiagonal_pattern(st, 8), std::invalid_argument);
  CHECK_THROWS_AS(antidiagonal_pattern(st, 0), std::invalid_argument);
}

TEST_CASE("space-time pattern export marks ones") {
  const SpaceTime st = evolve(single_seed(3), CaRule2(6), 2);
  const PatternGrid grid = to_pattern(st);
  CHECK(grid.rows() == 3);
  CHECK(grid.cols() == 3);
  CHECK(grid.at(0, 0));
  CHECK(!grid.at(0, 1));
  CHECK(grid.at(2, 2));
}
