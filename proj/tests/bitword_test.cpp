#include "cvt/bitword.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace cvt;

TEST_CASE("BitWord validates width and value") {
  CHECK_THROWS_AS(BitWord(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(BitWord(0, 65), std::invalid_argument);
  CHECK_THROWS_AS(BitWord(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BitWord(16, 4), std::invalid_argument);
  CHECK(BitWord(15, 4).value() == 15);
  CHECK(BitWord(0, 64).width() == 64);
  CHECK(BitWord(13, 4).to_binary() == "1101");
  CHECK(BitWord(0, 3).to_binary() == "000");
}

TEST_CASE("cvt matches the worked 13,14 example") {
  const BitWord a(13, 4), b(14, 4);
  const BitWord carry = cvt(a, b);
  CHECK(carry.value() == 24);
  CHECK(carry.width() == 5);
  CHECK(carry.to_binary() == "11000");
  CHECK(xor_sum(a, b).value() == 3);
  CHECK(xor_sum(a, b).to_binary() == "0011");
}

TEST_CASE("cvt basics") {
  CHECK(cvt(BitWord(5, 3), BitWord(3, 3)).value() == 2);
  CHECK(cvt(BitWord(0, 4), BitWord(11, 4)).value() == 0);
  CHECK(xor_sum(BitWord(5, 3), BitWord(3, 3)).value() == 6);
  CHECK(xor_sum(BitWord(9, 4), BitWord(9, 4)).value() == 0);
  CHECK_THROWS_AS(cvt(BitWord(1, 2), BitWord(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(xor_sum(BitWord(1, 2), BitWord(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(cvt(BitWord(1, 64), BitWord(1, 64)), std::invalid_argument);
}

TEST_CASE("mcvt basics") {
  CHECK(mcvt(BitWord(13, 4), BitWord(14, 4)).value() == 12);
  CHECK(mcvt(BitWord(13, 4), BitWord(14, 4)).width() == 4);
  CHECK(mcvt(BitWord(0, 4), BitWord(7, 4)).value() == 0);
  CHECK(mcvt(BitWord(9, 4), all_ones(4)) == BitWord(9, 4));
  CHECK_THROWS_AS(mcvt(BitWord(1, 2), BitWord(1, 3)), std::invalid_argument);
}

TEST_CASE("cvt decomposes addition exhaustively at width 8") {
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = 0; b < 256; ++b) {
      const BitWord wa(a, 8), wb(b, 8);
      const std::uint64_t carry = cvt(wa, wb).value();
      const std::uint64_t sum = xor_sum(wa, wb).value();
      REQUIRE(carry == 2 * (a & b));
      REQUIRE(carry % 2 == 0);
      REQUIRE(carry + sum == a + b);
      REQUIRE(cvt(wa, wb) == cvt(wb, wa));
      REQUIRE(carry == 2 * mcvt(wa, wb).value());
    }
  }
}

TEST_CASE("cvt_kary folds left with zero extension") {
  const std::vector<BitWord> ones{BitWord(1, 1), BitWord(1, 1), BitWord(1, 1)};
  CHECK(cvt_kary(ones).value() == 0);
  CHECK(cvt_kary(ones).width() == 3);

  const std::vector<BitWord> pair{BitWord(5, 3), BitWord(3, 3)};
  CHECK(cvt_kary(pair) == cvt(BitWord(5, 3), BitWord(3, 3)));

  const std::vector<BitWord> zero_lead{BitWord(0, 3), BitWord(5, 3), BitWord(7, 3)};
  CHECK(cvt_kary(zero_lead).value() == 0);

  const std::vector<BitWord> single{BitWord(1, 1)};
  CHECK_THROWS_AS(cvt_kary(single), std::invalid_argument);
  const std::vector<BitWord> mixed{BitWord(1, 1), BitWord(1, 2)};
  CHECK_THROWS_AS(cvt_kary(mixed), std::invalid_argument);
}

TEST_CASE("mcvt_kary is the AND fold") {
  const std::vector<BitWord> xs{BitWord(7, 3), BitWord(5, 3), BitWord(3, 3)};
  CHECK(mcvt_kary(xs).value() == 1);
  CHECK(mcvt_kary(xs).width() == 3);

  const std::vector<BitWord> pair{BitWord(6, 3), BitWord(5, 3)};
  CHECK(mcvt_kary(pair) == mcvt(BitWord(6, 3), BitWord(5, 3)));

  const std::vector<BitWord> with_identity{BitWord(5, 3), all_ones(3), all_ones(3)};
  CHECK(mcvt_kary(with_identity) == BitWord(5, 3));

  const std::vector<BitWord> single{BitWord(1, 1)};
  CHECK_THROWS_AS(mcvt_kary(single), std::invalid_argument);
}

TEST_CASE("mcvt_kary is fold-order free") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 1 + static_cast<int>(rng() % 16);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    std::vector<BitWord> xs;
    const std::size_t k = 2 + rng() % 5;
    std::uint64_t expected = mask;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t v = rng() & mask;
      expected &= v;
      xs.emplace_back(v, width);
    }
    REQUIRE(mcvt_kary(xs).value() == expected);

    std::vector<BitWord> shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(mcvt_kary(shuffled) == mcvt_kary(xs));
  }
}
