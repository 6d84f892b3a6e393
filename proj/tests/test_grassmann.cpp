#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "hypergrass/bigfloat.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/matrix.hpp"
#include "hypergrass/plucker.hpp"

using namespace hypergrass;

namespace {

RationalMatrix example_point() {
  return RationalMatrix(
      2, 4, {Rat(1), Rat(2), Rat(1), Rat(1, 3), Rat(1), Rat(3), Rat(2), Rat(1)});
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-2") == Rat(-2));
  CHECK(parse_rational("+5") == Rat(5));
  CHECK(parse_rational("0/7") == 0);
  CHECK(parse_rational("2/4") == Rat(1, 2));
  CHECK(rational_str(Rat(1, 3)) == "1/3");
  CHECK(rational_str(Rat(4)) == "4");
  CHECK(rational_str(Rat(-2, 6)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), error);
  CHECK_THROWS_AS(parse_rational("a"), error);
  CHECK_THROWS_AS(parse_rational(""), error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), error);
}

TEST_CASE("matrix indexing, minors and rank") {
  const auto A = example_point();
  CHECK(A.k() == 2);
  CHECK(A.n() == 4);
  CHECK(A.at(0, 1) == 1);
  CHECK(A.at(0, 4) == Rat(1, 3));
  CHECK(A.at(1, 2) == 3);

  CHECK(A.minor_det(KSubset(4, {1, 2})) == 1);
  CHECK(A.minor_det(KSubset(4, {1, 3})) == 1);
  CHECK(A.minor_det(KSubset(4, {1, 4})) == Rat(2, 3));
  CHECK(A.minor_det(KSubset(4, {2, 3})) == 1);
  CHECK(A.minor_det(KSubset(4, {2, 4})) == 1);
  CHECK(A.minor_det(KSubset(4, {3, 4})) == Rat(1, 3));
  CHECK(A.rank() == 2);

  RationalMatrix B(2, 4);
  for (int c = 1; c <= 4; ++c) {
    B.at(0, c) = c;
    B.at(1, c) = 2 * c;
  }
  CHECK(B.rank() == 1);
  CHECK(B.minor_det(KSubset(4, {1, 3})) == 0);

  CHECK_THROWS_AS(A.at(2, 1), error);
  CHECK_THROWS_AS(A.at(0, 0), error);
  CHECK_THROWS_AS(A.at(0, 5), error);
  CHECK_THROWS_AS(A.minor_det(KSubset(4, {1})), error);
  CHECK_THROWS_AS(A.minor_det(KSubset(5, {1, 2})), error);
  CHECK_THROWS_AS(RationalMatrix(2, 4, {Rat(1)}), error);
}

TEST_CASE("column scaling multiplies the minors that use the column") {
  auto A = example_point();
  const Rat before = A.minor_det(KSubset(4, {1, 3}));
  const Rat untouched = A.minor_det(KSubset(4, {2, 4}));
  A.scale_column(3, Rat(5, 7));
  CHECK(A.minor_det(KSubset(4, {1, 3})) == before * Rat(5, 7));
  CHECK(A.minor_det(KSubset(4, {2, 4})) == untouched);
  CHECK_THROWS_AS(A.scale_column(0, Rat(1)), error);
}

TEST_CASE("sampled points are deterministic and totally positive") {
  for (const auto& [k, n] :
       std::vector<std::pair<int, int>>{{2, 6}, {3, 6}, {3, 8}, {4, 8}}) {
    const auto A = sample_positive_point(k, n, 42);
    const auto B = sample_positive_point(k, n, 42);
    CHECK(A == B);
    CHECK(is_totally_positive_point(A));
    const auto C = sample_positive_point(k, n, 43);
    CHECK_FALSE(A == C);
  }
  RationalMatrix flat(2, 4);
  for (int c = 1; c <= 4; ++c) flat.at(0, c) = flat.at(1, c) = 1;
  CHECK_FALSE(is_totally_positive_point(flat));
}

TEST_CASE("twisted rotation shifts every minor's column set") {
  const auto A = sample_positive_point(3, 6, 7);
  for (int s : {0, 1, 2, 5, 6, 11}) {
    const auto R = twisted_rotate(A, s);
    CHECK(is_totally_positive_point(R));
    for (const auto& I : all_ksubsets(6, 3))
      CHECK(R.minor_det(I) == A.minor_det(I.rotated(s)));
  }
}

TEST_CASE("three-term exchange identity on sampled points") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto A = sample_positive_point(2, 4, seed);
    CHECK(A.minor_det(KSubset(4, {1, 3})) * A.minor_det(KSubset(4, {2, 4})) ==
          A.minor_det(KSubset(4, {1, 2})) * A.minor_det(KSubset(4, {3, 4})) +
              A.minor_det(KSubset(4, {1, 4})) *
                  A.minor_det(KSubset(4, {2, 3})));
  }
}

TEST_CASE("plucker_all collects every maximal minor exactly") {
  const auto A = sample_positive_point(2, 5, 3);
  const auto P = plucker_all(A);
  CHECK(P.exact);
  CHECK(P.power == 1);
  CHECK(P.values.size() == 10);
  for (const auto& I : all_ksubsets(5, 2)) CHECK(P.value(I) == A.minor_det(I));
  CHECK(P.all_positive());
  CHECK_THROWS_AS(P.value(KSubset(5, {1, 2, 3})), error);
  CHECK_THROWS_AS(P.ball(KSubset(5, {1, 2})), error);  // exact mode only
}

TEST_CASE("arrangement extraction groups equal values in increasing order") {
  const auto arr = extract_arrangement(plucker_all(example_point()));
  REQUIRE(arr.blocks.size() == 3);
  CHECK(arr.block_values[0] == Rat(1, 3));
  CHECK(arr.block_values[1] == Rat(2, 3));
  CHECK(arr.block_values[2] == Rat(1));
  CHECK(arr.blocks[0] == std::vector<KSubset>{KSubset(4, {3, 4})});
  CHECK(arr.blocks[1] == std::vector<KSubset>{KSubset(4, {1, 4})});
  CHECK(arr.blocks[2] ==
        std::vector<KSubset>({KSubset(4, {1, 2}), KSubset(4, {1, 3}),
                              KSubset(4, {2, 3}), KSubset(4, {2, 4})}));
  CHECK(arr.block_of(KSubset(4, {3, 4})) == 0);
  CHECK(arr.block_of(KSubset(4, {1, 3})) == 2);
  CHECK(arr.top() == arr.blocks[2]);
  CHECK_THROWS_AS(arr.block_of(KSubset(5, {1, 2})), error);
}

TEST_CASE("sorted products dominate unsorted products on positive points") {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto P = plucker_all(sample_positive_point(k, n, seed));
      CHECK(skandera_check(P).empty());
    }
}

TEST_CASE("deterministic PRNG: reproducible, bounded, seed-sensitive") {
  Rng a(123), b(123), c(124);
  bool diff = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) diff = true;
  }
  CHECK(diff);
  Rng r(9);
  CHECK(r.below(1) == 0);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK_THROWS_AS(r.below(0), error);
}

TEST_CASE("interval scalars: exactness, arithmetic, comparisons") {
  const int bits = 128;
  const auto third = Ball::from_rational(Rat(1, 3), bits);
  const auto half = Ball::from_rational(Rat(1, 2), bits);
  CHECK(third.certainly_positive());
  CHECK_FALSE(Ball::exact_zero(bits).certainly_positive());
  CHECK(Ball::exact_one(bits).exact());
  CHECK_FALSE(third.exact());  // 1/3 is not a binary fraction

  auto cmp = third.compare(half);
  REQUIRE(cmp.has_value());
  CHECK(*cmp == -1);
  cmp = half.compare(third);
  REQUIRE(cmp.has_value());
  CHECK(*cmp == 1);
  CHECK(Ball::exact_one(bits).compare(Ball::exact_one(bits)) == 0);

  // (1/3 + 1/2) * 6 = 5, certified within the enclosure.
  const auto sum = third + half;
  const auto scaled = sum * Ball::from_rational(Rat(6), bits);
  const auto five = Ball::from_rational(Rat(5), bits);
  const auto gap = scaled - five;
  CHECK_FALSE(gap.certainly_positive());
  CHECK_FALSE(gap.neg().certainly_positive());

  // log/exp round trip stays consistent with the original enclosure.
  const auto x = Ball::from_rational(Rat(7, 2), bits);
  const auto y = x.log().exp();
  const auto d = y - x;
  CHECK_FALSE(d.certainly_positive());
  CHECK_FALSE(d.neg().certainly_positive());
  CHECK_THROWS_AS(Ball::exact_zero(bits).log(), error);
}
