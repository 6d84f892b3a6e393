#include <vector>

#include "doctest.h"
#include "hypergrass/circuits.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/plucker.hpp"
#include "hypergrass/torus.hpp"

using namespace hypergrass;

namespace {

RationalMatrix example_point() {
  return RationalMatrix(
      2, 4, {Rat(1), Rat(2), Rat(1), Rat(1, 3), Rat(1), Rat(3), Rat(2), Rat(1)});
}

Rat pow_rat(Rat base, long e) {
  Rat out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

TEST_CASE("exact rational matrix inversion") {
  const auto id = invert_rational({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  REQUIRE(id.has_value());
  CHECK((*id)[0][0] == 1);
  CHECK((*id)[0][1] == 0);

  const auto inv = invert_rational({{Rat(2), Rat(1)}, {Rat(5), Rat(3)}});
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == 3);
  CHECK((*inv)[0][1] == -1);
  CHECK((*inv)[1][0] == -5);
  CHECK((*inv)[1][1] == 2);

  CHECK_FALSE(invert_rational({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).has_value());
}

TEST_CASE("normalizing the 2x4 example against {12,13,14,24}") {
  const auto J = parse_collection("1,2;1,3;1,4;2,4", 4);
  const auto [scaling, P] = torus_normalize(example_point(), J);

  CHECK(P.exact);
  CHECK(P.power == 2);
  CHECK(scaling.denominator_clearing() == 2);
  const auto alpha2 = scaling.alpha_powered(2);
  CHECK(alpha2 ==
        std::vector<Rat>({Rat(3, 2), Rat(2, 3), Rat(2, 3), Rat(3, 2)}));

  for (const auto& m : J.members()) CHECK(P.value(m) == 1);
  CHECK(P.value(KSubset(4, {3, 4})) == Rat(1, 9));
  CHECK(P.value(KSubset(4, {2, 3})) == Rat(4, 9));

  const auto arr = extract_arrangement(P);
  REQUIRE(arr.blocks.size() == 3);
  CHECK(arr.power == 2);
  CHECK(arr.blocks[0] == std::vector<KSubset>{KSubset(4, {3, 4})});
  CHECK(arr.blocks[1] == std::vector<KSubset>{KSubset(4, {2, 3})});
  CHECK(arr.top() == J.members());
}

TEST_CASE("the scaling satisfies its defining equations exactly") {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    const auto facets = enumerate_maximal_sorted(k, n);
    const auto A = sample_positive_point(k, n, 11);
    const auto base = plucker_all(A);
    for (std::size_t f = 0; f < facets.size(); f += 7) {
      const auto& J = facets[f];
      const auto [scaling, P] = torus_normalize(A, J);
      const long D = P.power;
      CHECK(scaling.n == n);
      CHECK(D >= 1);
      const auto alphaD = scaling.alpha_powered(D);

      // Every minor transforms by the product of its column scalings.
      for (const auto& I : all_ksubsets(n, k)) {
        Rat expect = pow_rat(base.value(I), D);
        for (int e : I.elements()) expect *= alphaD[e - 1];
        CHECK(P.value(I) == expect);
      }
      // Members land exactly on 1, everything else strictly below.
      for (const auto& I : all_ksubsets(n, k)) {
        if (J.contains(I))
          CHECK(P.value(I) == 1);
        else
          CHECK(P.value(I) < 1);
      }
      CHECK(P.all_positive());
    }
  }
}

TEST_CASE("denominator clearing is the least usable power") {
  const auto J = parse_collection("1,2;1,3;1,4;1,5;2,5;2,6", 6);
  const auto A = sample_positive_point(2, 6, 5);
  const auto [scaling, P] = torus_normalize(A, J);
  const long D = scaling.denominator_clearing();
  CHECK(P.power % D == 0);
  const auto alphaD = scaling.alpha_powered(P.power);
  CHECK(static_cast<int>(alphaD.size()) == 6);
  // A power that fails to clear the exponents is rejected.
  if (D > 1) CHECK_THROWS_AS(scaling.alpha_powered(1), error);
}

TEST_CASE("float mode agrees with exact mode and pins members to one") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto A = sample_positive_point(2, 5, seed);
    const auto J = enumerate_maximal_sorted(2, 5)[seed % 11];
    const auto Pe = torus_normalize(A, J).second;
    const auto [sf, Pf] = torus_normalize(A, J, true);

    CHECK_FALSE(Pf.exact);
    for (const auto& m : J.members()) {
      CHECK(Pf.ball(m).exact());
      CHECK(Pf.ball(m).compare(Ball::exact_one(Pf.ball(m).bits())) == 0);
    }
    for (const auto& I : all_ksubsets(5, 2))
      if (!J.contains(I)) {
        const auto c = Pf.ball(I).compare(Ball::exact_one(Pf.ball(I).bits()));
        REQUIRE(c.has_value());
        CHECK(*c == -1);
      }

    const auto ae = extract_arrangement(Pe);
    const auto af = extract_arrangement(Pf);
    CHECK(ae.blocks == af.blocks);

    // The float scaling satisfies the defining equations within enclosures.
    const auto alphas = sf.alpha_float(256);
    for (std::size_t r = 0; r < J.members().size(); ++r) {
      auto prod = Ball::from_rational(sf.bases[r], 256);
      for (int e : J.members()[r].elements()) prod = prod * alphas[e - 1];
      const auto gap = prod - Ball::exact_one(256);
      CHECK_FALSE(gap.certainly_positive());
      CHECK_FALSE(gap.neg().certainly_positive());
    }
  }
}

TEST_CASE("normalization validates its inputs") {
  const auto A = example_point();
  CHECK_THROWS_AS(torus_normalize(A, parse_collection("1,2;1,3", 4)), error);
  CHECK_THROWS_AS(torus_normalize(A, parse_collection("1,2;1,3;1,4;2,4", 5)),
                  error);

  RationalMatrix flat(2, 4);
  for (int c = 1; c <= 4; ++c) {
    flat.at(0, c) = 1;
    flat.at(1, c) = 1;
  }
  CHECK_THROWS_AS(
      torus_normalize(flat, parse_collection("1,2;1,3;1,4;2,4", 4)), error);
}
