#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hypergrass/circuits.hpp"
#include "hypergrass/errors.hpp"
#include "hypergrass/ksubset.hpp"
#include "hypergrass/sorting.hpp"

using namespace hypergrass;

namespace {

bool window_sums_are_sort_images(const KSubset& I, const KSubset& J) {
  // For every interval [i,j], the two merge halves must land on the floor
  // and ceiling of the average of the interval sums of I and J.
  const auto s = sort_merge(I, J);
  const int n = I.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const int alpha = I.interval_sum(i, j);
      const int beta = J.interval_sum(i, j);
      const int lo = (alpha + beta) / 2;            // floor
      const int hi = (alpha + beta) - lo;           // ceiling
      int a = s.first.interval_sum(i, j);
      int b = s.second.interval_sum(i, j);
      if (a > b) std::swap(a, b);
      if (a != lo || b != hi) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("sort_merge splits the merged multiset by alternating positions") {
  const KSubset I(6, {1, 3, 5}), J(6, {2, 4, 6});
  const auto s = sort_merge(I, J);
  CHECK(s.first == I);
  CHECK(s.second == J);
  CHECK(is_sorted_pair(I, J));

  const KSubset A(4, {1, 4}), B(4, {2, 3});
  const auto t = sort_merge(A, B);
  CHECK(t.first == KSubset(4, {1, 3}));
  CHECK(t.second == KSubset(4, {2, 4}));
  CHECK_FALSE(is_sorted_pair(A, B));

  // A pair with repeated values in the merge.
  const KSubset C(5, {1, 2}), D(5, {2, 5});
  const auto u = sort_merge(C, D);
  CHECK(u.first == KSubset(5, {1, 2}));
  CHECK(u.second == KSubset(5, {2, 5}));
  CHECK(is_sorted_pair(C, D));
}

TEST_CASE("sort_merge validates its arguments") {
  CHECK_THROWS_AS(sort_merge(KSubset(4, {1, 2}), KSubset(5, {1, 2})), error);
  CHECK_THROWS_AS(sort_merge(KSubset(4, {1, 2}), KSubset(4, {1, 2, 3})),
                  error);
}

TEST_CASE("a set is sorted with itself and sortedness is symmetric") {
  const auto subsets = all_ksubsets(6, 3);
  for (const auto& I : subsets) CHECK(is_sorted_pair(I, I));
  for (const auto& I : subsets)
    for (const auto& J : subsets)
      CHECK(is_sorted_pair(I, J) == is_sorted_pair(J, I));
}

TEST_CASE("sorting a pair is idempotent") {
  const auto subsets = all_ksubsets(6, 3);
  for (const auto& I : subsets)
    for (const auto& J : subsets) {
      const auto s = sort_merge(I, J);
      CHECK(is_sorted_pair(s.first, s.second));
      const auto t = sort_merge(s.first, s.second);
      CHECK(t.first == s.first);
      CHECK(t.second == s.second);
    }
}

TEST_CASE("collection sortedness agrees with the chain characterisation") {
  // All pairs at (2,6).
  const auto pairs = all_ksubsets(6, 2);
  for (const auto& I : pairs)
    for (const auto& J : pairs) {
      if (!(I < J)) continue;
      const std::vector<KSubset> fam{I, J};
      CHECK(is_sorted_collection(fam) == is_sorted_collection_chain(fam));
    }
  // All triples at (3,5).
  const auto triples = all_ksubsets(5, 3);
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b)
      for (std::size_t c = b + 1; c < triples.size(); ++c) {
        const std::vector<KSubset> fam{triples[a], triples[b], triples[c]};
        CHECK(is_sorted_collection(fam) == is_sorted_collection_chain(fam));
      }
  // Every enumerated maximal collection passes both.
  for (const auto& C : enumerate_maximal_sorted(3, 6)) {
    CHECK(is_sorted_collection(C.members()));
    CHECK(is_sorted_collection_chain(C.members()));
  }
}

TEST_CASE("k=2 sortedness equals the crossing-chord criterion") {
  const auto pairs = all_ksubsets(6, 2);
  for (const auto& I : pairs)
    for (const auto& J : pairs)
      CHECK(is_thrackle({I, J}) == is_sorted_collection({I, J}));
  // Chords 13 and 24 cross; 12 and 34 do not.
  CHECK(is_thrackle({KSubset(4, {1, 3}), KSubset(4, {2, 4})}));
  CHECK_FALSE(is_thrackle({KSubset(4, {1, 2}), KSubset(4, {3, 4})}));
}

TEST_CASE("weak separation: definition cases and symmetry") {
  CHECK(is_weakly_separated_pair(KSubset(4, {1, 2}), KSubset(4, {3, 4})));
  CHECK(is_weakly_separated_pair(KSubset(4, {1, 4}), KSubset(4, {2, 3})));
  CHECK_FALSE(is_weakly_separated_pair(KSubset(4, {1, 3}), KSubset(4, {2, 4})));
  CHECK(is_weakly_separated_pair(KSubset(6, {1, 2, 4}), KSubset(6, {1, 2, 4})));
  const auto pairs = all_ksubsets(6, 2);
  for (const auto& I : pairs)
    for (const auto& J : pairs)
      CHECK(is_weakly_separated_pair(I, J) == is_weakly_separated_pair(J, I));
}

TEST_CASE("for disjoint chords, sorted means crossing means not weakly separated") {
  const auto pairs = all_ksubsets(6, 2);
  for (const auto& I : pairs)
    for (const auto& J : pairs) {
      if ((I.mask() & J.mask()) != 0) continue;
      CHECK(is_sorted_pair(I, J) == !is_weakly_separated_pair(I, J));
    }
}

TEST_CASE("interval distance shortcut matches the hyperplane-count oracle") {
  for (int k : {2, 3}) {
    const auto subsets = all_ksubsets(6, k);
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        const auto x = I.epsilon(), y = J.epsilon();
        for (int i = 1; i <= 6; ++i)
          for (int j = i; j <= 6; ++j)
            CHECK(d_ij(x, y, i, j) == d_ij_hyperplane_count(x, y, i, j));
      }
  }
}

TEST_CASE("sortedness is equivalent to all interval distances at most 1") {
  const auto subsets = all_ksubsets(6, 3);
  for (const auto& I : subsets)
    for (const auto& J : subsets)
      CHECK(is_sorted_pair(I, J) ==
            (max_interval_distance(I.epsilon(), J.epsilon()) <= 1));
}

TEST_CASE("sort images land on the floor/ceiling interval sums") {
  for (int k : {2, 3}) {
    const auto subsets = all_ksubsets(6, k);
    for (const auto& I : subsets)
      for (const auto& J : subsets) CHECK(window_sums_are_sort_images(I, J));
  }
}

TEST_CASE("in_ball and interval distance basics") {
  const KSubset I(6, {1, 3, 5}), J(6, {2, 4, 6}), K(6, {4, 5, 6});
  CHECK(in_ball(I.epsilon(), I.epsilon(), 0));
  CHECK(in_ball(J.epsilon(), I.epsilon(), 1));
  CHECK_FALSE(in_ball(K.epsilon(), I.epsilon(), 1));
  CHECK(in_ball(K.epsilon(), I.epsilon(),
                max_interval_distance(K.epsilon(), I.epsilon())));

  // Triangle inequality of d_ij over a sample of triples.
  const auto subsets = all_ksubsets(6, 3);
  for (std::size_t a = 0; a < subsets.size(); a += 3)
    for (std::size_t b = 1; b < subsets.size(); b += 4)
      for (std::size_t c = 2; c < subsets.size(); c += 5)
        for (int i = 1; i <= 6; ++i)
          for (int j = i; j <= 6; ++j) {
            const auto &x = subsets[a], &y = subsets[b], &z = subsets[c];
            CHECK(d_ij(x.epsilon(), z.epsilon(), i, j) <=
                  d_ij(x.epsilon(), y.epsilon(), i, j) +
                      d_ij(y.epsilon(), z.epsilon(), i, j));
          }
}

TEST_CASE("interval tools validate their arguments") {
  const auto x = KSubset(4, {1, 2}).epsilon();
  CHECK_THROWS_AS(d_ij(x, x, 0, 2), error);
  CHECK_THROWS_AS(d_ij(x, x, 3, 2), error);
  CHECK_THROWS_AS(d_ij(x, x, 1, 5), error);
  CHECK_THROWS_AS(d_ij(x, KSubset(5, {1, 2}).epsilon(), 1, 2), error);
  CHECK_THROWS_AS(d_ij(EpsilonVector{0, 2, 1, 0}, x, 1, 2), error);
  CHECK_THROWS_AS(in_ball(x, x, -1), error);
}

TEST_CASE("SortedCollection validates and canonicalises") {
  const auto C = parse_collection("2,4;1,2;1,3;1,4", 4);
  CHECK(C.n() == 4);
  CHECK(C.k() == 2);
  CHECK(C.maximal());
  CHECK(C.size() == 4);
  // Canonical member order is lexicographic regardless of input order.
  CHECK(C.members() ==
        std::vector<KSubset>({KSubset(4, {1, 2}), KSubset(4, {1, 3}),
                              KSubset(4, {1, 4}), KSubset(4, {2, 4})}));
  CHECK(C.contains(KSubset(4, {2, 4})));
  CHECK_FALSE(C.contains(KSubset(4, {3, 4})));
  CHECK(C.str() == "{{1,2},{1,3},{1,4},{2,4}}");

  CHECK_THROWS_AS(SortedCollection(4, 2,
                                   {KSubset(4, {1, 2}), KSubset(4, {3, 4})}),
                  error);  // unsorted pair
  CHECK_THROWS_AS(parse_collection("1,2;1,2,3", 4), error);  // mixed k
  CHECK_THROWS_AS(parse_collection("", 4), error);
  CHECK_THROWS_AS(parse_collection("1,9", 4), error);

  const auto partial = parse_collection("1,2;1,3", 4);
  CHECK_FALSE(partial.maximal());
}

TEST_CASE("KSubset round trips through epsilon vectors, masks and strings") {
  const KSubset I(8, {3, 5, 6});
  CHECK(I.k() == 3);
  CHECK(I.elements() == std::vector<int>({3, 5, 6}));
  CHECK(KSubset::from_epsilon(I.epsilon()) == I);
  CHECK(KSubset::from_mask(8, I.mask()) == I);
  CHECK(I.str() == "{3,5,6}");
  CHECK(parse_subset("3,5,6", 8) == I);
  CHECK(parse_subset("{3,5,6}", 8) == I);
  CHECK(I.contains(5));
  CHECK_FALSE(I.contains(4));
  CHECK(I.interval_sum(3, 6) == 3);
  CHECK(I.interval_sum(1, 2) == 0);
  CHECK(I.rotated(2) == KSubset(8, {5, 7, 8}));
  CHECK(I.rotated(8) == I);
  CHECK(I.complement() == KSubset(8, {1, 2, 4, 7, 8}));
  CHECK(I.replaced(6, 1) == KSubset(8, {1, 3, 5}));
  CHECK_THROWS_AS(KSubset(4, {0, 1}), error);
  CHECK_THROWS_AS(KSubset(4, {2, 2}), error);
  CHECK_THROWS_AS(KSubset(4, {5}), error);
  CHECK_THROWS_AS(I.replaced(4, 1), error);
}
