#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "seminf/rng.hpp"
#include "seminf/rook.hpp"

using namespace seminf;
using namespace seminf::testing;

namespace {

PartialInjection random_injection(Rng& rng, int m) {
  // Random permutation, then keep each column with probability 1/2.
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i;
  for (int i = m - 1; i > 0; --i)
    std::swap(rows[i], rows[rng.below(i + 1)]);
  std::vector<int> image(m, PartialInjection::kUndefined);
  for (int j = 0; j < m; ++j)
    if (rng.below(2) == 0) image[j] = rows[j];
  return PartialInjection::from_map(std::move(image));
}

MapInj to_mapinj(const PartialInjection& p) {
  MapInj out;
  for (int j = 0; j < p.dimension(); ++j)
    if (p.defined(j)) out[j] = p.apply(j);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("rook");

TEST_CASE("matrix units compose like the presentation says") {
  const PartialInjection e12 = matrix_unit(2, 1, 2);
  const PartialInjection e21 = matrix_unit(2, 2, 1);
  const PartialInjection e11 = matrix_unit(2, 1, 1);
  CHECK(compose(e12, e21) == e11);
  CHECK(compose(e12, e12).is_empty_map());
  CHECK(compose(compose(e12, e21), e12) == e12);
}

TEST_CASE("the empty map is absorbing") {
  const PartialInjection zero(5);
  const PartialInjection c1 = ck_generator(2, 1);
  CHECK(compose(c1, zero).is_empty_map());
  CHECK(compose(zero, c1).is_empty_map());
}

TEST_CASE("c1 squares to zero in dimension 5") {
  const PartialInjection c1 = ck_generator(2, 1);
  CHECK(compose(c1, c1).is_empty_map());
}

TEST_CASE("transpose basics") {
  CHECK(transpose(matrix_unit(2, 1, 2)) == matrix_unit(2, 2, 1));
  const PartialInjection id = PartialInjection::identity(4);
  CHECK(transpose(id) == id);

  // c1 . c1^T is the partial identity on rows {2, 3}.
  const PartialInjection c1 = ck_generator(2, 1);
  const PartialInjection p = compose(c1, transpose(c1));
  CHECK(p.pairs() == std::vector<std::pair<int, int>>{{2, 2}, {3, 3}});
}

TEST_CASE("transpose is an involutive anti-automorphism") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const PartialInjection p = random_injection(rng, 6);
    const PartialInjection q = random_injection(rng, 6);
    CHECK(transpose(transpose(p)) == p);
    CHECK(compose(compose(p, transpose(p)), p) == p);
    CHECK(transpose(compose(p, q)) == compose(transpose(q), transpose(p)));
  }
}

TEST_CASE("matrix encoding round-trips and products agree with 0-1 arithmetic") {
  Rng rng(11);
  for (int m : {2, 5, 7}) {
    for (int round = 0; round < 1000; ++round) {
      const PartialInjection p = random_injection(rng, m);
      const PartialInjection q = random_injection(rng, m);
      CHECK(PartialInjection::from_matrix(p.to_matrix()) == p);
      CHECK(compose(p, q).to_matrix() ==
            matmul01(p.to_matrix(), q.to_matrix()));
      CHECK(transpose(p).to_matrix() == mattrans(p.to_matrix()));
    }
  }
}

TEST_CASE("from_matrix rejects non-rook matrices") {
  CHECK_THROWS_AS(PartialInjection::from_matrix({{1, 1}, {0, 0}}),
                  OverlapError);
  CHECK_THROWS_AS(PartialInjection::from_matrix({{1, 0}, {1, 0}}),
                  OverlapError);
  CHECK_THROWS_AS(PartialInjection::from_matrix({{2, 0}, {0, 0}}),
                  BadIndexError);
  CHECK_THROWS_AS(PartialInjection::from_matrix({{1, 0}}),
                  DimensionMismatchError);
}

TEST_CASE("matrix_unit and unite") {
  const PartialInjection u = matrix_unit(5, 2, 1);
  CHECK(u.pairs() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(compose(matrix_unit(5, 3, 3), matrix_unit(5, 3, 3)) ==
        matrix_unit(5, 3, 3));
  CHECK(unite(matrix_unit(5, 2, 1), matrix_unit(5, 3, 4)) ==
        ck_generator(2, 1));
  CHECK_THROWS_AS(matrix_unit(2, 0, 1), BadIndexError);
  CHECK_THROWS_AS(matrix_unit(2, 1, 3), BadIndexError);
  CHECK_THROWS_AS(unite(matrix_unit(3, 1, 1), matrix_unit(3, 2, 1)),
                  OverlapError);
  CHECK_THROWS_AS(unite(matrix_unit(3, 1, 1), matrix_unit(3, 1, 2)),
                  OverlapError);
}

TEST_CASE("ck_generator matches the displayed matrices") {
  // n = 2: c1 has ones at (2,1) and (3,4); c2 at (3,2) and (4,5).
  CHECK(ck_generator(2, 1).pairs() ==
        std::vector<std::pair<int, int>>{{1, 2}, {4, 3}});
  CHECK(ck_generator(2, 2).pairs() ==
        std::vector<std::pair<int, int>>{{2, 3}, {5, 4}});
  CHECK(ck_generator(2, 1).dimension() == 5);
  // n = 3, k = 1: dimension 7, ones at (2,1) and (4,5).
  CHECK(ck_generator(3, 1).pairs() ==
        std::vector<std::pair<int, int>>{{1, 2}, {5, 4}});
  CHECK(ck_generator(3, 1).dimension() == 7);
  CHECK_THROWS_AS(ck_generator(2, 3), BadIndexError);
  CHECK_THROWS_AS(ck_generator(2, 0), BadIndexError);
  // n = 1 makes the two units overlap in row 2.
  CHECK_THROWS_AS(ck_generator(1, 1), OverlapError);
}

TEST_CASE("closure of the 2x2 matrix units") {
  const std::vector<PartialInjection> gens = {matrix_unit(2, 1, 2),
                                              matrix_unit(2, 2, 1)};
  ClosureOptions opt;
  opt.with_inverses = true;
  const GeneratedAlgebra five = generate_closure(gens, opt);
  CHECK(five.base.size() == 5);

  opt.adjoin_identity = true;
  const GeneratedAlgebra six = generate_closure(gens, opt);
  CHECK(six.base.size() == 6);
  CHECK(six.base.has_inv());
}

TEST_CASE("closure of the identity alone") {
  const GeneratedAlgebra one =
      generate_closure({PartialInjection::identity(3)});
  CHECK(one.base.size() == 1);
  CHECK(one.base.elements == std::vector<std::string>{"g1"});
  CHECK(one.base.product(0, 0) == 0);
}

TEST_CASE("closure respects the element budget") {
  ClosureOptions opt;
  opt.budget = 10;
  CHECK_THROWS_AS(generate_closure({ck_generator(2, 1), ck_generator(2, 2)},
                                   opt),
                  ClosureBudgetError);
}

TEST_CASE("closure is insensitive to generator order") {
  const std::vector<PartialInjection> gens = {ck_generator(2, 1),
                                              ck_generator(2, 2)};
  const std::vector<PartialInjection> swapped = {ck_generator(2, 2),
                                                 ck_generator(2, 1)};
  const GeneratedAlgebra a = generate_closure(gens);
  const GeneratedAlgebra b = generate_closure(swapped);
  REQUIRE(a.base.size() == b.base.size());

  std::set<PartialInjection> sa(a.reps.begin(), a.reps.end());
  std::set<PartialInjection> sb(b.reps.begin(), b.reps.end());
  CHECK(sa == sb);

  // The tables are isomorphic under the encoding bijection.
  std::vector<int> a_to_b(a.base.size());
  for (int i = 0; i < a.base.size(); ++i) {
    const auto it = std::find(b.reps.begin(), b.reps.end(), a.reps[i]);
    REQUIRE(it != b.reps.end());
    a_to_b[i] = static_cast<int>(it - b.reps.begin());
  }
  for (int x = 0; x < a.base.size(); ++x)
    for (int y = 0; y < a.base.size(); ++y)
      CHECK(a_to_b[a.base.product(x, y)] ==
            b.base.product(a_to_b[x], a_to_b[y]));
}

TEST_CASE("b21 satisfies its presentation") {
  const GeneratedAlgebra b21 = brandt_b21();
  const FiniteAlgebra& s = b21.base;
  REQUIRE(s.size() == 6);
  const int z = 0, e12 = 2, e21 = 3;
  CHECK(s.product(s.product(e12, e21), e12) == e12);
  CHECK(s.product(s.product(e21, e12), e21) == e21);
  CHECK(s.product(e12, e12) == z);
  CHECK(s.product(e21, e21) == z);
  CHECK(s.inv == std::vector<int>{0, 1, 3, 2, 4, 5});
  CHECK(b21.generators == std::vector<int>{2, 3});
}

TEST_CASE("generated tables agree with representative composition") {
  for (const GeneratedAlgebra& g : {brandt_b21(), cn(2)}) {
    for (int a = 0; a < g.base.size(); ++a) {
      for (int b = 0; b < g.base.size(); ++b) {
        const PartialInjection prod = compose(g.reps[a], g.reps[b]);
        CHECK(g.reps[g.base.product(a, b)] == prod);
      }
      CHECK(g.reps[g.base.inverse(a)] == transpose(g.reps[a]));
    }
  }
}

TEST_CASE("cn sizes match the naive closure oracle") {
  // Oracle values, frozen: |C_2| = 34, |C_3| = 62.
  for (const auto& [n, expected] : {std::pair{2, 34}, std::pair{3, 62}}) {
    std::vector<MapInj> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(map_ck(n, k));
    const std::set<MapInj> closure = naive_closure(gens);
    CHECK(static_cast<int>(closure.size()) == expected);

    const GeneratedAlgebra c = cn(n);
    CHECK(c.base.size() == expected);

    std::set<MapInj> ours;
    for (const auto& rep : c.reps) ours.insert(to_mapinj(rep));
    CHECK(ours == closure);
  }
}

TEST_CASE("cn contains the zero and is an inverse semigroup") {
  for (int n : {2, 3}) {
    const GeneratedAlgebra c = cn(n);
    bool has_zero = false;
    for (const auto& rep : c.reps) has_zero = has_zero || rep.is_empty_map();
    CHECK(has_zero);
    CHECK(c.base.has_inv());
    CHECK_NOTHROW(inverse_map(c.base));  // unique inverses
    // x^2 = x^3 elementwise
    for (int x = 0; x < c.base.size(); ++x)
      CHECK(c.base.power(x, 2) == c.base.power(x, 3));
  }
}

TEST_CASE("cn rejects n < 2") {
  CHECK_THROWS_AS(cn(1), Error);
  CHECK_THROWS_AS(cn(0), Error);
}

TEST_CASE("mk drops exactly the two generators") {
  for (int n : {2, 3}) {
    const GeneratedAlgebra c = cn(n);
    for (int k = 1; k <= n; ++k) {
      const std::vector<int> subset = mk_indices(c, k);
      CHECK(static_cast<int>(subset.size()) == c.base.size() - 2);
      CHECK(is_subuniverse(c.base, subset, true));
      const int ck = c.generators[k - 1];
      CHECK(std::find(subset.begin(), subset.end(), ck) == subset.end());
      CHECK(std::find(subset.begin(), subset.end(), c.base.inverse(ck)) ==
            subset.end());

      const FiniteAlgebra m = mk_algebra(c, k);
      CHECK(m.size() == c.base.size() - 2);
      CHECK_NOTHROW(inverse_map(m));
    }
    CHECK_THROWS_AS(mk_indices(c, 0), BadIndexError);
    CHECK_THROWS_AS(mk_indices(c, n + 1), BadIndexError);
  }
}

TEST_SUITE_END();
