#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "oracle.hpp"
#include "whq_oracle.hpp"
#include "whq/errors.hpp"
#include "whq/generators.hpp"

using namespace whq;

namespace {

const Field Q = Field::rationals();

using Table = std::vector<std::vector<std::size_t>>;

/// S_n from std::next_permutation, (st)(i) = s(t(i)).
Table symmetric_by_hand(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Table t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

bool same_structure(const WeakHopfQuasigroup& a, const WeakHopfQuasigroup& b) {
  return a.unit() == b.unit() && a.mul() == b.mul() && a.counit() == b.counit() && a.comul() == b.comul() &&
         a.antipode() == b.antipode();
}

/// Every reduced Latin square of order n (first row and column the identity), by backtracking.
void latin_squares(std::size_t n, const std::function<bool(const Table&)>& visit) {
  Table t(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::function<bool(std::size_t)> fill = [&](std::size_t cell) -> bool {
    if (cell == n * n) return visit(t);
    const std::size_t r = cell / n, c = cell % n;
    if (r == 0 || c == 0) return fill(cell + 1);
    for (std::size_t v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < c && ok; ++k) ok = t[r][k] != v;
      for (std::size_t k = 0; k < r && ok; ++k) ok = t[k][c] != v;
      if (!ok) continue;
      t[r][c] = v;
      if (fill(cell + 1)) return true;
    }
    t[r][c] = n;
    return false;
  };
  fill(0);
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("cayley tables") {
    CHECK(CayleyTable::symmetric(3).table() == symmetric_by_hand(3));
    CHECK(CayleyTable::symmetric(4).table() == symmetric_by_hand(4));
    const CayleyTable c5 = CayleyTable::cyclic(5);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) CHECK(c5.mul(a, b) == (a + b) % 5);
    CHECK(CayleyTable::symmetric(3).is_group());
    CHECK_THROWS_AS(CayleyTable::make({{0, 1}, {1, 1}}), Error);
    // x * y = -x - y (mod 3) is a quasigroup without identity.
    CHECK_THROWS_AS(CayleyTable::make({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), Error);
    CHECK_THROWS_AS(CayleyTable::make({}), Error);
    const CayleyTable p = CayleyTable::product(CayleyTable::cyclic(2), CayleyTable::cyclic(3));
    CHECK(p.order() == 6);
    CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
  }

  TEST_CASE("Chein double follows its defining rules") {
    const Table g = symmetric_by_hand(3);
    const std::size_t n = g.size();
    auto inv = [&](std::size_t x) {
      for (std::size_t y = 0; y < n; ++y)
        if (g[x][y] == 0) return y;
      return n;
    };
    const CayleyTable m = chein_double(CayleyTable::symmetric(3));
    REQUIRE(m.order() == 2 * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(m.mul(a, b) == g[a][b]);
        CHECK(m.mul(a, n + b) == n + g[b][a]);
        CHECK(m.mul(n + a, b) == n + g[a][inv(b)]);
        CHECK(m.mul(n + a, n + b) == g[inv(b)][a]);
      }
    CHECK_FALSE(m.inverse_property_witness().has_value());
    REQUIRE(m.associativity_witness().has_value());
    // M(G, 2) is a group exactly when G is abelian.
    CHECK(chein_double(CayleyTable::cyclic(3)).is_group());
    CHECK_THROWS_AS(chein_double(m), NotAssociative);
  }

  TEST_CASE("a loop without the inverse property is rejected") {
    std::optional<Table> found;
    latin_squares(5, [&](const Table& t) {
      const CayleyTable c = CayleyTable::make(t);
      if (c.inverse_property_witness()) found = t;
      return found.has_value();
    });
    REQUIRE(found.has_value());
    const CayleyTable loop = CayleyTable::make(*found);
    CHECK_THROWS_AS(loop_algebra(loop, Q), NotIPLoop);
    CHECK_THROWS_AS(group_algebra(loop, Q), Error);
  }

  TEST_CASE("the only loops of order 4 or less are groups") {
    for (std::size_t n = 1; n <= 4; ++n)
      latin_squares(n, [&](const Table& t) {
        CHECK(CayleyTable::make(t).is_group());
        return false;
      });
  }

  TEST_CASE("loop algebra of a group is the group algebra") {
    for (const CayleyTable& g : {CayleyTable::cyclic(4), CayleyTable::symmetric(3)})
      for (const Field& f : {Q, Field::prime(5)}) CHECK(same_structure(loop_algebra(g, f), group_algebra(g, f)));
    CHECK(same_structure(groupoid_algebra(FiniteGroupoid::from_group(CayleyTable::symmetric(3)), Q),
                         group_algebra(CayleyTable::symmetric(3), Q)));
    CHECK_THROWS_AS(group_algebra(chein_double(CayleyTable::symmetric(3)), Q), NotAssociative);
  }

  TEST_CASE("loop algebras satisfy the axioms") {
    for (const char* name : {"chein-s3", "chein-c3", "chein-c4"}) {
      CAPTURE(name);
      const WeakHopfQuasigroup h = named_fixture(name, Q);
      CHECK(check_axioms(h).passed());
      CHECK(oracle::Constants(h).failing().empty());
      CHECK(projections(h).pi_l == compose(h.unit(), h.counit()));
    }
  }

  TEST_CASE("groupoids") {
    const FiniteGroupoid p = FiniteGroupoid::pair(3);
    CHECK(p.arrows() == 9);
    CHECK(p.arrow(1 * 3 + 2).source == 2);
    CHECK(p.arrow(1 * 3 + 2).target == 1);
    CHECK(p.compose(0 * 3 + 1, 1 * 3 + 2) == std::optional<std::size_t>(0 * 3 + 2));
    CHECK_FALSE(p.compose(0 * 3 + 1, 0 * 3 + 2).has_value());
    CHECK(p.inverse(0 * 3 + 2) == 2 * 3 + 0);
    for (std::size_t k : {1, 2, 3}) {
      CHECK(check_axioms(groupoid_algebra(FiniteGroupoid::pair(k), Q)).passed());
      CHECK(check_axioms(groupoid_algebra(FiniteGroupoid::discrete(k), Q)).passed());
    }

    using A = FiniteGroupoid::Arrow;
    using Row = std::vector<std::optional<std::size_t>>;
    CHECK_THROWS_AS(FiniteGroupoid::make(1, {{0, 0}}, {}), InvalidGroupoid);
    CHECK_THROWS_AS(FiniteGroupoid::make(1, {A{0, 1}}, {Row{std::nullopt}}), InvalidGroupoid);
    // One object, two loops whose composites are all the second loop: no identity arrow.
    CHECK_THROWS_AS(FiniteGroupoid::make(1, {A{0, 0}, A{0, 0}}, {Row{1, 1}, Row{1, 1}}), InvalidGroupoid);
    // Undefined composite between composable arrows.
    CHECK_THROWS_AS(FiniteGroupoid::make(1, {A{0, 0}}, {Row{std::nullopt}}), InvalidGroupoid);
    // Z/2 as a groupoid is accepted.
    CHECK_NOTHROW(FiniteGroupoid::make(1, {A{0, 0}, A{0, 0}}, {Row{0, 1}, Row{1, 0}}));
  }

  TEST_CASE("tensor products") {
    const WeakHopfQuasigroup c2 = named_fixture("c2", Q);
    const TensorCandidate t = tensor_whq(c2, c2);
    CHECK(t.report.passed());
    CHECK(same_structure(t.structure, group_algebra(CayleyTable::product(CayleyTable::cyclic(2), CayleyTable::cyclic(2)), Q)));
    const TensorCandidate mixed = tensor_whq(named_fixture("pair-2", Q), named_fixture("chein-c3", Q));
    CHECK(mixed.report.passed());
    CHECK(mixed.structure.dim() == 24);
    CHECK_THROWS_AS(tensor_whq(c2, named_fixture("c2", Field::prime(3))), FieldMismatch);
  }

  TEST_CASE("named fixtures") {
    CHECK(named_fixture("s3", Q).dim() == 6);
    CHECK(named_fixture("chein-s3", Q).dim() == 12);
    CHECK(named_fixture("pair-2", Q).dim() == 4);
    const WeakHopfQuasigroup f = named_fixture("flagship", Q);
    CHECK(f.dim() == 24);
    CHECK(associativity_witness(f).has_value());
    CHECK(base_object(f, Side::L).dim() == 2);
    CHECK_THROWS_AS(named_fixture("s7", Q), Error);
    CHECK_THROWS_AS(named_fixture("bogus", Q), Error);
  }
}
