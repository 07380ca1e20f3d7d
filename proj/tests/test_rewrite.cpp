#include "braidlie/errors.hpp"
#include "braidlie/rewrite.hpp"
#include "doctest.h"

using namespace braidlie;

namespace {

TablePtr single_gen(long m) {
  auto G = AbelianGroup::make({m});
  return GeneratorTable::make(G, {"x"}, {G->element({1})});
}

GradedPoly power(const GradedPoly& p, int n) {
  auto acc = GradedPoly::unit(p.table());
  for (int i = 0; i < n; ++i) acc = acc * p;
  return acc;
}

}  // namespace

TEST_CASE("k[x]/(x^2)") {
  auto table = single_gen(2);
  auto x = GradedPoly::generator(table, 0);
  auto A = quotient_present(table, {x * x}, 6);
  CHECK(A.stabilized());
  CHECK(A.finite_dimensional());
  CHECK(A.dimension() == 2);
  CHECK(A.normal_form(x * x).is_zero());
  auto b = A.full_basis();
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Word{});
  CHECK(b[1] == Word{0});
}

TEST_CASE("k[x]/(x^n) has dimension n") {
  for (int n = 2; n <= 5; ++n) {
    auto table = single_gen(n);
    auto x = GradedPoly::generator(table, 0);
    auto A = quotient_present(table, {power(x, n)}, 2 * n);
    CHECK(A.stabilized());
    CHECK(A.dimension() == n);
    CHECK(A.normal_form(x * power(x, n - 1)).is_zero());
    CHECK(A.normal_form(power(x, n - 1)) == power(x, n - 1));
  }
}

TEST_CASE("free algebra basis enumeration") {
  auto G = AbelianGroup::make({2});
  auto table = GeneratorTable::make(G, {"x", "y"}, {G->element({1}), G->element({1})});
  auto A = quotient_present(table, {}, 4);
  CHECK(A.stabilized());
  CHECK(!A.finite_dimensional());
  auto b = A.basis(2);
  REQUIRE(b.size() == 7);  // 1, x, y, xx, xy, yx, yy
  CHECK(b[0] == Word{});
  CHECK(b[3] == Word{0, 0});
  CHECK(b[6] == Word{1, 1});
  CHECK_THROWS_AS(A.dimension(), InfiniteDimensional);
}

TEST_CASE("relations must be homogeneous and within the bound") {
  auto table = single_gen(2);
  auto x = GradedPoly::generator(table, 0);
  CHECK_THROWS_AS(quotient_present(table, {x + x * x}, 6), InhomogeneousRelation);
  CHECK_THROWS_AS(quotient_present(table, {power(x, 4)}, 3), Error);
  // A nonzero constant relation collapses the ring.
  CHECK_THROWS_AS(
      quotient_present(table, {GradedPoly::unit(table)}, 4), OrientationFailure);
}

TEST_CASE("normal form properties") {
  auto table = single_gen(3);
  auto x = GradedPoly::generator(table, 0);
  auto A = quotient_present(table, {power(x, 3)}, 6);

  // idempotent
  auto p = power(x, 2) + CycScalar::from_int(2) * power(x, 4);
  CHECK(A.normal_form(A.normal_form(p)) == A.normal_form(p));
  CHECK(A.normal_form(p) == power(x, 2));

  // compatible with multiplication
  auto q = x + power(x, 2);
  CHECK(A.normal_form(A.normal_form(p) * A.normal_form(q)) == A.normal_form(p * q));

  // overflow is reported, never silently truncated
  CHECK_THROWS_AS(A.normal_form(power(x, 7)), DegreeOverflow);
}

TEST_CASE("example 5(3) presentation completes") {
  // k<x,y> / (x^3, y^3, xy^2 + yxy + y^2x) over C3, deg x = deg y = 1.
  auto G = AbelianGroup::make({3});
  auto table = GeneratorTable::make(G, {"x", "y"}, {G->element({1}), G->element({1})});
  auto x = GradedPoly::generator(table, 0), y = GradedPoly::generator(table, 1);
  auto rel = x * y * y + y * x * y + y * y * x;
  auto A = quotient_present(table, {x * x * x, y * y * y, rel}, 8);
  CHECK(A.stabilized());

  // The mixed relation orients with leading word yyx; its reduction lands
  // strictly below yyx in the word order, and yxy itself is irreducible.
  auto nf = A.normal_form(y * y * x);
  REQUIRE(!nf.is_zero());
  WordOrder lt;
  for (const auto& [w, c] : nf.terms()) CHECK(lt(w, Word{1, 1, 0}));
  CHECK(nf == -(x * y * y) - y * x * y);
  CHECK(A.normal_form(y * x * y) == y * x * y);

  // Completion found the genuine length-5 consequence: yxyxx rewrites.
  CHECK(A.rules().count(Word{1, 0, 1, 0, 0}) == 1);

  // x^3, y^3,and the mixed relation all vanish.
  CHECK(A.normal_form(x * x * x).is_zero());
  CHECK(A.normal_form(y * y * y).is_zero());
  CHECK(A.normal_form(rel).is_zero());

  // Rewriting preserves degree (rules are homogeneous).
  auto mixed = x * y * x * y;
  CHECK(*A.normal_form(mixed).homogeneous_degree() == *mixed.homogeneous_degree());
}

TEST_CASE("completion handles equal-length reordering rules") {
  // t x = c x t rules orient because tx > xt in length-then-lex.
  auto G = AbelianGroup::make({2});
  auto table = GeneratorTable::make(G, {"x", "t"}, {G->element({1}), G->element({0})});
  auto x = GradedPoly::generator(table, 0), t = GradedPoly::generator(table, 1);
  auto A = quotient_present(
      table, {x * x, t * t - GradedPoly::unit(table),
              t * x + x * t},  // t x = -x t
      6);
  CHECK(A.stabilized());
  CHECK(A.finite_dimensional());
  CHECK(A.dimension() == 4);  // 1, x, t, xt
  CHECK(A.normal_form(t * x) == -(x * t));
}
