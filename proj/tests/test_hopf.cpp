#include "braidlie/errors.hpp"
#include "braidlie/hopf.hpp"
#include "braidlie/text.hpp"
#include "doctest.h"

using namespace braidlie;

namespace {

// P = P_{t1} = span{x}, n-fold bracket zero, chi(t1,t1) = zeta_n: the
// enveloping algebra is k[x]/(x^n).
HopfInstance nilpotent_line(long n, int bound) {
  auto G = AbelianGroup::make({n});
  auto chi = Bicharacter::make(G, n, {{1}});
  auto t1 = G->element({1});
  auto table = GeneratorTable::make(G, {"x"}, {t1});
  LiePresentation P(chi, table);
  ZetaFamily fam{chi(t1, t1), std::vector<GroupElement>((size_t)n, t1)};
  P.set_entry(fam, std::vector<int>((size_t)n, 0), GradedPoly(table));
  P.symmetrize();
  return enveloping_build(P, bound);
}

GradedPoly xpow(const TablePtr& table, int k) {
  return GradedPoly::from_word(table, Word((size_t)k, 0));
}

}  // namespace

TEST_CASE("enveloping algebra of the commutative C2 line is k[x]/(x^2)") {
  auto H = nilpotent_line(2, 6);
  CHECK(H.carrier.finite_dimensional());
  CHECK(H.carrier.dimension() == 2);
  auto x = GradedPoly::generator(H.carrier.table(), 0);
  CHECK(H.carrier.normal_form(x * x).is_zero());
  CHECK(comultiply(H, x) == TensorPoly::left(x) + TensorPoly::right(x));
  CHECK(antipode(H, x) == -x);
  CHECK(counit(H, x).is_zero());
  CHECK(counit(H, GradedPoly::unit(H.carrier.table())).is_one());
}

TEST_CASE("k[x]/(x^n) for n-fold zero brackets") {
  for (long n : {3L, 4L}) {
    auto H = nilpotent_line(n, (int)(2 * n));
    CHECK(H.carrier.dimension() == n);
    auto x = GradedPoly::generator(H.carrier.table(), 0);
    CHECK(H.carrier.normal_form(xpow(H.carrier.table(), (int)n)).is_zero());

    // Delta(x^2) = x^2 (x) 1 + (1 + zeta) x (x) x + 1 (x) x^2.
    auto zeta = root_of_unity(n, 1);
    auto d2 = comultiply(H, x * x);
    auto expect = TensorPoly::left(x * x) +
                  (CycScalar::one() + zeta) * TensorPoly::of(x, x) +
                  TensorPoly::right(x * x);
    CHECK(d2 == expect);

    // Delta(x^j) carries Gaussian coefficients.
    for (int j = 1; j < (int)n; ++j) {
      auto dj = comultiply(H, xpow(H.carrier.table(), j));
      for (int i = 0; i <= j; ++i) {
        Word left((size_t)i, 0), right((size_t)(j - i), 0);
        auto it = dj.terms().find({left, right});
        CycScalar got = it == dj.terms().end() ? CycScalar::zero() : it->second;
        CHECK(got == gaussian_coefficient(i, j, zeta));
      }
    }
  }
}

TEST_CASE("antipode recursion carries the braiding factor") {
  // S(xy) = chi(deg x, deg y) S(y) S(x) on a free-ish example.
  auto G = AbelianGroup::make({3, 3});
  auto chi = Bicharacter::make(G, 3, {{1, 2}, {0, 1}});
  auto g1 = G->generator(0), g2 = G->generator(1);
  auto table = GeneratorTable::make(G, {"x", "y"}, {g1, g2});
  HopfInstance H{quotient_present(table, {}, 4), chi, {}, {}, {}};
  for (size_t i = 0; i < 2; ++i) {
    auto gen = GradedPoly::generator(table, i);
    H.coproduct.push_back(TensorPoly::left(gen) + TensorPoly::right(gen));
    H.counit.push_back(CycScalar::zero());
    H.antipode.push_back(-gen);
  }
  auto x = GradedPoly::generator(table, 0), y = GradedPoly::generator(table, 1);
  CHECK(antipode(H, x) == -x);
  CHECK(antipode(H, GradedPoly::unit(table)) == GradedPoly::unit(table));
  CHECK(antipode(H, x * y) == chi(g1, g2) * (y * x));
}

TEST_CASE("hopf axioms pass for enveloping algebras") {
  for (long n : {2L, 3L, 4L}) {
    auto H = nilpotent_line(n, (int)(2 * n));
    auto result = hopf_axioms_check(H);
    INFO(render_report(result.report));
    CHECK(result.report.passed());
    CHECK(result.commutative);  // k[x]/(x^n) is commutative
    // tau twists x (x) x by zeta, so braided cocommutativity holds only at
    // n = 2; the flip is symmetric for all n (Gaussian binomial symmetry).
    CHECK(result.cocommutative_braided == (n == 2));
    CHECK(result.cocommutative_flip);
  }
}

TEST_CASE("group algebra kC2 with trivial braiding passes all axioms") {
  auto G = AbelianGroup::make({2});
  auto chi = Bicharacter::trivial(G);
  auto table = GeneratorTable::make(G, {"t"}, {G->zero()});
  auto t = GradedPoly::generator(table, 0);
  HopfInstance H{quotient_present(table, {t * t - GradedPoly::unit(table)}, 4),
                 chi,
                 {TensorPoly::of(t, t)},
                 {CycScalar::one()},
                 {t}};
  auto result = hopf_axioms_check(H);
  INFO(render_report(result.report));
  CHECK(result.report.passed());
  CHECK(result.commutative);
  CHECK(result.cocommutative_flip);
}

TEST_CASE("negative control: chi = 1 on k[x]/(x^2) breaks delta-multiplicativity") {
  auto G = AbelianGroup::make({2});
  auto table = GeneratorTable::make(G, {"x"}, {G->element({1})});
  auto x = GradedPoly::generator(table, 0);
  HopfInstance H{quotient_present(table, {x * x}, 4),
                 Bicharacter::trivial(G),
                 {TensorPoly::left(x) + TensorPoly::right(x)},
                 {CycScalar::zero()},
                 {-x}};
  auto result = hopf_axioms_check(H);
  CHECK(!result.report.passed());
  bool delta_failed = false;
  for (const auto& e : result.report.entries)
    if (e.name == "AXIOM delta-multiplicative" && !e.pass) delta_failed = true;
  CHECK(delta_failed);
}

TEST_CASE("primitives of k[x]/(x^n) form the line through x") {
  for (long n : {2L, 3L, 4L, 5L}) {
    auto H = nilpotent_line(n, (int)(2 * n));
    auto prims = primitives_solve(H);
    REQUIRE(prims.total_dimension() == 1);
    REQUIRE(prims.components.size() == 1);
    const auto& [deg, vecs] = prims.components[0];
    CHECK(deg == H.chi.group()->element({1}));
    auto x = GradedPoly::generator(H.carrier.table(), 0);
    CHECK(vecs[0] == x);

    // Closure: the n-fold bracket of x is n! x^n = 0, trivially primitive.
    ZetaFamily fam{H.chi(deg, deg), std::vector<GroupElement>((size_t)n, deg)};
    auto br = bracket_eval(H.chi, std::vector<GradedPoly>((size_t)n, x), fam,
                           &H.carrier);
    CHECK(br.is_zero());
  }
}

TEST_CASE("primitives of a group algebra vanish") {
  auto G = AbelianGroup::make({2});
  auto table = GeneratorTable::make(G, {"t"}, {G->zero()});
  auto t = GradedPoly::generator(table, 0);
  HopfInstance H{quotient_present(table, {t * t - GradedPoly::unit(table)}, 4),
                 Bicharacter::trivial(G),
                 {TensorPoly::of(t, t)},
                 {CycScalar::one()},
                 {t}};
  CHECK(primitives_solve(H).total_dimension() == 0);
}

TEST_CASE("primitive brackets stay primitive in U(P) of example 5(3)") {
  auto G = AbelianGroup::make({3});
  auto chi = Bicharacter::make(G, 3, {{1}});
  auto one = G->element({1}), zero = G->zero();
  auto table = GeneratorTable::make(G, {"x", "y", "z"}, {one, one, zero});
  LiePresentation P(chi, table);
  auto zeta = root_of_unity(3, 1);
  ZetaFamily tern{zeta, {one, one, one}};
  P.set_entry(tern, {0, 0, 1}, GradedPoly::generator(table, 2));
  P.set_entry(tern, {0, 0, 0}, GradedPoly(table));
  P.set_entry(tern, {1, 1, 1}, GradedPoly(table));
  P.set_entry(tern, {0, 1, 1}, GradedPoly(table));
  ZetaFamily zx{CycScalar::from_int(-1), {zero, one}};
  P.set_entry(zx, {2, 0}, GradedPoly(table));
  P.set_entry(zx, {2, 1}, GradedPoly(table));
  P.symmetrize();

  auto H = enveloping_build(P, 7);
  CHECK(H.carrier.stabilized());
  CHECK(!H.carrier.finite_dimensional());

  // z is eliminated: [x,x,y] = z forces z = 2(x^2 y + xyx + y x^2).
  auto x = GradedPoly::generator(table, 0), y = GradedPoly::generator(table, 1);
  auto z = GradedPoly::generator(table, 2);
  auto zval = CycScalar::from_int(2) * (x * x * y + x * y * x + y * x * x);
  CHECK(H.carrier.normal_form(z) == H.carrier.normal_form(zval));

  // Delta([x,x,y]) = [x,x,y] (x) 1 + 1 (x) [x,x,y], computed in the quotient.
  auto br = bracket_eval(chi, {x, x, y}, tern, &H.carrier);
  CHECK(comultiply(H, br) == TensorPoly::left(br) + TensorPoly::right(br));

  // Truncated axiom check carries a caveat and passes.
  auto result = hopf_axioms_check(H, 5);
  INFO(render_report(result.report));
  CHECK(result.report.passed());
  CHECK(!result.report.caveats.empty());

  CHECK_THROWS_AS(hopf_axioms_check(H), InfiniteDimensional);
}

TEST_CASE("sweedler biproduct: 4-dimensional, noncommutative, noncocommutative") {
  auto H = nilpotent_line(2, 6);
  auto B = biproduct_build(H);
  CHECK(B.dimension == 4);

  auto result = hopf_axioms_check(B.hopf);
  INFO(render_report(result.report));
  CHECK(result.report.passed());
  CHECK(!result.commutative);
  CHECK(!result.cocommutative_flip);

  // Delta(x) = x (x) 1 + t (x) x (skew primitive).
  auto table = B.hopf.carrier.table();
  auto x = GradedPoly::generator(table, 0);
  auto t = GradedPoly::generator(table, (size_t)B.group_generators[0]);
  CHECK(comultiply(B.hopf, x) == TensorPoly::left(x) + TensorPoly::of(t, x));

  // S(x) = -tx up to the relations (solved, not assumed): verify the
  // convolution property directly on x.
  auto sx = antipode(B.hopf, x);
  CHECK(B.hopf.carrier.normal_form(sx + B.hopf.carrier.mul_nf(t, x)).is_zero());
}

TEST_CASE("taft biproducts: relations and axioms for n = 2, 3") {
  for (long n : {2L, 3L}) {
    auto H = nilpotent_line(n, (int)(2 * n));
    auto B = biproduct_build(H);
    CHECK(B.dimension == n * n);

    auto table = B.hopf.carrier.table();
    auto x = GradedPoly::generator(table, 0);
    auto t = GradedPoly::generator(table, (size_t)B.group_generators[0]);
    const auto& alg = B.hopf.carrier;

    // t^n = 1, x^n = 0, t x = zeta x t.
    GradedPoly tn = GradedPoly::unit(table);
    for (long i = 0; i < n; ++i) tn = alg.mul_nf(tn, t);
    CHECK(tn == GradedPoly::unit(table));
    GradedPoly xn = GradedPoly::unit(table);
    for (long i = 0; i < n; ++i) xn = alg.mul_nf(xn, x);
    CHECK(xn.is_zero());
    CHECK(alg.mul_nf(t, x) == root_of_unity(n, 1) * alg.mul_nf(x, t));

    auto result = hopf_axioms_check(B.hopf);
    INFO(render_report(result.report));
    CHECK(result.report.passed());
  }
}
