#include <random>

#include "braidlie/errors.hpp"
#include "braidlie/text.hpp"
#include "doctest.h"

using namespace braidlie;

TEST_CASE("scalar rendering") {
  CHECK(render_scalar(CycScalar::zero()) == "0 @ 1");
  CHECK(render_scalar(CycScalar::one()) == "1 @ 1");
  CHECK(render_scalar(CycScalar::from_int(-3)) == "-3 @ 1");
  CHECK(render_scalar(-root_of_unity(3, 1)) == "-1*z^1 @ 3");
  CHECK(render_scalar(CycScalar::one() - root_of_unity(3, 1)) == "1 - 1*z^1 @ 3");
  CHECK(render_scalar(CycScalar::from_rational(make_rational(1, 2)) * root_of_unity(4, 1)) == "1/2*z^1 @ 4");
  // Levels minimize: zeta_6^2 = zeta_3, and -zeta_3 embedded high comes back.
  CHECK(render_scalar(root_of_unity(6, 2)) == "1*z^1 @ 3");
  CHECK(render_scalar((-root_of_unity(3, 1)).embedded(12)) == "-1*z^1 @ 3");
}

TEST_CASE("scalar parse round-trip on canonical text") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> lev(1, 12), num(-6, 6), den(1, 5);
  for (int t = 0; t < 300; ++t) {
    long m = lev(rng);
    std::vector<Rational> cs(euler_phi(m));
    for (auto& c : cs) c = make_rational(num(rng), den(rng));
    CycScalar u(m, cs);
    std::string text = render_scalar(u);
    CHECK(parse_scalar(text) == u);
    CHECK(render_scalar(parse_scalar(text)) == text);
  }
}

TEST_CASE("scalar expression forms") {
  CHECK(parse_scalar("-1") == CycScalar::from_int(-1));
  CHECK(parse_scalar("z^1@3") == root_of_unity(3, 1));
  CHECK(parse_scalar("z^2@6") == root_of_unity(6, 2));
  CHECK(parse_scalar("1/2") == CycScalar::from_rational(make_rational(1, 2)));
  CHECK(parse_scalar("2*z^1@4 - 1") ==
        CycScalar::from_int(2) * root_of_unity(4, 1) - CycScalar::one());
  CHECK(parse_scalar("(1 + z^1@3)^2") ==
        (CycScalar::one() + root_of_unity(3, 1)).pow(2));
  CHECK_THROWS_AS(parse_scalar("z^1"), ParseError);  // no level anywhere
  CHECK_THROWS_AS(parse_scalar("x + 1"), ParseError);
}

namespace {

struct Fixture {
  GroupPtr G = AbelianGroup::make({3});
  TablePtr table =
      GeneratorTable::make(G, {"x", "y"}, {G->element({1}), G->element({1})});
  GradedPoly x = GradedPoly::generator(table, 0);
  GradedPoly y = GradedPoly::generator(table, 1);
};

}  // namespace

TEST_CASE("polynomial rendering and parsing") {
  Fixture f;
  CHECK(render_poly(GradedPoly::zero(f.table)) == "0");
  CHECK(render_poly(f.x * f.y - f.y * f.x) == "x*y - y*x");
  CHECK(render_poly(f.x * f.y + f.y * f.x) == "x*y + y*x");
  CHECK(render_poly(-f.x) == "-x");
  CHECK(render_poly(GradedPoly::unit(f.table) + f.x) == "1 + x");

  auto zeta = root_of_unity(3, 1);
  CHECK(render_poly(zeta * (f.x * f.y)) == "1*z^1@3*x*y");
  CHECK(render_poly((CycScalar::one() + zeta) * f.x) == "(1 + 1*z^1 @ 3)*x");

  CHECK(parse_poly("x*y - y*x", f.table) == f.x * f.y - f.y * f.x);
  CHECK(parse_poly("x^3", f.table) == f.x * f.x * f.x);
  CHECK(parse_poly("2*x + 1/2*y", f.table) ==
        CycScalar::from_int(2) * f.x +
            CycScalar::from_rational(make_rational(1, 2)) * f.y);
  CHECK(parse_poly("x*y^2 + y*x*y + y^2*x", f.table) ==
        f.x * f.y * f.y + f.y * f.x * f.y + f.y * f.y * f.x);
  CHECK_THROWS_AS(parse_poly("w + x", f.table), ParseError);

  // Round-trip identity on canonical output.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> len(0, 3), gen(0, 1), coef(-3, 3);
  for (int t = 0; t < 100; ++t) {
    GradedPoly p(f.table);
    for (int terms = 0; terms < 3; ++terms) {
      Word w;
      for (int i = len(rng); i-- > 0;) w.push_back(gen(rng));
      p.add_term(w, CycScalar::from_int(coef(rng)) * root_of_unity(3, len(rng)));
    }
    std::string text = render_poly(p);
    CHECK(parse_poly(text, f.table) == p);
    CHECK(render_poly(parse_poly(text, f.table)) == text);
  }
}

TEST_CASE("tensor rendering and parsing") {
  Fixture f;
  auto t = TensorPoly::left(f.x) + TensorPoly::right(f.x);
  CHECK(render_tensor(t) == "x(x)1 + 1(x)x");
  CHECK(parse_tensor("x(x)1 + 1(x)x", f.table) == t);

  auto zeta = root_of_unity(3, 1);
  auto dx2 = TensorPoly::of(f.x * f.x, GradedPoly::unit(f.table)) +
             (CycScalar::one() + zeta) * TensorPoly::of(f.x, f.x) +
             TensorPoly::of(GradedPoly::unit(f.table), f.x * f.x);
  std::string text = render_tensor(dx2);
  CHECK(text == "x*x(x)1 + (1 + 1*z^1 @ 3)*x(x)x + 1(x)x*x");
  CHECK(parse_tensor(text, f.table) == dx2);

  CHECK_THROWS_AS(parse_poly("x(x)1", f.table), ParseError);
  CHECK_THROWS_AS(parse_tensor("x*y", f.table), ParseError);
}

TEST_CASE("report rendering") {
  CheckReport r;
  r.title = "demo";
  r.add("CHECK alpha", true);
  r.add("CHECK beta", false, "witness-text");
  r.caveat("truncated to length 4");
  std::string text = render_report(r);
  CHECK(text ==
        "CAVEAT truncated to length 4\n"
        "CHECK alpha PASS\n"
        "CHECK beta FAIL witness-text\n"
        "SUMMARY FAIL checked=2 failed=1\n");
}
