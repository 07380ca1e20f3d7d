#pragma once

#include "braidlie/lie.hpp"

namespace braidlie {

/// A presented G-graded algebra with Hopf structure data on generators:
/// Delta and S extend as braided (anti)morphisms, epsilon multiplicatively.
struct HopfInstance {
  PresentedAlgebra carrier;
  Bicharacter chi;
  std::vector<TensorPoly> coproduct;  // per generator
  std::vector<CycScalar> counit;      // per generator
  std::vector<GradedPoly> antipode;   // per generator
};

/// U(P): tensor algebra modulo the bracket relations of every declared op,
/// with primitive generators. With validate set, lie_validate must pass.
HopfInstance enveloping_build(const LiePresentation& pres, int degree_bound,
                              bool validate = true);

/// Braided-morphism extension of the generator coproducts; legs in normal form.
TensorPoly comultiply(const HopfInstance& H, const GradedPoly& p);

/// Anti-morphism extension: S(a w) = chi(deg a, deg w) S(w) S(a).
GradedPoly antipode(const HopfInstance& H, const GradedPoly& p);

/// Multiplicative extension of the generator counits.
CycScalar counit(const HopfInstance& H, const GradedPoly& p);

/// The five axiom groups, each checked exactly on every basis element (and
/// Delta-multiplicativity on basis pairs), plus commutativity and both
/// cocommutativity flags. Infinite-dimensional carriers need truncate_len;
/// the report then carries a truncation caveat.
struct HopfAxiomsResult {
  CheckReport report;
  bool commutative = false;
  bool cocommutative_braided = false;  // tau(Delta) = Delta with the chi-twist
  bool cocommutative_flip = false;     // plain swap
};
HopfAxiomsResult hopf_axioms_check(const HopfInstance& H, int truncate_len = -1);

/// Per-degree bases of the primitives {v : Delta(v) = v (x) 1 + 1 (x) v}.
struct PrimitiveSpace {
  std::vector<Word> basis;  // carrier basis the coordinates refer to
  std::vector<std::pair<GroupElement, std::vector<GradedPoly>>> components;

  long total_dimension() const {
    long n = 0;
    for (const auto& [g, vs] : components) n += (long)vs.size();
    return n;
  }
};
PrimitiveSpace primitives_solve(const HopfInstance& H);

/// H * kG: ordinary Hopf algebra on the H-basis times the group, with
/// (x (x) g)(y (x) h) = chi(g, deg y) xy (x) gh. The antipode is obtained by
/// solving the convolution-inverse system for the identity.
struct BiproductInstance {
  HopfInstance hopf;  // trivial braiding
  std::vector<uint32_t> group_generators;  // table positions of the t_i
  long dimension = 0;
};
BiproductInstance biproduct_build(const HopfInstance& H);

}  // namespace braidlie
