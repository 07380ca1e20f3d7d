#pragma once

#include <map>
#include <optional>

#include "braidlie/report.hpp"
#include "braidlie/rewrite.hpp"

namespace braidlie {

/// [x_1, ..., x_n] = sum over S_n of rho(sigma, fam) x_sigma(1) ... x_sigma(n).
/// Arguments must be homogeneous of the family's degrees; when an ambient
/// presented algebra is given the result is returned in normal form.
GradedPoly bracket_eval(const Bicharacter& chi, const std::vector<GradedPoly>& xs,
                        const ZetaFamily& fam,
                        const PresentedAlgebra* ambient = nullptr);

/// [x_1,...,x_n] = rho(sigma, fam) [x_sigma(1),...,x_sigma(n)] for all sigma,
/// verified with formal generators in the free algebra.
CheckReport check_symmetry(const Bicharacter& chi, const ZetaFamily& fam);

/// First Jacobi identity for a zeta-family of length n+1, zeta a primitive
/// n-th root of unity. Also cross-checks rho((i..1), fam) against the
/// closed coefficient form zeta^(-i+1) prod_{j<i} chi(g_j, g_i).
CheckReport check_jacobi1(const Bicharacter& chi, const ZetaFamily& fam);

/// Second Jacobi identity: [x,[y_1..y_n]] expands over [y_1..[x,y_i]..y_n]
/// with chi-prefactors; requires every (h, g_i) to be a (-1)-family.
CheckReport check_jacobi2(const Bicharacter& chi, const ZetaFamily& fam,
                          const GroupElement& h);

/// Full braided expansion of [x_1 (x) 1 + 1 (x) x_1, ...] over formal
/// generators; the raw material for the primitivity theorem.
TensorPoly primitive_lift_expansion(const Bicharacter& chi, const ZetaFamily& fam);

/// Asserts every mixed coefficient c_{sigma,i} (0 < i < n) vanishes and the
/// expansion equals bracket (x) 1 + 1 (x) bracket. With require_primitive
/// the zeta precondition is enforced up front; disabling it admits negative
/// controls whose report simply fails.
CheckReport check_main_theorem(const Bicharacter& chi, const ZetaFamily& fam,
                               bool require_primitive = true);

/// Partitions of t into at most j parts, each part <= i.
long partition_count(long i, long j, long t);

/// c_{1,i} = sum_t p(i, n-i, t) zeta^t, the zeta-deformed binomial.
CycScalar gaussian_coefficient(long i, long n, const CycScalar& zeta);

/// Graded components with bases plus bracket structure constants indexed by
/// (zeta, family). Ops are declared for primitive n-th roots, n >= 2; entries
/// not declared inside an op default to zero.
class LiePresentation {
 public:
  struct OpKey {
    std::vector<std::vector<long>> family_exps;
    long zeta_level;
    std::vector<Rational> zeta_coeffs;
    bool operator<(const OpKey& o) const;
  };
  struct Op {
    ZetaFamily fam;
    std::map<std::vector<int>, GradedPoly> entries;  // generator-index tuple -> value
    bool derived = false;  // filled by symmetrize(), not user-declared
  };

  LiePresentation(Bicharacter chi, TablePtr table);

  const Bicharacter& chi() const { return chi_; }
  const TablePtr& table() const { return table_; }
  const std::map<OpKey, Op>& ops() const { return ops_; }

  /// Generator indices whose degree is g.
  std::vector<int> component(const GroupElement& g) const;
  /// Distinct degrees carrying generators, in lexicographic order.
  std::vector<GroupElement> support() const;

  void declare_bracket(const ZetaFamily& fam);
  void set_entry(const ZetaFamily& fam, const std::vector<int>& args, GradedPoly value);

  /// Closes the table under the S_n action via the symmetry identity:
  /// [x_sigma(1),...] := rho(sigma, fam)^-1 [x_1,...]. Declared entries are
  /// never overwritten; inconsistencies are left for lie_validate.
  void symmetrize();

  bool op_declared(const ZetaFamily& fam) const;

  /// Structure-constant lookup with multilinear zero default. In strict
  /// mode an undeclared op throws MissingBracket.
  GradedPoly bracket_value(const ZetaFamily& fam, const std::vector<int>& args,
                           bool strict = false) const;

  /// Bracket of linear combinations of generators (multilinear expansion).
  /// Arguments must be homogeneous generator combinations; the family is
  /// read off their degrees.
  GradedPoly bracket_apply(const CycScalar& zeta, const std::vector<GradedPoly>& args,
                           bool strict = false) const;

  static OpKey key_of(const ZetaFamily& fam);

 private:
  Bicharacter chi_;
  TablePtr table_;
  std::map<OpKey, Op> ops_;
};

/// Checks the three defining identities on every declared op (plus the
/// derived instances they force), instance by instance over basis tuples.
/// In strict mode a needed-but-undeclared op raises MissingBracket instead
/// of defaulting to the zero map.
CheckReport lie_validate(const LiePresentation& pres, bool strict = false);

}  // namespace braidlie
