#pragma once

#include <optional>

#include "braidlie/poly.hpp"

namespace braidlie {

/// A quotient of the free algebra by G-homogeneous relations, presented as
/// an oriented rewrite system completed up to a word-length bound D.
///
/// Rules map a leading word to a strictly smaller polynomial in the
/// length-then-lex order, so rewriting never lengthens a word and always
/// terminates. When completion resolves every overlap (none exceeded the
/// bound), the system is confluent and normal forms are canonical.
class PresentedAlgebra {
 public:
  using RuleMap = std::map<Word, GradedPoly, WordOrder>;

  const TablePtr& table() const { return table_; }
  const RuleMap& rules() const { return rules_; }
  int degree_bound() const { return bound_; }

  /// True when every critical pair fit below the bound and resolved.
  bool stabilized() const { return stabilized_; }

  /// True when some word length < D has no irreducible words, so the
  /// irreducible words below that length span the whole quotient.
  bool finite_dimensional() const { return finite_dim_; }

  /// Unique irreducible form; linear, idempotent. Throws DegreeOverflow if
  /// any input word is longer than the bound.
  GradedPoly normal_form(const GradedPoly& p) const;

  /// normal_form(a * b), guarding the product against the bound.
  GradedPoly mul_nf(const GradedPoly& a, const GradedPoly& b) const;

  /// All irreducible words of length <= max_len, in word order.
  /// Requires a stabilized system.
  std::vector<Word> basis(int max_len) const;

  /// The full basis of a finite-dimensional quotient.
  std::vector<Word> full_basis() const;

  long dimension() const;  // throws InfiniteDimensional

  friend PresentedAlgebra quotient_present(TablePtr table,
                                           const std::vector<GradedPoly>& relations,
                                           int degree_bound);

 private:
  explicit PresentedAlgebra(TablePtr table) : table_(std::move(table)) {}

  GradedPoly reduce_word(const Word& w, const CycScalar& c) const;

  TablePtr table_;
  RuleMap rules_;
  int bound_ = 0;
  bool stabilized_ = false;
  bool finite_dim_ = false;
  long dimension_ = -1;
};

/// Orients the relations by the word order and runs bounded completion.
/// Throws InhomogeneousRelation or OrientationFailure (a nonzero constant
/// relation, i.e. the quotient collapses to the zero ring).
PresentedAlgebra quotient_present(TablePtr table,
                                  const std::vector<GradedPoly>& relations,
                                  int degree_bound);

}  // namespace braidlie
