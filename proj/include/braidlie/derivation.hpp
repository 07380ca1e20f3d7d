#pragma once

#include "braidlie/rewrite.hpp"

namespace braidlie {

/// A degree-g derivation of a finite-dimensional presented algebra, stored
/// by its images on the algebra basis (each image in normal form).
struct GradedDerivation {
  GroupElement degree;
  std::vector<GradedPoly> images;  // one per basis word, in basis order
};

/// Basis of the space of maps d of degree g with
/// d(ab) = d(a) b + chi(g, deg a) a d(b) on all basis pairs.
std::vector<GradedDerivation> derivations_solve(const PresentedAlgebra& alg,
                                                const Bicharacter& chi,
                                                const GroupElement& g);

/// Linear application of a derivation to a normal-form polynomial.
GradedPoly apply_derivation(const PresentedAlgebra& alg, const GradedDerivation& d,
                            const GradedPoly& p);

/// Generalized bracket of derivations: sum over S_n of rho-weighted
/// compositions. The family is the tuple of derivation degrees.
GradedDerivation derivation_bracket(const PresentedAlgebra& alg, const Bicharacter& chi,
                                    const std::vector<GradedDerivation>& ds,
                                    const CycScalar& zeta);

/// Flattened coefficient vector of a derivation over basis x basis, for
/// exact span membership.
std::vector<CycScalar> derivation_coordinates(const PresentedAlgebra& alg,
                                              const GradedDerivation& d);

}  // namespace braidlie
