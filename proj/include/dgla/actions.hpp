#ifndef DGLA_ACTIONS_HPP
#define DGLA_ACTIONS_HPP

#include <map>
#include <string>

#include "dgla/algebra_presentation.hpp"
#include "dgla/automorphism.hpp"
#include "dgla/mc_variety.hpp"

namespace dgla {

// phi . delta = phi (d+delta) phi^{-1} - d, decomposed in the variety's
// degree -1 basis. Raises out_of_subspace if the image leaves the family.
// For varieties over a nonzero differential, phi must stabilize its quadratic
// part (checked).
Derivation aut_action(const MCVariety& v, const Automorphism& phi, const Derivation& delta);

// extension of an invertible degree-0 linear map on V, given by its values
// (each a linear combination of generators of the same degree)
Automorphism autV_lift(const FreeLie* L, const std::vector<LieElement>& linear_values);

// Scalar algebra automorphism phi(g) = lambda_g g acting through the inverse
// dual on V = s^{-1}A#: generator v_g scales by 1/lambda_g. Validates the
// multiplicative constraints against the presentation.
Derivation autA_action(const MCVariety& v, const GradedAlgebraPresentation& A,
                       const std::map<std::string, Rational>& scalars,
                       const Derivation& delta);
Automorphism autA_lift(const FreeLie* L, const GradedAlgebraPresentation& A,
                       const std::map<std::string, Rational>& scalars);

struct GaugeNormalization {
  Derivation representative;
  std::vector<Rational> coordinates;
  bool reduced = false;  // false: returned unchanged with a not-reducible flag
};

// Zeroes the listed coordinates of the MC point by flowing along the given
// degree-0 directions, provided the flow is affine in them (verified).
GaugeNormalization canonical_gauge_representative(const MCVariety& v, const Derivation& delta,
                                                  const std::vector<Derivation>& directions,
                                                  const std::vector<int>& coords_to_zero);

}  // namespace dgla

#endif
