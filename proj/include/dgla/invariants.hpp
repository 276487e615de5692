#ifndef DGLA_INVARIANTS_HPP
#define DGLA_INVARIANTS_HPP

#include <string>
#include <vector>

#include "dgla/homology.hpp"

namespace dgla {

// Orbit invariants of a Maurer-Cartan point: homology dimensions of the
// perturbed algebra over a degree range, their word-length-filtration
// refinements, and (optionally) the ellipticity certificate. Equal orbits
// produce equal reports; distinct reports certify distinct orbits.
struct OrbitInvariantReport {
  int lo = 0, hi = 0;
  std::vector<int> homology;
  std::vector<std::vector<int>> wordlen_gr;
  enum class Cert { skipped, certified_elliptic, inconclusive } certificate = Cert::skipped;

  bool operator==(const OrbitInvariantReport& o) const = default;
  std::string to_string() const;
};

// delta must be Maurer-Cartan for d (checked).
OrbitInvariantReport orbit_invariants(const Differential& d, const Derivation& delta,
                                      int lo, int hi, bool with_certificate = false);

}  // namespace dgla

#endif
