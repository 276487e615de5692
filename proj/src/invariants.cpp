#include "dgla/invariants.hpp"

#include <sstream>

#include "dgla/errors.hpp"

namespace dgla {

std::string OrbitInvariantReport::to_string() const {
  std::ostringstream os;
  os << "degrees " << lo << ".." << hi << "\n";
  os << "  dim H_k:";
  for (int v : homology) os << " " << v;
  os << "\n";
  for (size_t k = 0; k < wordlen_gr.size(); ++k) {
    bool any = false;
    for (int v : wordlen_gr[k]) any |= (v != 0);
    if (!any) continue;
    os << "  k=" << (lo + static_cast<int>(k)) << " word-length gr:";
    for (int v : wordlen_gr[k]) os << " " << v;
    os << "\n";
  }
  switch (certificate) {
    case Cert::skipped: break;
    case Cert::certified_elliptic: os << "  certificate: certified-elliptic\n"; break;
    case Cert::inconclusive: os << "  certificate: inconclusive\n"; break;
  }
  return os.str();
}

OrbitInvariantReport orbit_invariants(const Differential& d, const Derivation& delta,
                                      int lo, int hi, bool with_certificate) {
  const FreeLie* L = d.algebra();
  Derivation total = d.der().add(delta);
  if (!is_differential(total))
    throw error("orbit_invariants: d + delta is not a differential");
  Differential dp(total, false);
  OrbitInvariantReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.homology = homology_dims(*L, dp, lo, hi);
  rep.wordlen_gr = homology_wordlength_gr(*L, dp, lo, hi);
  if (with_certificate) {
    auto e = elliptic_certificate(*L, dp, L->gens().max_degree());
    rep.certificate = (e == Ellipticity::certified_elliptic)
                          ? OrbitInvariantReport::Cert::certified_elliptic
                          : OrbitInvariantReport::Cert::inconclusive;
  }
  return rep;
}

}  // namespace dgla
