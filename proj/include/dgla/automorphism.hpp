#ifndef DGLA_AUTOMORPHISM_HPP
#define DGLA_AUTOMORPHISM_HPP

#include <map>
#include <memory>
#include <vector>

#include "dgla/derivation.hpp"
#include "dgla/free_lie.hpp"

namespace dgla {

// Which filtration certifies series termination for exp/log.
enum class FiltrationKind { word_length, weight };

// Bracket-preserving endomorphism of the free Lie algebra given by its values
// on generators; construction checks that the linear part is invertible in
// every degree (the invertibility witness).
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(const FreeLie* alg, std::vector<LieElement> values);

  static Automorphism identity(const FreeLie* alg);

  const FreeLie* algebra() const { return alg_; }
  const LieElement& value(int i) const { return (*values_)[i]; }
  LieElement apply(const LieElement& e) const;

  // linear (word-length-1) part of the value on generator i
  LieElement linear_part(int i) const;
  bool is_identity() const;
  // (this - id) raises word length, i.e. linear part is the identity
  bool unipotent() const;
  // (this - id) strictly raises weight
  bool raises_weight_by_one() const;

  bool operator==(const Automorphism& o) const;
  bool operator!=(const Automorphism& o) const { return !(*this == o); }

 private:
  const FreeLie* alg_ = nullptr;
  std::shared_ptr<const std::vector<LieElement>> values_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
  LieElement apply_mono(Mono m) const;
};

// f after g
Automorphism compose(const Automorphism& f, const Automorphism& g);

// exact inverse within the window (order-by-order in word length); the
// result is verified by composing back to the identity.
Automorphism inverse(const Automorphism& f);

// exp of a degree-0 derivation: sum theta^n / n! on each generator. The
// series must terminate (word-length-raising values or nilpotency inside the
// window); otherwise a termination_error names the first bad generator.
Automorphism exp_derivation(const Derivation& theta);

// log of an automorphism whose deviation from the identity is filtration
// raising (word length by default; weight for bigraded models) or nilpotent
// in the window.
Derivation log_automorphism(const Automorphism& f,
                            FiltrationKind kind = FiltrationKind::word_length);

// Baker-Campbell-Hausdorff product of degree-0 derivations:
// exp(bch(a,b)) = exp(a) o exp(b).
Derivation bch(const Derivation& a, const Derivation& b);

// BCH for degree-0 elements of the algebra itself, computed in the truncated
// tensor algebra and projected back; sets the truncation flag when the window
// cuts the series.
LieElement bch_elements(const LieElement& x, const LieElement& y);

// Gauge action of a degree-0 derivation on a degree -1 derivation:
// x G a = sum ad_x^i(a)/i! - sum ad_x^i(Dx)/(i+1)!   with D = [d,-].
Derivation gauge(const Differential& d, const Derivation& x, const Derivation& a);

// Same formula inside the algebra: x in L_0, a in L_{-1}, dx from d.
LieElement gauge_element(const Differential& d, const LieElement& x, const LieElement& a);

// Checks (d+eta) o e^theta = e^theta o (d+delta) on every generator; when it
// holds, cross-checks gauge(theta, delta) = eta.
bool gauge_witness_check(const Differential& d, const Derivation& theta,
                         const Derivation& delta, const Derivation& eta);

}  // namespace dgla

#endif
