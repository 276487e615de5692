#ifndef DGLA_DERIVATION_HPP
#define DGLA_DERIVATION_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgla/free_lie.hpp"

namespace dgla {

// A degree-k derivation of a free dgl, stored by its values on generators and
// extended by the graded Leibniz rule. Immutable after construction; copies
// share the evaluation cache.
class Derivation {
 public:
  Derivation() = default;
  // values[i] is the image of generator i; each must be homogeneous of degree
  // gens[i].degree + k (zero allowed).
  Derivation(const FreeLie* alg, int k, std::vector<LieElement> values);

  static Derivation zero(const FreeLie* alg, int k);

  const FreeLie* algebra() const { return alg_; }
  int degree() const { return deg_; }
  const LieElement& value(int i) const { return (*values_)[i]; }
  const std::vector<LieElement>& values() const { return *values_; }
  bool is_zero() const;

  // Leibniz extension. Truncation flags propagate from the window.
  LieElement evaluate(const LieElement& e) const;

  Derivation add(const Derivation& o) const;
  Derivation sub(const Derivation& o) const;
  Derivation scale(const Rational& c) const;

  // every value has word length >= n (zero values pass)
  bool values_in_word_length_at_least(int n) const;
  // every value strictly raises the weight, i.e. all monomials of value(i)
  // have weight > weight(generator i)
  bool raises_weight() const;

  bool operator==(const Derivation& o) const;
  bool operator!=(const Derivation& o) const { return !(*this == o); }

  std::string to_string() const;  // "x -> [x,y]; y -> 0"

 private:
  const FreeLie* alg_ = nullptr;
  int deg_ = 0;
  std::shared_ptr<const std::vector<LieElement>> values_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
  const LieElement& eval_mono(Mono m) const;
};

// graded commutator of derivations
Derivation der_bracket(const Derivation& a, const Derivation& b);

// A differential: degree -1, square zero on generators (hence everywhere).
class Differential {
 public:
  Differential() = default;  // empty handle; assign before use
  // validates square-zero; pass validate=false only for the literal zero map.
  explicit Differential(Derivation d, bool validate = true);
  static Differential zero(const FreeLie* alg);

  const Derivation& der() const { return d_; }
  const FreeLie* algebra() const { return d_.algebra(); }
  LieElement apply(const LieElement& e) const { return d_.evaluate(e); }
  bool is_zero() const { return d_.is_zero(); }
  // values all of word length >= 2 / exactly 2
  bool decomposable() const;
  bool quadratic() const;

 private:
  Derivation d_;
};

// D(theta) = [d, theta] = d o theta - (-1)^{|theta|} theta o d
Derivation boundary(const Differential& d, const Derivation& theta);

// true iff delta has degree -1 and delta o delta kills every generator
bool is_differential(const Derivation& delta);

// perturbed differential d + ad_a for degree -1 element a (not guaranteed
// square-zero; see mc_check)
Derivation perturb(const Differential& d, const LieElement& a);

// perturbed differential d + a for a degree -1 derivation a, i.e. the same
// operation one level up, inside Der L
Derivation perturb(const Differential& d, const Derivation& a);

// Maurer-Cartan test: da + (1/2)[a,a] = 0
bool mc_check(const Differential& d, const LieElement& a);

// Derivation-level Maurer-Cartan test: [d,a] + (1/2)[a,a] = 0; equivalent to
// is_differential(perturb(d, a))
bool mc_check(const Differential& d, const Derivation& a);

}  // namespace dgla

#endif
