#ifndef DGLA_MC_VARIETY_HPP
#define DGLA_MC_VARIETY_HPP

#include <string>
#include <vector>

#include "dgla/der_subspaces.hpp"

namespace dgla {

// The Maurer-Cartan condition on delta = sum alpha_i d_i as an explicit
// polynomial system: P_l(alpha) = sum_i mu_i^l alpha_i
//                                + sum_{i<=j} q_ij^l alpha_i alpha_j
// with [d, d_i] = sum mu_i^l s_l and the quadratic part of (1/2)[delta,delta]
// expressed in the s-basis. The solution set equals the MC set exactly.
struct QuadraticSystem {
  struct Term {
    Rational coeff;
    std::vector<int> vars;  // one or two variable indices, ascending
  };
  std::vector<std::string> variables;            // a1..as
  std::vector<std::string> legend;               // human-readable basis labels
  std::vector<std::vector<Term>> polynomials;    // one per M_{-2} basis element

  bool identically_zero() const;
  Rational eval(size_t p, const std::vector<Rational>& alpha) const;
  bool vanishes_at(const std::vector<Rational>& alpha) const;
  std::string text() const;  // one polynomial per line, exact rationals
};

// Basis data of the MC set of a derivation subalgebra family inside Der L.
class MCVariety {
 public:
  // m1, m2: bases of the degree -1 and -2 parts. Closure of the bracket into
  // span(m2) is validated; a violation raises out_of_subspace.
  MCVariety(Differential d, DerKind kind, std::vector<Derivation> m1,
            std::vector<Derivation> m2);

  const Differential& differential() const { return d_; }
  DerKind kind() const { return kind_; }
  const std::vector<Derivation>& basis_m1() const { return m1_; }
  const std::vector<Derivation>& basis_m2() const { return m2_; }
  const QuadraticSystem& system() const { return sys_; }

  // sum alpha_i d_i (the perturbation delta, without d)
  Derivation assemble(const std::vector<Rational>& alpha) const;
  // coordinates of a derivation in the m1 basis; out_of_subspace if outside
  std::vector<Rational> coordinates(const Derivation& delta) const;

  // exact check: all polynomials vanish at alpha
  bool mc_points_check(const std::vector<Rational>& alpha) const;

 private:
  Differential d_;
  DerKind kind_;
  std::vector<Derivation> m1_, m2_;
  QuadraticSystem sys_;
};

// Convenience: build from the family bases of the given kind.
MCVariety build_variety(const Differential& d, DerKind kind, const FiltrationOfV* filt);

}  // namespace dgla

#endif
