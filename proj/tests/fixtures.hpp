#ifndef DGLA_TESTS_FIXTURES_HPP
#define DGLA_TESTS_FIXTURES_HPP

// Shared constructions for the two worked moduli examples.

#include <memory>

#include "dgla/automorphism.hpp"
#include "dgla/derivation.hpp"
#include "dgla/free_lie.hpp"

namespace dgla::fixtures {

// L = (L(x,y), 0), |x| = |y| = 2, with the three gl_2-type derivations.
struct Sl2 {
  std::shared_ptr<FreeLie> L;
  Derivation t1, t2, t3;
  Sl2() {
    L = std::make_shared<FreeLie>(GeneratorSet({{"x", 2}, {"y", 2}}), Window{8, 0});
    auto x = L->gen("x"), y = L->gen("y");
    t1 = Derivation(L.get(), 0, {x, L->scale(rat(-1), y)});
    t2 = Derivation(L.get(), 0, {y, L->zero()});
    t3 = Derivation(L.get(), 0, {L->zero(), x});
  }
};

// wedge-2-4-6-6: L = (L(x1,y3,z5,w5), 0)
struct Wedge {
  std::shared_ptr<FreeLie> L;
  Differential d0;
  Derivation dy, dz, dw;  // basis of the decomposable degree -1 derivations
  explicit Wedge(int max_degree = 12)
      : L(std::make_shared<FreeLie>(
            GeneratorSet({{"x", 1}, {"y", 3}, {"z", 5}, {"w", 5}}),
            Window{max_degree, 0})),
        d0(Differential::zero(L.get())) {
    auto x = L->gen("x"), y = L->gen("y");
    auto xx = L->bracket(x, x), xy = L->bracket(x, y);
    dy = Derivation(L.get(), -1, {L->zero(), xx, L->zero(), L->zero()});
    dz = Derivation(L.get(), -1, {L->zero(), L->zero(), xy, L->zero()});
    dw = Derivation(L.get(), -1, {L->zero(), L->zero(), L->zero(), xy});
  }
  Derivation at(const Rational& a, const Rational& b, const Rational& c) const {
    return dy.scale(a).add(dz.scale(b)).add(dw.scale(c));
  }
};

// su6-quotient: L = (L(x3,y5,z12,u14,v18), dv = [x,u]+[y,z])
struct Su6 {
  std::shared_ptr<FreeLie> L;
  Differential d;
  Derivation dz, du, dv;            // degree -1 generators
  Derivation th, thp, thpp;         // degree 0 generators
  explicit Su6(int max_degree = 20)
      : L(std::make_shared<FreeLie>(
            GeneratorSet({{"x", 3}, {"y", 5}, {"z", 12}, {"u", 14}, {"v", 18}}),
            Window{max_degree, 0})) {
    auto x = L->gen("x"), y = L->gen("y"), z = L->gen("z"), u = L->gen("u");
    auto zero = L->zero();
    Derivation draw(L.get(), -1,
                    {zero, zero, zero, zero,
                     L->add(L->bracket(x, u), L->bracket(y, z))});
    d = Differential(draw);
    dz = Derivation(L.get(), -1, {zero, zero, L->ad_pow(x, 2, y), zero, zero});
    du = Derivation(L.get(), -1, {zero, zero, zero, L->ad_pow(y, 2, x), zero});
    dv = Derivation(L.get(), -1, {zero, zero, zero, zero, L->ad_pow(x, 4, y)});
    th = Derivation(L.get(), 0, {zero, zero, zero, L->ad_pow(x, 3, y), zero});
    thp = Derivation(L.get(), 0, {zero, zero, zero, zero, L->ad_pow(x, 2, z)});
    thpp = Derivation(L.get(), 0,
                      {zero, zero, zero, zero, L->scale(rat(-1), L->ad_pow(y, 3, x))});
  }
  Derivation at(const Rational& a, const Rational& b, const Rational& c) const {
    return dz.scale(a).add(du.scale(b)).add(dv.scale(c));
  }
};

}  // namespace dgla::fixtures

#endif
