#include "dgla/actions.hpp"

#include "dgla/errors.hpp"

namespace dgla {

namespace {

// conjugate a derivation: phi o D o phi^{-1}
Derivation conjugate(const Automorphism& phi, const Derivation& D) {
  const FreeLie* L = phi.algebra();
  Automorphism inv = inverse(phi);
  std::vector<LieElement> vals;
  for (int i = 0; i < L->gens().size(); ++i)
    vals.push_back(phi.apply(D.evaluate(inv.value(i))));
  return Derivation(L, D.degree(), std::move(vals));
}

}  // namespace

Derivation aut_action(const MCVariety& v, const Automorphism& phi, const Derivation& delta) {
  const FreeLie* L = phi.algebra();
  const Differential& d = v.differential();
  if (!d.is_zero()) {
    // phi must stabilize the quadratic part: quadratic part of phi^{-1} d phi = d
    Automorphism inv = inverse(phi);
    Derivation chi = conjugate(inv, d.der());
    for (int i = 0; i < L->gens().size(); ++i)
      if (L->component(chi.value(i), 2) != L->component(d.der().value(i), 2))
        throw error("automorphism does not stabilize the quadratic part of d");
  }
  Derivation total = conjugate(phi, d.der().add(delta));
  Derivation dprime = total.sub(d.der());
  // must land back in the family: coordinates raises out_of_subspace otherwise
  auto coords = v.coordinates(dprime);
  (void)coords;
  if (!mc_check(d, dprime))
    throw error("internal: conjugated perturbation is not Maurer-Cartan");
  return dprime;
}

Automorphism autV_lift(const FreeLie* L, const std::vector<LieElement>& linear_values) {
  for (const auto& val : linear_values)
    for (const auto& [m, c] : val.terms())
      if (L->mono_length(m) != 1)
        throw error("autV_lift values must be linear in the generators");
  return Automorphism(L, linear_values);  // constructor checks invertibility
}

Automorphism autA_lift(const FreeLie* L, const GradedAlgebraPresentation& A,
                       const std::map<std::string, Rational>& scalars) {
  // validate: every basis element scaled, scalars nonzero, products respected
  std::vector<Rational> lam(A.size());
  for (int i = 0; i < A.size(); ++i) {
    auto it = scalars.find(A[i].name);
    if (it == scalars.end())
      throw error("autA: missing scalar for " + A[i].name);
    if (it->second == 0) throw error("autA: scalar for " + A[i].name + " must be nonzero");
    lam[i] = it->second;
  }
  for (const auto& [name, val] : scalars)
    if (!A.index_of(name)) throw error("autA: unknown algebra element " + name);
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      for (const auto& [k, c] : A.product(i, j))
        if (lam[i] * lam[j] != lam[k])
          throw error("scalars violate the automorphism constraint on " + A[i].name + "*" +
                      A[j].name);
  // inverse dual action on V = s^{-1}A#: v_g scales by 1/lambda_g. The
  // generator order of L matches the presentation order (quillen_model).
  if (L->gens().size() != A.size())
    throw error("autA: algebra and model have different ranks");
  std::vector<LieElement> vals;
  for (int i = 0; i < A.size(); ++i)
    vals.push_back(L->scale(1 / lam[i], L->gen(i)));
  return Automorphism(L, std::move(vals));
}

Derivation autA_action(const MCVariety& v, const GradedAlgebraPresentation& A,
                       const std::map<std::string, Rational>& scalars,
                       const Derivation& delta) {
  return aut_action(v, autA_lift(v.differential().algebra(), A, scalars), delta);
}

GaugeNormalization canonical_gauge_representative(const MCVariety& v, const Derivation& delta,
                                                  const std::vector<Derivation>& directions,
                                                  const std::vector<int>& coords_to_zero) {
  const Differential& d = v.differential();
  auto base = v.coordinates(delta);
  const size_t s = base.size();
  GaugeNormalization out{delta, base, false};
  // displacement of each direction, and an affinity check: the displacement
  // must be independent of the base point and linear in t
  std::vector<std::vector<Rational>> disp;
  for (const auto& th : directions) {
    auto c1 = v.coordinates(gauge(d, th, delta));
    std::vector<Rational> dvec(s);
    for (size_t i = 0; i < s; ++i) dvec[i] = c1[i] - base[i];
    // t = 2 doubles the displacement, and the displacement repeats at the
    // moved point
    auto c2 = v.coordinates(gauge(d, th.scale(Rational(2)), delta));
    auto c3 = v.coordinates(gauge(d, th, v.assemble(c1)));
    for (size_t i = 0; i < s; ++i) {
      if (c2[i] - base[i] != 2 * dvec[i]) return out;
      if (c3[i] - c1[i] != dvec[i]) return out;
    }
    disp.push_back(std::move(dvec));
  }
  // solve sum t_j disp_j[S] = -base[S]
  DenseMat m(static_cast<int>(coords_to_zero.size()), static_cast<int>(directions.size()));
  std::vector<Rational> rhs;
  for (size_t r = 0; r < coords_to_zero.size(); ++r) {
    int c = coords_to_zero[r];
    for (size_t j = 0; j < directions.size(); ++j) m.at(static_cast<int>(r), static_cast<int>(j)) = disp[j][c];
    rhs.push_back(-base[c]);
  }
  auto t = solve(std::move(m), std::move(rhs));
  if (!t) return out;
  Derivation x = Derivation::zero(d.algebra(), 0);
  for (size_t j = 0; j < directions.size(); ++j)
    if ((*t)[j] != 0) x = x.add(directions[j].scale((*t)[j]));
  Derivation moved = gauge(d, x, delta);
  auto mc = v.coordinates(moved);
  for (int c : coords_to_zero)
    if (mc[c] != 0) return out;  // flow was not affine after all
  out.representative = moved;
  out.coordinates = mc;
  out.reduced = true;
  return out;
}

}  // namespace dgla
