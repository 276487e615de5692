#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgla/actions.hpp"
#include "dgla/errors.hpp"
#include "dgla/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dgla;

namespace {

GradedAlgebraPresentation su6_algebra() {
  std::vector<GradedAlgebraPresentation::Element> basis = {
      {"a", 4}, {"b", 6}, {"c", 13}, {"p", 15}, {"q", 19}};
  std::map<std::pair<int, int>, PresVec> prods;
  prods[{0, 3}] = {{4, rat(1)}};  // a p = q
  prods[{1, 2}] = {{4, rat(1)}};  // b c = q
  return GradedAlgebraPresentation(std::move(basis), std::move(prods));
}

}  // namespace

TEST_CASE("wedge variety: no equations, MC is the whole degree -1 part") {
  fixtures::Wedge f;
  auto v = build_variety(f.d0, DerKind::dder, nullptr);
  CHECK(v.basis_m1().size() == 3);
  CHECK(v.basis_m2().empty());
  CHECK(v.system().identically_zero());
  oracle::Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> alpha = {rng.coeff(), rng.coeff(), rng.coeff()};
    CHECK(v.mc_points_check(alpha));
    CHECK(is_differential(perturb(f.d0, v.assemble(alpha))));
  }
}

TEST_CASE("su6 variety: one equation cutting out alpha = beta") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  CHECK(v.basis_m1().size() == 3);
  CHECK(v.basis_m2().size() == 1);
  CHECK(!v.system().identically_zero());
  // identify coordinates with the named basis via coordinates()
  auto cz = v.coordinates(f.dz), cu = v.coordinates(f.du), cv = v.coordinates(f.dv);
  // dual-path on the full grid {-3..3}^3
  int disagreements = 0, mc_points = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        std::vector<Rational> alpha(3);
        for (int i = 0; i < 3; ++i)
          alpha[i] = rat(a) * cz[i] + rat(b) * cu[i] + rat(c) * cv[i];
        bool via_poly = v.mc_points_check(alpha);
        bool via_diff = is_differential(perturb(f.d, v.assemble(alpha)));
        if (via_poly != via_diff) ++disagreements;
        if (via_poly != (a == b)) ++disagreements;
        if (via_poly) ++mc_points;
      }
  CHECK(disagreements == 0);
  CHECK(mc_points == 49);  // 7 x 7 plane a = b
}

TEST_CASE("points check validates dimension") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  CHECK_THROWS_AS(v.mc_points_check({rat(1)}), error);
  CHECK(v.mc_points_check({rat(0), rat(0), rat(0)}));
}

TEST_CASE("aut action: identity, scaling witness, quadratic-part stabilizer") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  auto point = f.at(rat(1), rat(1), rat(0));  // delta_z + delta_u
  CHECK(aut_action(v, Automorphism::identity(f.L.get()), point) == point);
  auto A = su6_algebra();
  for (Rational alpha : {rat(2), rat(1, 5)}) {
    std::map<std::string, Rational> lam = {{"a", 1 / alpha}, {"b", rat(1)},
                                           {"c", 1 / alpha}, {"p", rat(1)},
                                           {"q", 1 / alpha}};
    auto moved = autA_action(v, A, lam, point);
    CHECK(moved == point.scale(alpha));
  }
  // scalars violating the constraint are rejected
  std::map<std::string, Rational> bad = {{"a", rat(2)}, {"b", rat(1)}, {"c", rat(1)},
                                         {"p", rat(1)}, {"q", rat(1)}};
  CHECK_THROWS_AS(autA_lift(f.L.get(), A, bad), error);
  // a diagonal map on V that breaks the quadratic part is rejected
  std::vector<LieElement> vals;
  for (int i = 0; i < 5; ++i) vals.push_back(f.L->gen(i));
  vals[0] = f.L->scale(rat(7), f.L->gen(0));  // x -> 7x alone breaks dv
  CHECK_THROWS_AS(aut_action(v, Automorphism(f.L.get(), vals), point), error);
}

TEST_CASE("composite scalar automorphisms act as the product") {
  fixtures::Su6 f;
  auto A = su6_algebra();
  std::map<std::string, Rational> l1 = {{"a", rat(1, 2)}, {"b", rat(1)}, {"c", rat(1, 2)},
                                        {"p", rat(1)}, {"q", rat(1, 2)}};
  std::map<std::string, Rational> l2 = {{"a", rat(3)}, {"b", rat(2)}, {"c", rat(3, 2)},
                                        {"p", rat(1)}, {"q", rat(3)}};
  std::map<std::string, Rational> l12;
  for (const auto& [k, x] : l1) l12[k] = x * l2.at(k);
  CHECK(compose(autA_lift(f.L.get(), A, l1), autA_lift(f.L.get(), A, l2)) ==
        autA_lift(f.L.get(), A, l12));
}

TEST_CASE("autV lift: swap of the two degree-5 generators exchanges columns") {
  fixtures::Wedge f;
  auto v = build_variety(f.d0, DerKind::dder, nullptr);
  std::vector<LieElement> swap_vals = {f.L->gen("x"), f.L->gen("y"), f.L->gen("w"),
                                       f.L->gen("z")};
  auto phi = autV_lift(f.L.get(), swap_vals);
  auto moved = aut_action(v, phi, f.at(rat(1), rat(2), rat(3)));
  CHECK(moved == f.at(rat(1), rat(3), rat(2)));
  // grading automorphism lambda^degree scales a point within its orbit (d = 0)
  std::vector<LieElement> diag = {f.L->scale(rat(2), f.L->gen("x")),
                                  f.L->scale(rat(8), f.L->gen("y")),
                                  f.L->scale(rat(32), f.L->gen("z")),
                                  f.L->scale(rat(32), f.L->gen("w"))};
  auto g = autV_lift(f.L.get(), diag);
  auto scaled = aut_action(v, g, f.at(rat(1), rat(0), rat(0)));
  CHECK(v.coordinates(scaled)[0] == rat(1, 2));  // lambda_x^2 / lambda_y = 1/2
  // singular linear part rejected
  std::vector<LieElement> sing = {f.L->gen("x"), f.L->gen("y"), f.L->gen("z"),
                                  f.L->gen("z")};
  CHECK_THROWS_AS(autV_lift(f.L.get(), sing), error);
  // nonlinear values rejected by autV_lift
  std::vector<LieElement> nonlin = {f.L->gen("x"),
                                    f.L->add(f.L->gen("y"), f.L->bracket(f.L->gen("x"), f.L->bracket(f.L->gen("x"), f.L->gen("y")))),
                                    f.L->gen("z"), f.L->gen("w")};
  CHECK_THROWS_AS(autV_lift(f.L.get(), nonlin), error);
}

TEST_CASE("coordinates raise out_of_subspace for outside derivations") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  // a decomposable but only quadratic-valued degree -1 derivation: d itself
  CHECK_THROWS_AS(v.coordinates(f.d.der()), out_of_subspace);
}

TEST_CASE("aut_action equals gauge on exponentials (property)") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  oracle::Rng rng(2718);
  for (int i = 0; i < 40; ++i) {
    auto th = f.th.scale(rng.coeff())
                  .add(f.thp.scale(rng.coeff()))
                  .add(f.thpp.scale(rng.coeff()));
    Rational al = rng.coeff(), ga = rng.coeff();
    auto point = f.at(al, al, ga);
    CHECK(aut_action(v, exp_derivation(th), point) == gauge(f.d, th, point));
  }
}

TEST_CASE("canonical gauge representative") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  // the gamma coordinate (index of dv in the enumeration basis)
  auto cv = v.coordinates(f.dv);
  int gamma_idx = 0;
  for (size_t i = 0; i < cv.size(); ++i)
    if (cv[i] != 0) gamma_idx = static_cast<int>(i);
  auto point = f.at(rat(3), rat(3), rat(-7, 2));
  auto norm = canonical_gauge_representative(v, point, {f.th}, {gamma_idx});
  CHECK(norm.reduced);
  CHECK(norm.representative == f.at(rat(3), rat(3), rat(0)));
  // already canonical: unchanged
  auto norm2 = canonical_gauge_representative(v, f.at(rat(3), rat(3), rat(0)), {f.th},
                                              {gamma_idx});
  CHECK(norm2.reduced);
  CHECK(norm2.representative == f.at(rat(3), rat(3), rat(0)));
  // wedge: trivial gauge cannot reduce nonzero coordinates
  fixtures::Wedge w;
  auto vw = build_variety(w.d0, DerKind::dder, nullptr);
  auto dd0 = dder_basis(w.L.get(), FiltrationOfV(w.L.get()), 0);
  auto pw = w.at(rat(1), rat(2), rat(0));
  auto cw = vw.coordinates(pw);
  std::vector<int> nonzero;
  for (size_t i = 0; i < cw.size(); ++i)
    if (cw[i] != 0) nonzero.push_back(static_cast<int>(i));
  auto nw = canonical_gauge_representative(vw, pw, dd0.elements, nonzero);
  CHECK(!nw.reduced);
  CHECK(nw.representative == pw);
}

TEST_CASE("orbit invariant reports separate the four wedge classes") {
  fixtures::Wedge f;
  std::vector<Derivation> reps = {f.at(rat(0), rat(0), rat(0)), f.at(rat(1), rat(0), rat(0)),
                                  f.at(rat(0), rat(1), rat(0)), f.at(rat(1), rat(1), rat(0))};
  std::vector<OrbitInvariantReport> reports;
  for (const auto& r : reps) reports.push_back(orbit_invariants(f.d0, r, 1, 8));
  for (size_t i = 0; i < reports.size(); ++i)
    for (size_t j = i + 1; j < reports.size(); ++j)
      CHECK(!(reports[i] == reports[j]));
  // the zero point reports the free algebra dimensions
  for (int k = 1; k <= 8; ++k)
    CHECK(reports[0].homology[k - 1] == f.L->dimension_degree(k));
}

TEST_CASE("reports are invariant under the implemented actions (property)") {
  fixtures::Su6 f;
  auto v = build_variety(f.d, DerKind::sder, nullptr);
  auto A = su6_algebra();
  oracle::Rng rng(515);
  for (int i = 0; i < 6; ++i) {
    Rational al = rng.coeff(), ga = rng.coeff();
    auto point = f.at(al, al, ga);
    auto base = orbit_invariants(f.d, point, 1, 19);
    // gauge
    auto th = f.th.scale(rng.coeff()).add(f.thpp.scale(rng.coeff()));
    CHECK(orbit_invariants(f.d, gauge(f.d, th, point), 1, 19) == base);
    // aut(A)
    Rational s = rat(2);
    std::map<std::string, Rational> lam = {{"a", 1 / s}, {"b", rat(1)}, {"c", 1 / s},
                                           {"p", rat(1)}, {"q", 1 / s}};
    CHECK(orbit_invariants(f.d, autA_action(v, A, lam, point), 1, 19) == base);
  }
  // wedge: invariance under autV lifts
  fixtures::Wedge w;
  auto vw = build_variety(w.d0, DerKind::dder, nullptr);
  for (int i = 0; i < 6; ++i) {
    auto point = w.at(rng.coeff(), rng.coeff(), rng.coeff());
    auto base = orbit_invariants(w.d0, point, 1, 8);
    std::vector<LieElement> swap_vals = {w.L->gen("x"), w.L->gen("y"), w.L->gen("w"),
                                         w.L->gen("z")};
    auto phi = autV_lift(w.L.get(), swap_vals);
    CHECK(orbit_invariants(w.d0, aut_action(vw, phi, point), 1, 8) == base);
  }
}

TEST_CASE("orbit_invariants rejects non-MC points") {
  fixtures::Su6 f;
  CHECK_THROWS_AS(orbit_invariants(f.d, f.at(rat(1), rat(0), rat(0)), 1, 10), error);
}
