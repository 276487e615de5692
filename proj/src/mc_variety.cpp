#include "dgla/mc_variety.hpp"

#include <sstream>

#include "dgla/errors.hpp"

namespace dgla {

bool QuadraticSystem::identically_zero() const {
  for (const auto& p : polynomials)
    if (!p.empty()) return false;
  return true;
}

Rational QuadraticSystem::eval(size_t p, const std::vector<Rational>& alpha) const {
  Rational v = 0;
  for (const auto& t : polynomials[p]) {
    Rational m = t.coeff;
    for (int i : t.vars) m *= alpha.at(i);
    v += m;
  }
  return v;
}

bool QuadraticSystem::vanishes_at(const std::vector<Rational>& alpha) const {
  if (alpha.size() != variables.size())
    throw error("mc_points_check: expected " + std::to_string(variables.size()) +
                " coordinates, got " + std::to_string(alpha.size()));
  for (size_t p = 0; p < polynomials.size(); ++p)
    if (eval(p, alpha) != 0) return false;
  return true;
}

std::string QuadraticSystem::text() const {
  std::ostringstream os;
  for (size_t p = 0; p < polynomials.size(); ++p) {
    os << "P" << (p + 1) << " =";
    if (polynomials[p].empty()) {
      os << " 0";
    } else {
      bool first = true;
      for (const auto& t : polynomials[p]) {
        Rational c = t.coeff;
        bool neg = c < 0;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        first = false;
        Rational a = neg ? Rational(-c) : c;
        bool needs_coeff = (a != 1);
        if (needs_coeff) os << rat_str(a) << "*";
        for (size_t i = 0; i < t.vars.size(); ++i) {
          if (i) os << "*";
          os << variables[t.vars[i]];
        }
      }
    }
    os << "\n";
  }
  return os.str();
}

MCVariety::MCVariety(Differential d, DerKind kind, std::vector<Derivation> m1,
                     std::vector<Derivation> m2)
    : d_(std::move(d)), kind_(kind), m1_(std::move(m1)), m2_(std::move(m2)) {
  const int s = static_cast<int>(m1_.size());
  DerCoords dc;
  SpanSolver span2;
  for (const auto& sg : m2_) span2.add(dc.coords(sg));
  sys_.polynomials.assign(m2_.size(), {});
  sys_.variables.clear();
  for (int i = 0; i < s; ++i) {
    sys_.variables.push_back("a" + std::to_string(i + 1));
    sys_.legend.push_back(m1_[i].to_string());
  }
  auto coords_in_m2 = [&](const Derivation& th, const char* what) {
    auto c = span2.coordinates(dc.coords(th));
    if (!c)
      throw out_of_subspace(std::string(what) +
                            " leaves the span of the degree -2 basis (family not closed)");
    c->resize(m2_.size());
    return *c;
  };
  // linear part: [d, d_i]
  for (int i = 0; i < s; ++i) {
    Derivation Di = boundary(d_, m1_[i]);
    if (Di.is_zero()) continue;
    auto mu = coords_in_m2(Di, "[d, basis]");
    for (size_t l = 0; l < m2_.size(); ++l)
      if (mu[l] != 0) sys_.polynomials[l].push_back({mu[l], {i}});
  }
  // quadratic part: (1/2)[delta, delta] -> q_ij = lambda_ij (i<j), q_ii = lambda_ii/2
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      Derivation br = der_bracket(m1_[i], m1_[j]);
      if (br.is_zero()) continue;
      auto lam = coords_in_m2(br, "[basis, basis]");
      Rational f = (i == j) ? Rational(1, 2) : Rational(1);
      for (size_t l = 0; l < m2_.size(); ++l)
        if (lam[l] != 0) sys_.polynomials[l].push_back({f * lam[l], {i, j}});
    }
  }
}

Derivation MCVariety::assemble(const std::vector<Rational>& alpha) const {
  if (alpha.size() != m1_.size()) throw error("assemble: coordinate count mismatch");
  const FreeLie* L = d_.algebra();
  Derivation out = Derivation::zero(L, -1);
  for (size_t i = 0; i < m1_.size(); ++i)
    if (alpha[i] != 0) out = out.add(m1_[i].scale(alpha[i]));
  return out;
}

std::vector<Rational> MCVariety::coordinates(const Derivation& delta) const {
  DerCoords dc;
  SpanSolver span;
  for (const auto& b : m1_) span.add(dc.coords(b));
  auto c = span.coordinates(dc.coords(delta));
  if (!c) throw out_of_subspace("derivation lies outside the degree -1 basis span");
  c->resize(m1_.size());
  return *c;
}

bool MCVariety::mc_points_check(const std::vector<Rational>& alpha) const {
  return sys_.vanishes_at(alpha);
}

MCVariety build_variety(const Differential& d, DerKind kind, const FiltrationOfV* filt) {
  const FreeLie* L = d.algebra();
  std::vector<Derivation> m1, m2;
  switch (kind) {
    case DerKind::dder: {
      FiltrationOfV trivial(L);
      const FiltrationOfV& f = filt ? *filt : trivial;
      m1 = dder_basis(L, f, -1).elements;
      m2 = dder_basis(L, f, -2).elements;
      break;
    }
    case DerKind::sder:
      m1 = sder_basis(L, -1).elements;
      m2 = sder_basis(L, -2).elements;
      break;
    case DerKind::weight_raising:
      m1 = weight_raising_basis(L, -1).elements;
      m2 = weight_raising_basis(L, -2).elements;
      break;
    case DerKind::full:
      m1 = der_basis(L, -1).elements;
      m2 = der_basis(L, -2).elements;
      break;
  }
  return MCVariety(d, kind, std::move(m1), std::move(m2));
}

}  // namespace dgla
