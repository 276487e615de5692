#include "dgla/derivation.hpp"

#include <sstream>

#include "dgla/errors.hpp"

namespace dgla {

struct Derivation::Cache {
  std::map<Mono, LieElement> eval;
};

Derivation::Derivation(const FreeLie* alg, int k, std::vector<LieElement> values)
    : alg_(alg), deg_(k), cache_(std::make_shared<Cache>()) {
  if (!alg_) throw error("derivation needs an algebra");
  const auto& gs = alg_->gens();
  if (static_cast<int>(values.size()) != gs.size())
    throw error("derivation needs one value per generator");
  for (int i = 0; i < gs.size(); ++i) {
    const LieElement& v = values[i];
    if (v.algebra() && v.algebra() != alg_)
      throw incompatible_algebra("derivation value from another algebra");
    if (v.is_zero()) continue;
    int d = 0;
    if (!alg_->is_homogeneous(v, &d))
      throw error("derivation value on " + gs[i].name + " is not homogeneous");
    if (d != gs[i].degree + k)
      throw error("derivation value on " + gs[i].name + " has degree " + std::to_string(d) +
                  ", expected " + std::to_string(gs[i].degree + k));
  }
  values_ = std::make_shared<const std::vector<LieElement>>(std::move(values));
}

Derivation Derivation::zero(const FreeLie* alg, int k) {
  std::vector<LieElement> vals(alg->gens().size(), alg->zero());
  return Derivation(alg, k, std::move(vals));
}

bool Derivation::is_zero() const {
  for (const auto& v : *values_)
    if (!v.is_zero()) return false;
  return true;
}

const LieElement& Derivation::eval_mono(Mono m) const {
  auto it = cache_->eval.find(m);
  if (it != cache_->eval.end()) return it->second;
  LieElement res;
  if (alg_->mono_is_square(m)) {
    // theta((1/2)[u,u]) = [theta(u), u]
    Mono base = alg_->mono_left(m);
    LieElement tu = eval_mono(base);
    res = alg_->bracket(tu, LieElement(alg_, {{base, Rational(1)}}));
  } else if (alg_->mono_length(m) == 1) {
    res = (*values_)[alg_->mono_letter(m)];
  } else {
    Mono l = alg_->mono_left(m), r = alg_->mono_right(m);
    LieElement ml(alg_, {{l, Rational(1)}}), mr(alg_, {{r, Rational(1)}});
    // theta([L,R]) = [theta L, R] + (-1)^{|theta||L|}[L, theta R]
    Rational s = ((deg_ & 1) && (alg_->mono_degree(l) & 1)) ? Rational(-1) : Rational(1);
    res = alg_->add(alg_->bracket(eval_mono(l), mr),
                    alg_->scale(s, alg_->bracket(ml, eval_mono(r))));
  }
  auto [mit, ok] = cache_->eval.emplace(m, std::move(res));
  (void)ok;
  return mit->second;
}

LieElement Derivation::evaluate(const LieElement& e) const {
  if (e.algebra() && e.algebra() != alg_)
    throw incompatible_algebra("evaluate: element from another algebra");
  LieElement acc = alg_->zero();
  for (const auto& [m, c] : e.terms())
    acc = alg_->add(acc, alg_->scale(c, eval_mono(m)));
  if (e.truncated()) acc.set_truncated(true);
  return acc;
}

Derivation Derivation::add(const Derivation& o) const {
  if (alg_ != o.alg_ || deg_ != o.deg_)
    throw error("derivation add: mismatched degree/algebra");
  std::vector<LieElement> vals;
  for (int i = 0; i < alg_->gens().size(); ++i) vals.push_back(alg_->add(value(i), o.value(i)));
  return Derivation(alg_, deg_, std::move(vals));
}

Derivation Derivation::sub(const Derivation& o) const {
  if (alg_ != o.alg_ || deg_ != o.deg_)
    throw error("derivation sub: mismatched degree/algebra");
  std::vector<LieElement> vals;
  for (int i = 0; i < alg_->gens().size(); ++i) vals.push_back(alg_->sub(value(i), o.value(i)));
  return Derivation(alg_, deg_, std::move(vals));
}

Derivation Derivation::scale(const Rational& c) const {
  std::vector<LieElement> vals;
  for (int i = 0; i < alg_->gens().size(); ++i) vals.push_back(alg_->scale(c, value(i)));
  return Derivation(alg_, deg_, std::move(vals));
}

bool Derivation::values_in_word_length_at_least(int n) const {
  for (const auto& v : *values_) {
    if (v.is_zero()) continue;
    if (alg_->min_word_length(v) < n) return false;
  }
  return true;
}

bool Derivation::raises_weight() const {
  const auto& gs = alg_->gens();
  for (int i = 0; i < gs.size(); ++i) {
    const auto& v = value(i);
    int gw = gs[i].degree - gs[i].upper;
    for (const auto& [m, c] : v.terms())
      if (alg_->mono_weight(m) <= gw) return false;
  }
  return true;
}

bool Derivation::operator==(const Derivation& o) const {
  if (alg_ != o.alg_ || deg_ != o.deg_) return false;
  for (int i = 0; i < alg_->gens().size(); ++i)
    if (value(i) != o.value(i)) return false;
  return true;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->gens().size(); ++i) {
    if (value(i).is_zero()) continue;
    if (!first) os << "; ";
    first = false;
    os << alg_->gens()[i].name << " -> " << alg_->to_string(value(i));
  }
  if (first) os << "0";
  return os.str();
}

Derivation der_bracket(const Derivation& a, const Derivation& b) {
  if (a.algebra() != b.algebra()) throw incompatible_algebra("der_bracket");
  const FreeLie* L = a.algebra();
  // [a,b] = a o b - (-1)^{|a||b|} b o a
  Rational s = ((a.degree() & 1) && (b.degree() & 1)) ? Rational(1) : Rational(-1);
  std::vector<LieElement> vals;
  for (int i = 0; i < L->gens().size(); ++i)
    vals.push_back(L->add(a.evaluate(b.value(i)), L->scale(s, b.evaluate(a.value(i)))));
  return Derivation(L, a.degree() + b.degree(), std::move(vals));
}

Differential::Differential(Derivation d, bool validate) : d_(std::move(d)) {
  if (d_.degree() != -1) throw error("a differential must have degree -1");
  if (validate && !is_differential(d_)) throw error("derivation does not square to zero");
}

Differential Differential::zero(const FreeLie* alg) {
  return Differential(Derivation::zero(alg, -1), false);
}

bool Differential::decomposable() const { return d_.values_in_word_length_at_least(2); }

bool Differential::quadratic() const {
  if (!decomposable()) return false;
  for (const auto& v : d_.values()) {
    for (const auto& [m, c] : v.terms())
      if (d_.algebra()->mono_length(m) != 2) return false;
  }
  return true;
}

Derivation boundary(const Differential& d, const Derivation& theta) {
  return der_bracket(d.der(), theta);
}

bool is_differential(const Derivation& delta) {
  if (delta.degree() != -1) throw error("is_differential: degree must be -1");
  const FreeLie* L = delta.algebra();
  for (int i = 0; i < L->gens().size(); ++i) {
    LieElement vv = delta.evaluate(delta.value(i));
    if (vv.truncated())
      throw window_error("is_differential: window too small to decide");
    if (!vv.is_zero()) return false;
  }
  return true;
}

Derivation perturb(const Differential& d, const LieElement& a) {
  const FreeLie* L = d.algebra();
  if (!a.is_zero() && L->degree_of(a) != -1)
    throw error("perturb: element must have degree -1");
  std::vector<LieElement> vals;
  for (int i = 0; i < L->gens().size(); ++i)
    vals.push_back(L->add(d.der().value(i), L->bracket(a, L->gen(i))));
  return Derivation(L, -1, std::move(vals));
}

bool mc_check(const Differential& d, const LieElement& a) {
  const FreeLie* L = d.algebra();
  if (!a.is_zero() && L->degree_of(a) != -1)
    throw error("mc_check: element must have degree -1");
  LieElement res = L->add(d.apply(a), L->scale(Rational(1, 2), L->bracket(a, a)));
  if (res.truncated()) throw window_error("mc_check: window too small to decide");
  return res.is_zero();
}

Derivation perturb(const Differential& d, const Derivation& a) {
  if (a.degree() != -1) throw error("perturb: derivation must have degree -1");
  return d.der().add(a);
}

bool mc_check(const Differential& d, const Derivation& a) {
  if (a.degree() != -1) throw error("mc_check: derivation must have degree -1");
  Derivation res = boundary(d, a).add(der_bracket(a, a).scale(Rational(1, 2)));
  return res.is_zero();
}

}  // namespace dgla
