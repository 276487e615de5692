#include "dgla/automorphism.hpp"

#include <map>

#include "dgla/errors.hpp"
#include "dgla/linalg.hpp"

namespace dgla {

struct Automorphism::Cache {
  std::map<Mono, LieElement> apply;
};

Automorphism::Automorphism(const FreeLie* alg, std::vector<LieElement> values)
    : alg_(alg), cache_(std::make_shared<Cache>()) {
  if (!alg_) throw error("automorphism needs an algebra");
  const auto& gs = alg_->gens();
  if (static_cast<int>(values.size()) != gs.size())
    throw error("automorphism needs one value per generator");
  for (int i = 0; i < gs.size(); ++i) {
    const LieElement& v = values[i];
    if (v.algebra() && v.algebra() != alg_)
      throw incompatible_algebra("automorphism value from another algebra");
    int d = 0;
    if (v.is_zero() || !alg_->is_homogeneous(v, &d) || d != gs[i].degree)
      throw error("automorphism value on " + gs[i].name +
                  " must be homogeneous of the generator's degree");
  }
  values_ = std::make_shared<const std::vector<LieElement>>(std::move(values));
  // invertibility witness: the linear part must be invertible in each degree
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < gs.size(); ++i) by_degree[gs[i].degree].push_back(i);
  for (const auto& [d, idx] : by_degree) {
    int k = static_cast<int>(idx.size());
    DenseMat m(k, k);
    for (int j = 0; j < k; ++j) {
      LieElement lin = linear_part(idx[j]);
      for (const auto& [mono, c] : lin.terms()) {
        int g = alg_->mono_letter(mono);
        for (int i = 0; i < k; ++i)
          if (idx[i] == g) m.at(i, j) = c;
      }
    }
    if (rank(std::move(m)) < k)
      throw error("automorphism linear part is singular in degree " + std::to_string(d));
  }
}

Automorphism Automorphism::identity(const FreeLie* alg) {
  std::vector<LieElement> vals;
  for (int i = 0; i < alg->gens().size(); ++i) vals.push_back(alg->gen(i));
  return Automorphism(alg, std::move(vals));
}

LieElement Automorphism::linear_part(int i) const { return alg_->component(value(i), 1); }

bool Automorphism::is_identity() const {
  for (int i = 0; i < alg_->gens().size(); ++i)
    if (value(i) != alg_->gen(i)) return false;
  return true;
}

bool Automorphism::unipotent() const {
  for (int i = 0; i < alg_->gens().size(); ++i)
    if (linear_part(i) != alg_->gen(i)) return false;
  return true;
}

bool Automorphism::raises_weight_by_one() const {
  const auto& gs = alg_->gens();
  for (int i = 0; i < gs.size(); ++i) {
    LieElement dev = alg_->sub(value(i), alg_->gen(i));
    int gw = gs[i].degree - gs[i].upper;
    for (const auto& [m, c] : dev.terms())
      if (alg_->mono_weight(m) <= gw) return false;
  }
  return true;
}

LieElement Automorphism::apply_mono(Mono m) const {
  auto it = cache_->apply.find(m);
  if (it != cache_->apply.end()) return it->second;
  LieElement res;
  if (alg_->mono_is_square(m)) {
    Mono base = alg_->mono_left(m);
    LieElement fb = apply_mono(base);
    res = alg_->scale(Rational(1, 2), alg_->bracket(fb, fb));
  } else if (alg_->mono_length(m) == 1) {
    res = (*values_)[alg_->mono_letter(m)];
  } else {
    res = alg_->bracket(apply_mono(alg_->mono_left(m)), apply_mono(alg_->mono_right(m)));
  }
  cache_->apply.emplace(m, res);
  return res;
}

LieElement Automorphism::apply(const LieElement& e) const {
  if (e.algebra() && e.algebra() != alg_)
    throw incompatible_algebra("apply: element from another algebra");
  LieElement acc = alg_->zero();
  for (const auto& [m, c] : e.terms()) acc = alg_->add(acc, alg_->scale(c, apply_mono(m)));
  if (e.truncated()) acc.set_truncated(true);
  return acc;
}

bool Automorphism::operator==(const Automorphism& o) const {
  if (alg_ != o.alg_) return false;
  for (int i = 0; i < alg_->gens().size(); ++i)
    if (value(i) != o.value(i)) return false;
  return true;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.algebra() != g.algebra()) throw incompatible_algebra("compose");
  const FreeLie* L = f.algebra();
  std::vector<LieElement> vals;
  for (int i = 0; i < L->gens().size(); ++i) vals.push_back(f.apply(g.value(i)));
  return Automorphism(L, std::move(vals));
}

Automorphism inverse(const Automorphism& f) {
  const FreeLie* L = f.algebra();
  const auto& gs = L->gens();
  // linear part inverse, degree by degree
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < gs.size(); ++i) by_degree[gs[i].degree].push_back(i);
  std::vector<LieElement> psi1(gs.size(), L->zero());
  for (const auto& [d, idx] : by_degree) {
    int k = static_cast<int>(idx.size());
    DenseMat m(k, k);
    for (int j = 0; j < k; ++j) {
      LieElement lin = f.linear_part(idx[j]);
      for (const auto& [mono, c] : lin.terms()) {
        int g = L->mono_letter(mono);
        for (int i = 0; i < k; ++i)
          if (idx[i] == g) m.at(i, j) = c;
      }
    }
    auto inv = inverse(std::move(m));
    if (!inv) throw error("inverse: linear part singular");
    for (int j = 0; j < k; ++j) {
      LieElement v = L->zero();
      for (int i = 0; i < k; ++i)
        if (inv->at(i, j) != 0) v = L->add(v, L->scale(inv->at(i, j), L->gen(idx[i])));
      psi1[idx[j]] = v;
    }
  }
  Automorphism lin_inv(L, psi1);
  // order-by-order correction: G_n(v) = -psi1_*( (f(G(v)))_n )
  std::vector<LieElement> g = psi1;
  for (int n = 2; n <= L->window().max_word_length; ++n) {
    bool any = false;
    for (int i = 0; i < gs.size(); ++i) {
      LieElement r = f.apply(g[i]);
      LieElement rn = L->component(r, n);
      if (rn.is_zero()) continue;
      any = true;
      g[i] = L->sub(g[i], lin_inv.apply(rn));
    }
    if (!any && n > 2) break;
  }
  Automorphism ginv(L, std::move(g));
  for (int i = 0; i < gs.size(); ++i) {
    LieElement check = f.apply(ginv.value(i));
    if (check.truncated() || check != L->gen(i))
      throw window_error("inverse: verification failed inside the window");
  }
  return ginv;
}

Automorphism exp_derivation(const Derivation& theta) {
  if (theta.degree() != 0) throw error("exp: derivation must have degree 0");
  const FreeLie* L = theta.algebra();
  const auto& gs = L->gens();
  int guard = L->window().max_word_length + 2;
  std::vector<LieElement> vals;
  for (int i = 0; i < gs.size(); ++i) {
    LieElement acc = L->gen(i);
    LieElement term = acc;
    int k = 0;
    while (true) {
      ++k;
      term = L->scale(Rational(1, k), theta.evaluate(term));
      if (term.is_zero()) break;
      if (k > guard)
        throw termination_error("exp: series on generator '" + gs[i].name +
                                "' does not terminate in the window");
      acc = L->add(acc, term);
    }
    vals.push_back(acc);
  }
  return Automorphism(L, std::move(vals));
}

Derivation log_automorphism(const Automorphism& f, FiltrationKind kind) {
  const FreeLie* L = f.algebra();
  const auto& gs = L->gens();
  bool certified = (kind == FiltrationKind::word_length) ? f.unipotent()
                                                         : f.raises_weight_by_one();
  int guard = L->window().max_degree + L->window().max_word_length + 4;
  auto nu = [&](const LieElement& e) { return L->sub(f.apply(e), e); };
  std::vector<LieElement> vals;
  for (int i = 0; i < gs.size(); ++i) {
    LieElement acc = L->zero();
    LieElement power = nu(L->gen(i));
    int k = 1;
    while (!power.is_zero()) {
      Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
      acc = L->add(acc, L->scale(c, power));
      ++k;
      if (k > guard) {
        if (!certified)
          throw termination_error("log: f - id is not filtration-raising and the series "
                                  "does not terminate in the window");
        throw window_error("log: series exceeded the window");
      }
      power = nu(power);
    }
    vals.push_back(acc);
  }
  return Derivation(L, 0, std::move(vals));
}

Derivation bch(const Derivation& a, const Derivation& b) {
  return log_automorphism(compose(exp_derivation(a), exp_derivation(b)));
}

namespace {

// word-length-truncated tensor arithmetic for bch_elements
TensorElem t_mul_trunc(const TensorElem& x, const TensorElem& y, int maxlen, bool& trunc) {
  TensorElem out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      if (static_cast<int>(wx.size() + wy.size()) > maxlen) {
        trunc = true;
        continue;
      }
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      Rational nv = out[w] + cx * cy;
      if (nv == 0) out.erase(w); else out[w] = nv;
    }
  return out;
}

void t_axpy(TensorElem& dst, const Rational& c, const TensorElem& src) {
  for (const auto& [w, v] : src) {
    Rational nv = dst[w] + c * v;
    if (nv == 0) dst.erase(w); else dst[w] = nv;
  }
}

TensorElem t_exp(const TensorElem& x, int maxlen, bool& trunc) {
  TensorElem acc;
  acc[Word{}] = Rational(1);
  TensorElem power = acc;
  mpz_class fact = 1;
  for (int k = 1; k <= maxlen; ++k) {
    power = t_mul_trunc(power, x, maxlen, trunc);
    if (power.empty()) break;
    fact *= k;
    t_axpy(acc, Rational(mpz_class(1), fact), power);
  }
  return acc;
}

}  // namespace

LieElement bch_elements(const LieElement& x, const LieElement& y) {
  const FreeLie* L = x.algebra() ? x.algebra() : y.algebra();
  if (!L) return LieElement();
  if ((!x.is_zero() && L->degree_of(x) != 0) || (!y.is_zero() && L->degree_of(y) != 0))
    throw error("bch: elements must have degree 0");
  int W = L->window().max_word_length;
  bool trunc = x.truncated() || y.truncated();
  TensorElem prod = t_mul_trunc(t_exp(L->tensor_expand(x), W, trunc),
                                t_exp(L->tensor_expand(y), W, trunc), W, trunc);
  // u = prod - 1; log(1+u) = sum (-1)^{k+1} u^k / k
  TensorElem u = prod;
  auto one = u.find(Word{});
  if (one != u.end()) {
    Rational c = one->second - 1;
    if (c == 0) u.erase(one); else one->second = c;
  } else {
    u[Word{}] = Rational(-1);
  }
  TensorElem acc, power = u;
  for (int k = 1; k <= W && !power.empty(); ++k) {
    t_axpy(acc, (k % 2 == 1) ? Rational(1, k) : Rational(-1, k), power);
    power = t_mul_trunc(power, u, W, trunc);
  }
  LieElement out = L->dynkin(acc);
  if (trunc) out.set_truncated(true);
  return out;
}

namespace {

// sum_{i>=0} ad_x^i(a)/i!  -  sum_{i>=0} ad_x^i(dx)/(i+1)!
template <typename T, typename BracketFn, typename AddFn, typename ScaleFn, typename ZeroFn>
T gauge_series(const T& x, const T& a, const T& dx, int guard, BracketFn br, AddFn add,
               ScaleFn scl, ZeroFn is_zero) {
  T acc = a;
  T term = a;
  mpz_class fact = 1;
  for (int i = 1; !is_zero(term); ++i) {
    if (i > guard) throw termination_error("gauge: series does not terminate in the window");
    term = br(x, term);
    fact *= i;
    if (is_zero(term)) break;
    acc = add(acc, scl(Rational(mpz_class(1), fact), term));
  }
  T t2 = dx;
  mpz_class fact2 = 1;
  for (int i = 0; !is_zero(t2); ++i) {
    if (i > guard) throw termination_error("gauge: series does not terminate in the window");
    fact2 = fact2 * (i + 1);
    acc = add(acc, scl(Rational(mpz_class(-1), fact2), t2));
    t2 = br(x, t2);
  }
  return acc;
}

}  // namespace

Derivation gauge(const Differential& d, const Derivation& x, const Derivation& a) {
  if (x.degree() != 0) throw error("gauge: x must have degree 0");
  if (a.degree() != -1) throw error("gauge: a must have degree -1");
  const FreeLie* L = x.algebra();
  int guard = L->window().max_word_length + 4;
  Derivation dx = boundary(d, x);
  return gauge_series<Derivation>(
      x, a, dx, guard,
      [](const Derivation& p, const Derivation& q) { return der_bracket(p, q); },
      [](const Derivation& p, const Derivation& q) { return p.add(q); },
      [](const Rational& c, const Derivation& p) { return p.scale(c); },
      [](const Derivation& p) { return p.is_zero(); });
}

LieElement gauge_element(const Differential& d, const LieElement& x, const LieElement& a) {
  const FreeLie* L = d.algebra();
  if (!x.is_zero() && L->degree_of(x) != 0) throw error("gauge: x must have degree 0");
  if (!a.is_zero() && L->degree_of(a) != -1) throw error("gauge: a must have degree -1");
  int guard = L->window().max_word_length + 4;
  LieElement dx = d.apply(x);
  LieElement res = gauge_series<LieElement>(
      x, a, dx, guard,
      [L](const LieElement& p, const LieElement& q) { return L->bracket(p, q); },
      [L](const LieElement& p, const LieElement& q) { return L->add(p, q); },
      [L](const Rational& c, const LieElement& p) { return L->scale(c, p); },
      [](const LieElement& p) { return p.is_zero(); });
  if (res.truncated()) throw termination_error("gauge: window truncated the series");
  return res;
}

bool gauge_witness_check(const Differential& d, const Derivation& theta,
                         const Derivation& delta, const Derivation& eta) {
  const FreeLie* L = d.algebra();
  Automorphism e = exp_derivation(theta);
  Derivation d_eta = d.der().add(eta);
  Derivation d_delta = d.der().add(delta);
  bool ok = true;
  for (int i = 0; i < L->gens().size(); ++i) {
    LieElement lhs = d_eta.evaluate(e.value(i));
    LieElement rhs = e.apply(d_delta.value(i));
    if (lhs.truncated() || rhs.truncated())
      throw window_error("gauge_witness_check: window too small");
    if (lhs != rhs) { ok = false; break; }
  }
  if (ok) {
    // an intertwining witness forces eta to be the gauge transform of delta
    try {
      Derivation g = gauge(d, theta, delta);
      if (!(g == eta))
        throw error("internal: witness check and gauge action disagree");
    } catch (const termination_error&) {
      // the gauge series may need a larger window than the witness check
    }
  }
  return ok;
}

}  // namespace dgla
