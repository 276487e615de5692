#include "dgla/free_lie.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dgla/errors.hpp"

namespace dgla {

namespace {

bool oddp(int d) { return d & 1; }

// dst += c * src (sorted by monomial id)
void term_axpy(TermVec& dst, const Rational& c, const TermVec& src) {
  if (c == 0 || src.empty()) return;
  TermVec out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, c * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second + c * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i; ++j;
    }
  }
  dst = std::move(out);
}

void term_scale(TermVec& t, const Rational& c) {
  if (c == 0) { t.clear(); return; }
  for (auto& [m, v] : t) v *= c;
}

}  // namespace

int word_cmp(const Word& a, const Word& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;  // prefix < extension
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw error("generator set must be nonempty");
  if (gens_.size() > 200) throw error("too many generators");
  min_degree_ = gens_[0].degree;
  max_degree_ = gens_[0].degree;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree < 0) throw error("generator degree must be >= 0: " + gens_[i].name);
    for (size_t j = 0; j < i; ++j)
      if (gens_[j].name == gens_[i].name)
        throw error("duplicate generator name: " + gens_[i].name);
    min_degree_ = std::min(min_degree_, gens_[i].degree);
    max_degree_ = std::max(max_degree_, gens_[i].degree);
  }
}

std::optional<int> GeneratorSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

FreeLie::FreeLie(GeneratorSet gens, Window win) : gens_(std::move(gens)), win_(win) {
  if (win_.max_degree < gens_.max_degree())
    throw window_error("window max degree excludes a generator");
  if (!gens_.simply_positive()) {
    if (win_.max_word_length < 1)
      throw window_error("degree-0 generators require an explicit word-length bound");
  } else if (win_.max_word_length < 1) {
    win_.max_word_length = win_.max_degree;  // word length <= degree when degrees >= 1
  }
}

void FreeLie::check_same(const LieElement& a, const LieElement& b) const {
  if ((a.algebra() && a.algebra() != this) || (b.algebra() && b.algebra() != this))
    throw incompatible_algebra("elements belong to different algebras");
}

bool FreeLie::word_is_lyndon(const Word& w) const {
  // w strictly smaller than every proper suffix
  for (size_t i = 1; i < w.size(); ++i) {
    Word suf(w.begin() + i, w.end());
    if (word_cmp(w, suf) >= 0) return false;
  }
  return true;
}

int FreeLie::least_proper_suffix(const Word& w) const {
  assert(w.size() >= 2);
  int best = 1;
  for (int i = 2; i < static_cast<int>(w.size()); ++i) {
    // compare suffix(i) vs suffix(best)
    Word a(w.begin() + i, w.end()), b(w.begin() + best, w.end());
    if (word_cmp(a, b) < 0) best = i;
  }
  return best;
}

Mono FreeLie::intern_lyndon(const Word& w) const {
  auto key = std::make_pair(false, w);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  if (!word_is_lyndon(w)) throw error("internal: non-Lyndon word interned");
  MonoData md;
  md.word = w;
  md.length = static_cast<std::int16_t>(w.size());
  md.degree = 0;
  md.upper = 0;
  for (auto g : w) {
    md.degree += gens_[g].degree;
    md.upper += gens_[g].upper;
  }
  if (w.size() >= 2) {
    int split = least_proper_suffix(w);
    Word left(w.begin(), w.begin() + split), right(w.begin() + split, w.end());
    md.left = intern_lyndon(left);
    md.right = intern_lyndon(right);
  }
  Mono id = static_cast<Mono>(monos_.size());
  monos_.push_back(std::move(md));
  intern_.emplace(std::move(key), id);
  return id;
}

Mono FreeLie::intern_square(Mono base) const {
  const MonoData& b = monos_[base];
  assert(!b.square && oddp(b.degree));
  auto key = std::make_pair(true, b.word);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;
  MonoData md;
  md.word = b.word;
  md.square = true;
  md.left = md.right = base;
  md.length = static_cast<std::int16_t>(2 * b.length);
  md.degree = 2 * b.degree;
  md.upper = 2 * b.upper;
  Mono id = static_cast<Mono>(monos_.size());
  monos_.push_back(std::move(md));
  intern_.emplace(std::move(key), id);
  return id;
}

void FreeLie::gen_lyndon_cell(int n, int d, std::vector<Mono>& out) const {
  const int k = gens_.size();
  std::vector<int> deg(k);
  int mindeg = gens_.min_degree(), maxdeg = gens_.max_degree();
  for (int i = 0; i < k; ++i) deg[i] = gens_[i].degree;
  Word w(static_cast<size_t>(n) + 1);
  // Duval-style generation of Lyndon words of length n, pruned by degree.
  auto rec = [&](auto&& self, int t, int p, int partial) -> void {
    if (t > n) {
      if (p == n && partial == d) {
        Word word(w.begin() + 1, w.end());
        out.push_back(intern_lyndon(word));
      }
      return;
    }
    int rest = n - t + 1;
    if (partial + rest * mindeg > d || partial + rest * maxdeg < d) return;
    w[t] = w[t - p];
    self(self, t + 1, p, partial + deg[w[t]]);
    for (int c = w[t - p] + 1; c < k; ++c) {
      w[t] = static_cast<std::uint8_t>(c);
      self(self, t + 1, t, partial + deg[c]);
    }
  };
  w[0] = 0;
  rec(rec, 1, 1, 0);
}

const std::vector<Mono>& FreeLie::cell(int n, int d) const {
  auto key = std::make_pair(n, d);
  auto it = cells_.find(key);
  if (it != cells_.end()) return it->second;
  std::vector<Mono> lyn;
  if (cell_in_window(n, d) && d >= 0) gen_lyndon_cell(n, d, lyn);
  std::vector<Mono> sq;
  if (cell_in_window(n, d) && n % 2 == 0 && d % 2 == 0 && oddp(d / 2)) {
    for (Mono m : cell(n / 2, d / 2))
      if (!monos_[m].square) sq.push_back(intern_square(m));
  }
  // merge by effective word (square's effective word is u.u)
  std::vector<Mono> merged;
  merged.reserve(lyn.size() + sq.size());
  auto eff = [&](Mono m) {
    const MonoData& md = monos_[m];
    if (!md.square) return md.word;
    Word ww = md.word;
    ww.insert(ww.end(), md.word.begin(), md.word.end());
    return ww;
  };
  size_t i = 0, j = 0;
  while (i < lyn.size() || j < sq.size()) {
    if (j == sq.size()) merged.push_back(lyn[i++]);
    else if (i == lyn.size()) merged.push_back(sq[j++]);
    else merged.push_back(word_cmp(eff(lyn[i]), eff(sq[j])) < 0 ? lyn[i++] : sq[j++]);
  }
  auto [cit, ok] = cells_.emplace(key, std::move(merged));
  (void)ok;
  return cit->second;
}

void FreeLie::nf_apply_mono(Mono m, const TermVec& src, const Rational& c, TermVec& dst) const {
  for (const auto& [mi, ci] : src) {
    const TermVec& t = nf_pair(m, mi);
    term_axpy(dst, c * ci, t);
  }
}

const TermVec& FreeLie::nf_pair(Mono a, Mono b) const {
  std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = nf_memo_.find(key);
  if (it != nf_memo_.end()) return it->second;
  if (!nf_state_.emplace(key, 1).second)
    throw error("internal: bracket rewriting cycle");
  // Copy what we need: recursive calls may intern and reallocate monos_.
  const bool a_sq = monos_[a].square, b_sq = monos_[b].square;
  const Mono a_left = monos_[a].left, a_right = monos_[a].right;
  const Mono b_left = monos_[b].left;
  const int a_deg = monos_[a].degree, b_deg = monos_[b].degree;
  TermVec res;
  if (a_sq) {
    bool same_base = b_sq ? (b_left == a_left) : (b == a_left);
    if (!same_base) {
      // [S_u, X] = [u, [u, X]]
      TermVec inner = nf_pair(a_left, b);
      nf_apply_mono(a_left, inner, Rational(1), res);
    }
  } else if (b_sq) {
    if (a != b_left) {
      // [X, S_v] = -[S_v, X]  (squares have even degree)
      res = nf_pair(b, a);
      term_scale(res, Rational(-1));
    }
  } else {
    int cmp = word_cmp(monos_[a].word, monos_[b].word);
    if (cmp == 0) {
      if (oddp(a_deg)) res = {{intern_square(a), Rational(2)}};
    } else if (cmp > 0) {
      // [A,B] = -(-1)^{|A||B|}[B,A]
      res = nf_pair(b, a);
      term_scale(res, (oddp(a_deg) && oddp(b_deg)) ? Rational(1) : Rational(-1));
    } else {
      Word w = monos_[a].word;
      const Word& bw = monos_[b].word;
      size_t alen = w.size();
      w.insert(w.end(), bw.begin(), bw.end());
      int split = least_proper_suffix(w);
      if (split == static_cast<int>(alen)) {
        res = {{intern_lyndon(w), Rational(1)}};
      } else {
        // A = [A1,A2] standard; [[A1,A2],B] = [A1,[A2,B]] - (-1)^{|A1||A2|}[A2,[A1,B]]
        assert(a_left != kNoMono);
        const int a1_deg = monos_[a_left].degree, a2_deg = monos_[a_right].degree;
        TermVec r1, r2;
        {
          TermVec t1 = nf_pair(a_right, b);
          nf_apply_mono(a_left, t1, Rational(1), r1);
        }
        {
          TermVec t2 = nf_pair(a_left, b);
          nf_apply_mono(a_right, t2, Rational(1), r2);
        }
        Rational s = (oddp(a1_deg) && oddp(a2_deg)) ? Rational(1) : Rational(-1);
        term_axpy(r1, s, r2);
        res = std::move(r1);
      }
    }
  }
  nf_state_.erase(key);
  auto [mit, ok] = nf_memo_.emplace(key, std::move(res));
  (void)ok;
  return mit->second;
}

TermVec FreeLie::bracket_terms(const TermVec& a, const TermVec& b, bool& truncated) const {
  TermVec res;
  for (const auto& [ma, ca] : a) {
    const int alen = monos_[ma].length, adeg = monos_[ma].degree;
    for (const auto& [mb, cb] : b) {
      int n = alen + monos_[mb].length, d = adeg + monos_[mb].degree;
      if (!cell_in_window(n, d)) {
        truncated = true;
        continue;
      }
      term_axpy(res, ca * cb, nf_pair(ma, mb));
    }
  }
  return res;
}

std::vector<LieElement> FreeLie::basis(int n, int d) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (!cell_in_window(n, d))
    throw window_error("basis cell (" + std::to_string(n) + "," + std::to_string(d) +
                       ") outside window");
  std::vector<LieElement> out;
  for (Mono m : cell(n, d)) {
    Rational c = monos_[m].square ? Rational(2) : Rational(1);
    out.push_back(LieElement(this, {{m, c}}));
  }
  return out;
}

int FreeLie::dimension(int n, int d) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (!cell_in_window(n, d))
    throw window_error("dimension cell outside window");
  return static_cast<int>(cell(n, d).size());
}

int FreeLie::dimension_degree(int d) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int total = 0;
  for (int n = 1; n <= win_.max_word_length; ++n) {
    if (gens_.min_degree() >= 1 && n > d) break;
    if (cell_in_window(n, d)) total += static_cast<int>(cell(n, d).size());
  }
  return total;
}

std::vector<Rational> FreeLie::express(const LieElement& e, int n, int d) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const auto& c = cell(n, d);
  std::vector<Rational> coords(c.size());
  std::map<Mono, int> pos;
  for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<int>(i);
  for (const auto& [m, coeff] : e.terms()) {
    auto it = pos.find(m);
    if (it == pos.end())
      throw error("express: element is not homogeneous of bidegree (" + std::to_string(n) +
                  "," + std::to_string(d) + ")");
    coords[it->second] = monos_[m].square ? coeff / 2 : coeff;
  }
  return coords;
}

LieElement FreeLie::gen(int i) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (i < 0 || i >= gens_.size()) throw error("generator index out of range");
  Mono m = intern_lyndon(Word{static_cast<std::uint8_t>(i)});
  return LieElement(this, {{m, Rational(1)}});
}

LieElement FreeLie::gen(const std::string& name) const {
  auto idx = gens_.index_of(name);
  if (!idx) throw error("unknown generator: " + name);
  return gen(*idx);
}

LieElement FreeLie::add(const LieElement& a, const LieElement& b) const {
  check_same(a, b);
  TermVec t = a.terms();
  term_axpy(t, Rational(1), b.terms());
  return LieElement(this, std::move(t), a.truncated() || b.truncated());
}

LieElement FreeLie::sub(const LieElement& a, const LieElement& b) const {
  check_same(a, b);
  TermVec t = a.terms();
  term_axpy(t, Rational(-1), b.terms());
  return LieElement(this, std::move(t), a.truncated() || b.truncated());
}

LieElement FreeLie::scale(const Rational& c, const LieElement& a) const {
  TermVec t = a.terms();
  term_scale(t, c);
  return LieElement(this, std::move(t), a.truncated());
}

LieElement FreeLie::bracket(const LieElement& a, const LieElement& b) const {
  check_same(a, b);
  std::lock_guard<std::recursive_mutex> lk(mu_);
  bool trunc = a.truncated() || b.truncated();
  TermVec t = bracket_terms(a.terms(), b.terms(), trunc);
  return LieElement(this, std::move(t), trunc);
}

LieElement FreeLie::ad_pow(const LieElement& x, int k, const LieElement& y) const {
  LieElement r = y;
  for (int i = 0; i < k; ++i) r = bracket(x, r);
  return r;
}

bool FreeLie::is_homogeneous(const LieElement& e, int* degree) const {
  if (e.is_zero()) { if (degree) *degree = 0; return true; }
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int d = monos_[e.terms().front().first].degree;
  for (const auto& [m, c] : e.terms())
    if (monos_[m].degree != d) return false;
  if (degree) *degree = d;
  return true;
}

int FreeLie::degree_of(const LieElement& e) const {
  int d = 0;
  if (!is_homogeneous(e, &d)) throw error("element is not degree-homogeneous");
  if (e.is_zero()) throw error("degree of zero element is undefined");
  return d;
}

int FreeLie::word_length_of(const LieElement& e) const {
  if (e.is_zero()) throw error("word length of zero element is undefined");
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int n = monos_[e.terms().front().first].length;
  for (const auto& [m, c] : e.terms())
    if (monos_[m].length != n) throw error("element is not word-length-homogeneous");
  return n;
}

int FreeLie::min_word_length(const LieElement& e) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int n = 0;
  for (const auto& [m, c] : e.terms()) {
    int l = monos_[m].length;
    if (n == 0 || l < n) n = l;
  }
  return n;
}

int FreeLie::upper_degree_of(const LieElement& e) const {
  if (e.is_zero()) return 0;
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int u = monos_[e.terms().front().first].upper;
  for (const auto& [m, c] : e.terms())
    if (monos_[m].upper != u) throw error("element is not upper-degree-homogeneous");
  return u;
}

int FreeLie::weight_of(const LieElement& e) const {
  if (e.is_zero()) throw error("weight of zero element is undefined");
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int w = mono_weight(e.terms().front().first);
  for (const auto& [m, c] : e.terms())
    if (mono_weight(m) != w) throw error("element is not weight-homogeneous");
  return w;
}

LieElement FreeLie::component(const LieElement& e, int n) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  TermVec t;
  for (const auto& [m, c] : e.terms())
    if (monos_[m].length == n) t.emplace_back(m, c);
  return LieElement(this, std::move(t), e.truncated());
}

int FreeLie::mono_degree(Mono m) const { return monos_[m].degree; }
int FreeLie::mono_length(Mono m) const { return monos_[m].length; }
int FreeLie::mono_upper(Mono m) const { return monos_[m].upper; }
bool FreeLie::mono_is_square(Mono m) const { return monos_[m].square; }
Mono FreeLie::mono_left(Mono m) const { return monos_[m].left; }
Mono FreeLie::mono_right(Mono m) const { return monos_[m].right; }
int FreeLie::mono_letter(Mono m) const {
  const MonoData& md = monos_[m];
  if (md.square || md.length != 1) throw error("mono_letter: not a letter");
  return md.word[0];
}

std::vector<int> FreeLie::mono_multidegree(Mono m) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  std::vector<int> counts(gens_.size(), 0);
  const MonoData& md = monos_[m];
  for (auto g : md.word) counts[g] += md.square ? 2 : 1;
  return counts;
}

std::string FreeLie::mono_str_unlocked(Mono m) const {
  const MonoData& md = monos_[m];
  if (md.square) {
    std::string base = mono_str_unlocked(md.left);
    return "[" + base + "," + base + "]";
  }
  if (md.length == 1) return gens_[md.word[0]].name;
  return "[" + mono_str_unlocked(md.left) + "," + mono_str_unlocked(md.right) + "]";
}

std::string FreeLie::mono_str(Mono m) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return mono_str_unlocked(m);
}

std::string FreeLie::to_string(const LieElement& e) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  if (e.is_zero()) return "0";
  // deterministic structural order: (degree, length, effective word, square)
  std::vector<std::pair<Mono, Rational>> ts(e.terms().begin(), e.terms().end());
  auto effkey = [&](Mono m) {
    const MonoData& md = monos_[m];
    Word w = md.word;
    if (md.square) w.insert(w.end(), md.word.begin(), md.word.end());
    return std::tuple<int, int, Word, bool>(md.degree, md.length, w, md.square);
  };
  std::sort(ts.begin(), ts.end(), [&](const auto& x, const auto& y) {
    return effkey(x.first) < effkey(y.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, craw] : ts) {
    Rational c = monos_[m].square ? craw / 2 : craw;  // display [u,u], not (1/2)[u,u]
    bool neg = c < 0;
    Rational ac = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (ac != 1) os << rat_str(ac) << "*";
    os << mono_str_unlocked(m);
  }
  return os.str();
}

LieElement FreeLie::element(TermVec terms, bool truncated) const {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TermVec merged;
  for (auto& [m, c] : terms) {
    if (!merged.empty() && merged.back().first == m) merged.back().second += c;
    else merged.emplace_back(m, c);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return p.second == 0; }),
               merged.end());
  return LieElement(this, std::move(merged), truncated);
}

void FreeLie::tensor_expand_mono(Mono m, TensorElem& out, const Rational& c) const {
  const MonoData& md = monos_[m];
  if (md.square) {
    TensorElem base;
    tensor_expand_mono(md.left, base, Rational(1));
    TensorElem prod = tensor_mul(base, base);  // E((1/2)[u,u]) = E(u)E(u), u odd
    for (auto& [w, v] : prod) {
      Rational nv = out[w] + c * v;
      if (nv == 0) out.erase(w); else out[w] = nv;
    }
    return;
  }
  if (md.length == 1) {
    Rational nv = out[md.word] + c;
    if (nv == 0) out.erase(md.word); else out[md.word] = nv;
    return;
  }
  TensorElem l, r;
  tensor_expand_mono(md.left, l, Rational(1));
  tensor_expand_mono(md.right, r, Rational(1));
  TensorElem lr = tensor_mul(l, r), rl = tensor_mul(r, l);
  // E([L,R]) = E(L)E(R) - (-1)^{|L||R|} E(R)E(L); the second coefficient is
  // +1 when both factors are odd, -1 otherwise.
  Rational s = (oddp(monos_[md.left].degree) && oddp(monos_[md.right].degree))
                   ? Rational(1) : Rational(-1);
  for (auto& [w, v] : lr) {
    Rational nv = out[w] + c * v;
    if (nv == 0) out.erase(w); else out[w] = nv;
  }
  for (auto& [w, v] : rl) {
    Rational nv = out[w] + c * s * v;
    if (nv == 0) out.erase(w); else out[w] = nv;
  }
}

TensorElem FreeLie::tensor_expand(const LieElement& e) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  TensorElem out;
  for (const auto& [m, c] : e.terms()) tensor_expand_mono(m, out, c);
  return out;
}

TensorElem FreeLie::tensor_mul(const TensorElem& a, const TensorElem& b) {
  TensorElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rational nv = out[w] + ca * cb;
      if (nv == 0) out.erase(w); else out[w] = nv;
    }
  return out;
}

int FreeLie::word_degree(const Word& w) const {
  int d = 0;
  for (auto g : w) d += gens_[g].degree;
  return d;
}

TensorElem FreeLie::tensor_commutator(const TensorElem& a, const TensorElem& b) const {
  TensorElem out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word ab = wa; ab.insert(ab.end(), wb.begin(), wb.end());
      Word ba = wb; ba.insert(ba.end(), wa.begin(), wa.end());
      Rational s = (oddp(word_degree(wa)) && oddp(word_degree(wb))) ? Rational(1)
                                                                    : Rational(-1);
      Rational nv = out[ab] + ca * cb;
      if (nv == 0) out.erase(ab); else out[ab] = nv;
      nv = out[ba] + s * ca * cb;  // -(-1)^{|wa||wb|}
      if (nv == 0) out.erase(ba); else out[ba] = nv;
    }
  return out;
}

LieElement FreeLie::left_normed(const Word& w) const {
  if (w.empty()) return zero();
  LieElement e = gen(w.back());
  for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
    e = bracket(gen(w[i]), e);
  return e;
}

LieElement FreeLie::dynkin(const TensorElem& t) const {
  LieElement out = zero();
  for (const auto& [w, c] : t) {
    if (w.empty()) continue;
    out = add(out, scale(c / static_cast<long>(w.size()), left_normed(w)));
  }
  return out;
}

const TermVec& FreeLie::nf_pair_public(Mono a, Mono b) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return nf_pair(a, b);
}

}  // namespace dgla
