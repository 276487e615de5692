#ifndef DGLA_FREE_LIE_HPP
#define DGLA_FREE_LIE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dgla/generators.hpp"
#include "dgla/linalg.hpp"
#include "dgla/rational.hpp"

namespace dgla {

class FreeLie;

// Interned canonical basis monomial (index into the owning session).
using Mono = std::uint32_t;
inline constexpr Mono kNoMono = 0xffffffffu;

// Sparse canonical form: (monomial, coefficient), sorted by monomial id,
// no zero coefficients.
using TermVec = std::vector<std::pair<Mono, Rational>>;

// Element of the free graded Lie algebra, always held in canonical form
// (coordinates in the super-Lyndon basis). `truncated` is set when any
// operation dropped terms that left the computation window, and propagates.
class LieElement {
 public:
  LieElement() = default;
  LieElement(const FreeLie* alg, TermVec terms, bool truncated = false)
      : alg_(alg), terms_(std::move(terms)), truncated_(truncated) {}

  const FreeLie* algebra() const { return alg_; }
  const TermVec& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  void set_truncated(bool t) { truncated_ = t; }

  bool operator==(const LieElement& o) const {
    return terms_ == o.terms_;  // canonical form makes this decide equality
  }
  bool operator!=(const LieElement& o) const { return !(*this == o); }

 private:
  const FreeLie* alg_ = nullptr;
  TermVec terms_;
  bool truncated_ = false;
};

// Word in the tensor algebra: generator indices; TensorElem maps words to
// coefficients (used by the embedding and the test oracles).
using Word = std::vector<std::uint8_t>;
using TensorElem = std::map<Word, Rational>;

// One session: a generator set, a window, and every cache (interned monomials,
// per-cell bases, bracket normal forms). All public methods are const and
// thread-safe behind a session mutex; caches are write-once per key.
class FreeLie {
 public:
  FreeLie(GeneratorSet gens, Window win);

  const GeneratorSet& gens() const { return gens_; }
  const Window& window() const { return win_; }
  bool cell_in_window(int n, int d) const {
    return n >= 1 && n <= win_.max_word_length && d <= win_.max_degree;
  }

  // ---- canonical basis per (word length, degree) ----
  // List of basis elements of L^n_d: Lyndon bracketings b(w), and [u,u] for
  // odd-degree Lyndon u (returned as the element [u,u], i.e. twice the
  // internal half-square monomial).
  std::vector<LieElement> basis(int n, int d) const;
  int dimension(int n, int d) const;
  int dimension_degree(int d) const;  // over all word lengths in window

  // Exact coordinates of a homogeneous element in basis(n, d).
  std::vector<Rational> express(const LieElement& e, int n, int d) const;

  // ---- element construction / arithmetic ----
  LieElement zero() const { return LieElement(this, {}); }
  LieElement gen(int i) const;
  LieElement gen(const std::string& name) const;
  LieElement add(const LieElement& a, const LieElement& b) const;
  LieElement sub(const LieElement& a, const LieElement& b) const;
  LieElement scale(const Rational& c, const LieElement& a) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  // ad_x^k(y)
  LieElement ad_pow(const LieElement& x, int k, const LieElement& y) const;

  // ---- homogeneity helpers ----
  // degree / word length of a homogeneous element; throws on mixed input.
  int degree_of(const LieElement& e) const;
  int word_length_of(const LieElement& e) const;       // throws if mixed
  int min_word_length(const LieElement& e) const;      // 0 for zero element
  int upper_degree_of(const LieElement& e) const;      // bigraded sessions
  int weight_of(const LieElement& e) const;            // needs bihomogeneous
  bool is_homogeneous(const LieElement& e, int* degree = nullptr) const;

  // word-length-n component
  LieElement component(const LieElement& e, int n) const;

  // ---- monomial introspection (for printing / matrices) ----
  int mono_degree(Mono m) const;
  int mono_length(Mono m) const;
  int mono_upper(Mono m) const;
  int mono_weight(Mono m) const { return mono_degree(m) - mono_upper(m); }
  bool mono_is_square(Mono m) const;
  // bracketing tree: children of a Lyndon monomial (kNoMono on letters);
  // for squares both children are the base monomial u of (1/2)[u,u]
  Mono mono_left(Mono m) const;
  Mono mono_right(Mono m) const;
  int mono_letter(Mono m) const;  // generator index; monomial must be a letter
  // occurrence count of each generator in the monomial
  std::vector<int> mono_multidegree(Mono m) const;
  std::string mono_str(Mono m) const;   // "[x,[x,y]]", squares as "[u,u]"
  std::string to_string(const LieElement& e) const;

  // Element from raw terms (test/serialization support; terms must reference
  // this session's monomials).
  LieElement element(TermVec terms, bool truncated = false) const;

  // ---- tensor algebra embedding ----
  TensorElem tensor_expand(const LieElement& e) const;
  // Graded commutator product embedding check helper: concat product.
  static TensorElem tensor_mul(const TensorElem& a, const TensorElem& b);
  TensorElem tensor_commutator(const TensorElem& a, const TensorElem& b) const;
  // Left-normed bracketing of a word: [w0,[w1,[...]]].
  LieElement left_normed(const Word& w) const;
  // (Super) Dynkin projection, normalized per word length:
  // dynkin(tensor_expand(e)) = e for every Lie element e.
  LieElement dynkin(const TensorElem& t) const;
  int word_degree(const Word& w) const;

  // bracket of two interned monomials as raw terms (internal fast path; the
  // pair's cell must lie inside the window).
  const TermVec& nf_pair_public(Mono a, Mono b) const;

 private:
  struct MonoData {
    Word word;            // Lyndon word; for squares: the base word u
    Mono left = kNoMono;  // standard factorization children (Lyndon, len>=2)
    Mono right = kNoMono; // for squares: left = right = base monomial
    std::int32_t degree = 0;
    std::int32_t upper = 0;
    std::int16_t length = 0;
    bool square = false;  // represents (1/2)[b(u),b(u)], u odd degree
  };

  GeneratorSet gens_;
  Window win_;

  mutable std::recursive_mutex mu_;
  mutable std::vector<MonoData> monos_;
  mutable std::map<std::pair<bool, Word>, Mono> intern_;
  mutable std::map<std::pair<int, int>, std::vector<Mono>> cells_;
  mutable std::map<std::uint64_t, TermVec> nf_memo_;
  mutable std::map<std::uint64_t, int> nf_state_;  // cycle guard

  // unlocked internals
  Mono intern_lyndon(const Word& w) const;
  Mono intern_square(Mono base) const;
  const std::vector<Mono>& cell(int n, int d) const;
  void gen_lyndon_cell(int n, int d, std::vector<Mono>& out) const;
  const TermVec& nf_pair(Mono a, Mono b) const;
  // dst += c * [m, terms]
  void nf_apply_mono(Mono m, const TermVec& src, const Rational& c, TermVec& dst) const;
  TermVec bracket_terms(const TermVec& a, const TermVec& b, bool& truncated) const;
  bool word_is_lyndon(const Word& w) const;
  int least_proper_suffix(const Word& w) const;  // split index
  std::string mono_str_unlocked(Mono m) const;
  void tensor_expand_mono(Mono m, TensorElem& out, const Rational& c) const;

  void check_same(const LieElement& a, const LieElement& b) const;

  friend class Derivation;
  friend class Automorphism;
};

// word order: lexicographic with prefix < extension
int word_cmp(const Word& a, const Word& b);

}  // namespace dgla

#endif
