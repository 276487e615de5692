#ifndef DGLA_TESTS_ORACLES_HPP
#define DGLA_TESTS_ORACLES_HPP

// Independent brute-force oracles. Everything here works through the tensor
// algebra embedding only (words + graded commutators), never through the
// Lyndon rewriting it is used to check.

#include <map>
#include <random>
#include <vector>

#include "dgla/derivation.hpp"
#include "dgla/free_lie.hpp"
#include "dgla/linalg.hpp"

namespace dgla::oracle {

// All words of length n and degree d over the generator alphabet.
inline std::vector<Word> words_of(const FreeLie& L, int n, int d) {
  std::vector<Word> out;
  Word w;
  const auto& gs = L.gens();
  auto rec = [&](auto&& self, int left, int deg) -> void {
    if (left == 0) {
      if (deg == d) out.push_back(w);
      return;
    }
    for (int g = 0; g < gs.size(); ++g) {
      int nd = deg + gs[g].degree;
      if (nd > d) continue;
      w.push_back(static_cast<std::uint8_t>(g));
      self(self, left - 1, nd);
      w.pop_back();
    }
  };
  rec(rec, n, 0);
  return out;
}

// Expansion of the left-normed bracketing of a word in the tensor algebra,
// computed with graded commutators only.
inline TensorElem left_normed_tensor(const FreeLie& L, const Word& w) {
  TensorElem e;
  e[{w.back()}] = Rational(1);
  for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) {
    TensorElem g;
    g[{w[i]}] = Rational(1);
    e = L.tensor_commutator(g, e);
  }
  return e;
}

// dim of the (n, d) component of the free graded Lie algebra as the rank of
// all left-normed bracketings inside the tensor component.
inline int cell_rank(const FreeLie& L, int n, int d) {
  auto ws = words_of(L, n, d);
  if (ws.empty()) return 0;
  std::map<Word, int> col;
  for (size_t i = 0; i < ws.size(); ++i) col[ws[i]] = static_cast<int>(i);
  std::vector<SpVec> rows;
  for (const auto& w : ws) {
    TensorElem t = left_normed_tensor(L, w);
    SpVec row;
    for (const auto& [word, c] : t) row.emplace_back(col.at(word), c);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return sparse_rank(std::move(rows));
}

// ---- independent homology oracle ----
// Works entirely with words and graded commutators in the tensor algebra:
// basis of the Lie subspace by echelonizing left-normed expansions, matrix of
// the differential by the associative Leibniz rule on words.

inline std::vector<Word> words_of_degree(const FreeLie& L, int d) {
  std::vector<Word> out;
  const auto& gs = L.gens();
  Word w;
  auto rec = [&](auto&& self, int deg) -> void {
    if (deg == d) { out.push_back(w); return; }
    for (int g = 0; g < gs.size(); ++g) {
      if (deg + gs[g].degree > d) continue;
      w.push_back(static_cast<std::uint8_t>(g));
      self(self, deg + gs[g].degree);
      w.pop_back();
    }
  };
  if (d >= 0) rec(rec, 0);
  return out;
}

// delta applied to a single word by the associative graded Leibniz rule;
// values[g] is the tensor expansion of delta(generator g).
inline TensorElem tensor_derivation_word(const FreeLie& L,
                                         const std::vector<TensorElem>& values,
                                         int delta_degree, const Word& w) {
  TensorElem out;
  int prefix_deg = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    const TensorElem& val = values[w[i]];
    if (!val.empty()) {
      Rational sign = ((delta_degree & 1) && (prefix_deg & 1)) ? Rational(-1) : Rational(1);
      for (const auto& [vw, c] : val) {
        Word nw(w.begin(), w.begin() + i);
        nw.insert(nw.end(), vw.begin(), vw.end());
        nw.insert(nw.end(), w.begin() + i + 1, w.end());
        Rational nv = out[nw] + sign * c;
        if (nv == 0) out.erase(nw); else out[nw] = nv;
      }
    }
    prefix_deg += L.gens()[w[i]].degree;
  }
  return out;
}

struct TensorHomology {
  const FreeLie& L;
  std::vector<TensorElem> values;  // tensor expansions of the derivation values
  int delta_degree;

  TensorHomology(const FreeLie& L_, const Derivation& delta) : L(L_), delta_degree(delta.degree()) {
    for (int g = 0; g < L.gens().size(); ++g)
      values.push_back(L.tensor_expand(delta.value(g)));
  }

  // echelonized Lie subspace rows over the degree-d word index
  std::vector<SpVec> lie_rows(int d, const std::map<Word, int>& idx) const {
    std::vector<SpVec> rows;
    SpanSolver span;
    for (const auto& [word, i] : idx) {
      TensorElem t = left_normed_tensor(L, word);
      SpVec row;
      for (const auto& [ww, c] : t) row.emplace_back(idx.at(ww), c);
      if (span.add(row)) rows.push_back(std::move(row));
    }
    return rows;
  }

  std::map<Word, int> word_index(int d) const {
    std::map<Word, int> idx;
    int i = 0;
    for (const auto& w : words_of_degree(L, d)) idx[w] = i++;
    return idx;
  }

  int lie_dim(int d) const {
    auto idx = word_index(d);
    return static_cast<int>(lie_rows(d, idx).size());
  }

  int rank_at(int k) const {
    auto idx_k = word_index(k);
    auto idx_t = word_index(k - 1);
    auto rows = lie_rows(k, idx_k);
    // invert the index: word per column
    std::vector<const Word*> wcols(idx_k.size());
    for (const auto& [w, i] : idx_k) wcols[i] = &w;
    std::vector<SpVec> images;
    for (const auto& row : rows) {
      TensorElem img;
      for (const auto& [col, c] : row) {
        TensorElem t = tensor_derivation_word(L, values, delta_degree, *wcols[col]);
        for (const auto& [w, v] : t) {
          Rational nv = img[w] + c * v;
          if (nv == 0) img.erase(w); else img[w] = nv;
        }
      }
      SpVec irow;
      for (const auto& [w, v] : img) irow.emplace_back(idx_t.at(w), v);
      if (!irow.empty()) images.push_back(std::move(irow));
    }
    return sparse_rank(std::move(images));
  }

  std::vector<int> dims(int lo, int hi) const {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k)
      out.push_back(lie_dim(k) - rank_at(k) - rank_at(k + 1));
    return out;
  }
};

// Deterministic random elements for property tests.
struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  Rational coeff() {
    static const int nums[] = {-3, -2, -1, 1, 1, 2, 2, 3, 5, -1, 1, 7};
    static const int dens[] = {1, 1, 1, 1, 2, 1, 3, 1, 2, 4, 1, 1};
    int i = uniform(0, 11);
    return Rational(nums[i], dens[i]);
  }
  // random homogeneous element of the given cell (possibly zero if cell empty)
  LieElement homogeneous(const FreeLie& L, int n, int d, int max_terms = 3) {
    auto b = L.basis(n, d);
    LieElement e = L.zero();
    if (b.empty()) return e;
    int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i)
      e = L.add(e, L.scale(coeff(), b[uniform(0, static_cast<int>(b.size()) - 1)]));
    return e;
  }
  // random element of fixed degree, mixed word lengths
  LieElement of_degree(const FreeLie& L, int d, int max_terms = 3) {
    LieElement e = L.zero();
    for (int n = 1; n <= L.window().max_word_length; ++n) {
      if (L.gens().min_degree() >= 1 && n > d) break;
      if (!L.cell_in_window(n, d)) continue;
      if (uniform(0, 1)) e = L.add(e, homogeneous(L, n, d, max_terms));
    }
    return e;
  }
};

}  // namespace dgla::oracle

#endif
