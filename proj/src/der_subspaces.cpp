#include "dgla/der_subspaces.hpp"

#include <algorithm>

#include "dgla/errors.hpp"
#include "dgla/linalg.hpp"

namespace dgla {

namespace {

// elementary derivations: generator g -> basis element of the (n, dg) cells,
// every other generator -> 0
std::vector<Derivation> elementary(const FreeLie* L, int k, int min_len,
                                   bool weight_raising_only = false) {
  std::vector<Derivation> out;
  const auto& gs = L->gens();
  for (int g = 0; g < gs.size(); ++g) {
    int dg = gs[g].degree + k;
    if (dg < 0) continue;
    if (dg > L->window().max_degree)
      throw window_error("derivation basis: value degree " + std::to_string(dg) +
                         " for generator " + gs[g].name + " exceeds the window");
    int gw = gs[g].degree - gs[g].upper;
    for (int n = min_len; n <= L->window().max_word_length; ++n) {
      if (gs.min_degree() >= 1 && n > dg) break;
      if (!L->cell_in_window(n, dg)) continue;
      for (const auto& b : L->basis(n, dg)) {
        if (weight_raising_only) {
          Mono m = b.terms().front().first;
          if (L->mono_weight(m) <= gw) continue;
        }
        std::vector<LieElement> vals(gs.size(), L->zero());
        vals[g] = b;
        out.push_back(Derivation(L, k, std::move(vals)));
      }
    }
  }
  return out;
}

// basis of the space of degree-0 linear maps psi with psi(V^i) in V^{i+1}
// for every i >= 0, lifted to derivations
std::vector<Derivation> filtration_raising_linear(const FreeLie* L, const FiltrationOfV& f) {
  const auto& gs = L->gens();
  std::vector<Derivation> out;
  // group generators by degree
  std::map<int, std::vector<int>> by_deg;
  for (int g = 0; g < gs.size(); ++g) by_deg[gs[g].degree].push_back(g);
  for (const auto& [d, idx] : by_deg) {
    int m = static_cast<int>(idx.size());
    std::map<int, int> local;  // generator -> 0..m-1
    for (int j = 0; j < m; ++j) local[idx[j]] = j;
    // unknowns: psi as m x m matrix, column-major flattening psi[i][j]
    // constraints: for each step i, each spanning vector w of V^i of degree d:
    // psi(w) lies in span(V^{i+1} degree-d part)
    std::vector<std::vector<Rational>> cons;  // rows over m*m unknowns
    for (int step = 0; step <= f.length() - 1; ++step) {
      // quotient functionals annihilating V^{step+1}_d
      DenseMat span(m, 0);
      std::vector<GenVec> next = f.span_of(step + 1);
      std::vector<std::vector<Rational>> cols;
      for (const auto& v : next) {
        if (v.degree != d) continue;
        std::vector<Rational> col(m);
        for (const auto& [g, c] : v.coords) col[local.at(g)] = c;
        cols.push_back(std::move(col));
      }
      DenseMat mat(static_cast<int>(cols.size()), m);
      for (size_t r = 0; r < cols.size(); ++r)
        for (int cidx = 0; cidx < m; ++cidx) mat.at(static_cast<int>(r), cidx) = cols[r][cidx];
      DenseMat ann = nullspace(std::move(mat));  // rows annihilate the span
      if (ann.rows == 0) continue;               // no condition at this step
      for (const auto& w : f.span_of(step)) {
        if (w.degree != d) continue;
        std::vector<Rational> wv(m);
        for (const auto& [g, c] : w.coords) wv[local.at(g)] = c;
        // condition: ann_r . (psi w) = 0  ->  sum_{i,j} ann_r[i] w[j] psi[i][j] = 0
        for (int r = 0; r < ann.rows; ++r) {
          std::vector<Rational> row(static_cast<size_t>(m) * m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) row[static_cast<size_t>(i) * m + j] = ann.at(r, i) * wv[j];
          cons.push_back(std::move(row));
        }
      }
    }
    DenseMat cmat(static_cast<int>(cons.size()), m * m);
    for (size_t r = 0; r < cons.size(); ++r)
      for (int c = 0; c < m * m; ++c) cmat.at(static_cast<int>(r), c) = cons[r][c];
    DenseMat sol = nullspace(std::move(cmat));
    for (int s = 0; s < sol.rows; ++s) {
      std::vector<LieElement> vals(gs.size(), L->zero());
      bool nonzero = false;
      for (int j = 0; j < m; ++j) {
        LieElement v = L->zero();
        for (int i = 0; i < m; ++i) {
          const Rational& c = sol.at(s, static_cast<size_t>(i) * m + j);
          if (c != 0) { v = L->add(v, L->scale(c, L->gen(idx[i]))); nonzero = true; }
        }
        vals[idx[j]] = v;
      }
      if (nonzero) out.push_back(Derivation(L, 0, std::move(vals)));
    }
  }
  return out;
}

void validate_members(DerKind kind, const FiltrationOfV* f, const DerSubspaceBasis& b) {
  for (const auto& th : b.elements)
    if (!membership(kind, f, th))
      throw error("internal: constructed basis element fails its membership predicate");
}

}  // namespace

DerSubspaceBasis der_basis(const FreeLie* L, int k) {
  DerSubspaceBasis b{DerKind::full, k, elementary(L, k, 1)};
  return b;
}

DerSubspaceBasis dder_basis(const FreeLie* L, const FiltrationOfV& f, int k) {
  DerSubspaceBasis b{DerKind::dder, k, {}};
  if (k > 0) {
    b.elements = elementary(L, k, 1);
  } else if (k < 0) {
    b.elements = elementary(L, k, 2);
  } else {
    b.elements = filtration_raising_linear(L, f);
    auto dec = elementary(L, 0, 2);
    b.elements.insert(b.elements.end(), dec.begin(), dec.end());
  }
  validate_members(DerKind::dder, &f, b);
  return b;
}

DerSubspaceBasis sder_basis(const FreeLie* L, int k) {
  DerSubspaceBasis b{DerKind::sder, k, {}};
  if (k >= 0) {
    FiltrationOfV trivial(L);
    b = dder_basis(L, trivial, k);
    b.kind = DerKind::sder;
  } else {
    b.elements = elementary(L, k, 3);
  }
  validate_members(DerKind::sder, nullptr, b);
  return b;
}

DerSubspaceBasis weight_raising_basis(const FreeLie* L, int k) {
  DerSubspaceBasis b{DerKind::weight_raising, k, elementary(L, k, 1, true)};
  validate_members(DerKind::weight_raising, nullptr, b);
  return b;
}

bool membership(DerKind kind, const FiltrationOfV* f, const Derivation& theta) {
  const FreeLie* L = theta.algebra();
  int k = theta.degree();
  switch (kind) {
    case DerKind::full:
      return true;
    case DerKind::dder: {
      if (k > 0) return true;
      if (k < 0) return theta.values_in_word_length_at_least(2);
      // degree 0: linear part raises the filtration, modulo decomposables
      FiltrationOfV trivial(L);
      const FiltrationOfV& filt = f ? *f : trivial;
      for (int step = 0; step <= filt.length() - 1; ++step) {
        for (const auto& w : filt.span_of(step)) {
          // theta_*(w)
          LieElement img = L->zero();
          for (const auto& [g, c] : w.coords)
            img = L->add(img, L->scale(c, L->component(theta.value(g), 1)));
          GenVec lv{w.degree + k, {}};
          for (const auto& [m, c] : img.terms()) lv.coords.emplace_back(L->mono_letter(m), c);
          if (!filt.contains(step + 1, lv)) return false;
        }
      }
      return true;
    }
    case DerKind::sder: {
      if (k < 0) return theta.values_in_word_length_at_least(3);
      return membership(DerKind::dder, nullptr, theta);
    }
    case DerKind::weight_raising:
      return theta.raises_weight();
  }
  return false;
}

long monomial_position(const FreeLie* L, const FiltrationOfV& f, Mono m) {
  if (!f.is_coordinate())
    throw error("monomial positions need a coordinate filtration");
  auto counts = L->mono_multidegree(m);
  int p = 0;
  for (int g = 0; g < L->gens().size(); ++g)
    if (counts[g] > 0) p += counts[g] * f.level_of_generator(g);
  return filtration_position(L->mono_length(m), p, f.length());
}

bool fn_membership(const FreeLie* L, const FiltrationOfV& f, int n, const Derivation& theta) {
  for (int len = 1; len <= L->window().max_word_length; ++len) {
    for (int d = 1; d <= L->window().max_degree; ++d) {
      if (L->gens().min_degree() >= 1 && len > d) continue;
      if (!L->cell_in_window(len, d)) continue;
      for (const auto& b : L->basis(len, d)) {
        Mono m = b.terms().front().first;
        long pos = monomial_position(L, f, m);
        LieElement img = theta.evaluate(b);
        for (const auto& [mm, c] : img.terms())
          if (monomial_position(L, f, mm) < pos + n) return false;
      }
    }
  }
  return true;
}

DerSubspaceBasis fn_basis(const FreeLie* L, const FiltrationOfV& f, int n, int k) {
  auto full = elementary(L, k, 1);
  // constraint rows over the elementary coefficients: for every window basis
  // monomial M and every target monomial of position < pos(M) + n, the total
  // coefficient must vanish
  std::map<std::pair<Mono, Mono>, std::map<int, Rational>> rows;  // (M, target) -> col -> coeff
  for (int len = 1; len <= L->window().max_word_length; ++len) {
    for (int d = 1; d <= L->window().max_degree; ++d) {
      if (L->gens().min_degree() >= 1 && len > d) continue;
      if (!L->cell_in_window(len, d)) continue;
      for (const auto& b : L->basis(len, d)) {
        Mono m = b.terms().front().first;
        long pos = monomial_position(L, f, m);
        for (size_t col = 0; col < full.size(); ++col) {
          LieElement img = full[col].evaluate(b);
          for (const auto& [mm, c] : img.terms())
            if (monomial_position(L, f, mm) < pos + n)
              rows[{m, mm}][static_cast<int>(col)] += c;
        }
      }
    }
  }
  DenseMat cmat(static_cast<int>(rows.size()), static_cast<int>(full.size()));
  int r = 0;
  for (const auto& [key, row] : rows) {
    for (const auto& [col, c] : row) cmat.at(r, col) = c;
    ++r;
  }
  DenseMat sol = nullspace(std::move(cmat));
  DerSubspaceBasis out{DerKind::full, k, {}};
  for (int s = 0; s < sol.rows; ++s) {
    Derivation th = Derivation::zero(L, k);
    for (size_t col = 0; col < full.size(); ++col)
      if (sol.at(s, static_cast<int>(col)) != 0)
        th = th.add(full[col].scale(sol.at(s, static_cast<int>(col))));
    out.elements.push_back(th);
  }
  return out;
}

SpVec DerCoords::coords(const Derivation& th) {
  SpVec out;
  const FreeLie* L = th.algebra();
  for (int g = 0; g < L->gens().size(); ++g) {
    for (const auto& [m, c] : th.value(g).terms()) {
      auto key = std::make_pair(g, m);
      auto it = cols_.find(key);
      if (it == cols_.end())
        it = cols_.emplace(key, static_cast<int>(cols_.size())).first;
      out.emplace_back(it->second, c);
    }
  }
  sp_sort(out);
  return out;
}

bool der_span_contains(const std::vector<Derivation>& span, const Derivation& th) {
  DerCoords dc;
  SpanSolver s;
  for (const auto& d : span) s.add(dc.coords(d));
  return s.contains(dc.coords(th));
}

bool der_spans_equal(const std::vector<Derivation>& a, const std::vector<Derivation>& b) {
  for (const auto& th : b)
    if (!der_span_contains(a, th)) return false;
  for (const auto& th : a)
    if (!der_span_contains(b, th)) return false;
  return true;
}

}  // namespace dgla
