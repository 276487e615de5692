#include "dgla/homology.hpp"

#include <map>

#include "dgla/errors.hpp"
#include "dgla/linalg.hpp"

namespace dgla {

namespace {

// all basis monomials of degree d, every word length, in cell order
std::vector<Mono> degree_monomials(const FreeLie& L, int d) {
  std::vector<Mono> out;
  for (int n = 1; n <= L.window().max_word_length; ++n) {
    if (L.gens().min_degree() >= 1 && n > d) break;
    if (!L.cell_in_window(n, d)) continue;
    for (const auto& b : L.basis(n, d))
      out.push_back(b.terms().front().first);
  }
  return out;
}

std::map<Mono, int> index_of(const std::vector<Mono>& ms) {
  std::map<Mono, int> idx;
  for (size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = static_cast<int>(i);
  return idx;
}

// image rows of delta on the given source monomials, in target coordinates
std::vector<SpVec> image_rows(const FreeLie& L, const Differential& delta,
                              const std::vector<Mono>& sources,
                              const std::map<Mono, int>& target_idx,
                              int min_source_len = 1) {
  std::vector<SpVec> rows;
  rows.reserve(sources.size());
  for (Mono m : sources) {
    if (L.mono_length(m) < min_source_len) continue;
    LieElement img = delta.der().evaluate(LieElement(&L, {{m, Rational(1)}}));
    if (img.truncated())
      throw window_error("homology: differential left the window");
    if (img.is_zero()) continue;
    SpVec row;
    row.reserve(img.terms().size());
    for (const auto& [mm, c] : img.terms()) row.emplace_back(target_idx.at(mm), c);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void require_complete_degrees(const FreeLie& L, int d_max) {
  if (d_max > L.window().max_degree)
    throw window_error("window max degree " + std::to_string(L.window().max_degree) +
                       " is below the requested degree " + std::to_string(d_max));
  const auto& gs = L.gens();
  if (gs.min_degree() == 0)
    throw window_error("degree-0 generators give infinite-dimensional degrees; "
                       "no complete degree window exists");
  int W = L.window().max_word_length;
  if (static_cast<long>(W) * gs.min_degree() >= d_max) return;  // cannot overflow
  // existence of words of length > W in some degree <= d_max, by dp
  std::vector<std::vector<char>> any(W + 2, std::vector<char>(d_max + 1, 0));
  any[0][0] = 1;
  for (int n = 1; n <= W + 1; ++n)
    for (int d = 0; d <= d_max; ++d) {
      char s = 0;
      for (int g = 0; g < gs.size() && !s; ++g)
        if (d >= gs[g].degree) s |= any[n - 1][d - gs[g].degree];
      any[n][d] = s;
    }
  for (int d = 0; d <= d_max; ++d)
    if (any[W + 1][d])
      throw window_error("word-length bound " + std::to_string(W) +
                         " cuts degree " + std::to_string(d) +
                         "; enlarge the window");
}

int differential_rank(const FreeLie& L, const Differential& delta, int k) {
  auto sources = degree_monomials(L, k);
  if (sources.empty()) return 0;
  auto targets = degree_monomials(L, k - 1);
  auto tidx = index_of(targets);
  return sparse_rank(image_rows(L, delta, sources, tidx));
}

std::vector<int> homology_dims(const FreeLie& L, const Differential& delta, int lo, int hi) {
  if (lo > hi) return {};
  require_complete_degrees(L, hi + 1);
  std::vector<int> ranks(hi - lo + 2);  // ranks[k-lo] = rank at degree k, k in [lo, hi+1]
  for (int k = lo; k <= hi + 1; ++k)
    ranks[k - lo] = k >= 1 ? differential_rank(L, delta, k) : 0;
  std::vector<int> dims(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    int dimk = L.dimension_degree(k);
    dims[k - lo] = dimk - ranks[k - lo] - ranks[k - lo + 1];
  }
  return dims;
}

std::vector<std::vector<int>> homology_wordlength_gr(const FreeLie& L,
                                                     const Differential& delta,
                                                     int lo, int hi) {
  require_complete_degrees(L, hi + 1);
  int W = L.window().max_word_length;
  std::vector<std::vector<int>> out;
  for (int k = lo; k <= hi; ++k) {
    auto srcs = degree_monomials(L, k);
    auto above = degree_monomials(L, k + 1);
    auto tidx = index_of(degree_monomials(L, k - 1));
    auto kidx = index_of(srcs);
    int maxlen = 0;
    for (Mono m : srcs) maxlen = std::max(maxlen, L.mono_length(m));
    // dim F_n H_k for n = 1..maxlen+1
    std::vector<int> dimFH(maxlen + 2, 0);
    int dim_im = sparse_rank(image_rows(L, delta, above, kidx));
    for (int n = 1; n <= maxlen; ++n) {
      int dimFn = 0;
      for (Mono m : srcs)
        if (L.mono_length(m) >= n) ++dimFn;
      // ker cap F_n
      int rankFn = sparse_rank(image_rows(L, delta, srcs, tidx, n));
      int dim_ker_Fn = dimFn - rankFn;
      // dim(im cap F_n) = dim_im - rank(image rows restricted to coordinates
      // outside F_n)  [F_n is a coordinate subspace of monomials]
      std::vector<SpVec> proj = image_rows(L, delta, above, kidx);
      for (auto& row : proj) {
        SpVec kept;
        for (auto& [i, c] : row)
          if (L.mono_length(srcs[i]) < n) kept.emplace_back(i, c);
        row = std::move(kept);
      }
      int dim_im_Fn = dim_im - sparse_rank(std::move(proj));
      dimFH[n] = dim_ker_Fn - dim_im_Fn;
    }
    std::vector<int> gr(W, 0);
    for (int n = 1; n <= std::min(W, maxlen); ++n) gr[n - 1] = dimFH[n] - dimFH[n + 1];
    out.push_back(std::move(gr));
  }
  return out;
}

Ellipticity elliptic_certificate(const FreeLie& L, const Differential& delta, int N) {
  if (L.gens().max_degree() > N)
    throw error("elliptic_certificate: a generator exceeds the stated bound N");
  require_complete_degrees(L, 3 * N + 1);
  auto dims = homology_dims(L, delta, 2 * N, 3 * N);
  for (int d : dims)
    if (d != 0) return Ellipticity::inconclusive;
  return Ellipticity::certified_elliptic;
}

}  // namespace dgla
