#include "dgla/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace dgla {

bool rat_parse(const std::string& s, Rational& out) {
  if (s.empty()) return false;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num;
      if (num.set_str(s, 10) != 0) return false;
      out = Rational(num);
    } else {
      mpz_class num, den;
      if (num.set_str(s.substr(0, slash), 10) != 0) return false;
      if (den.set_str(s.substr(slash + 1), 10) != 0) return false;
      if (den == 0) return false;
      out = Rational(num, den);
      out.canonicalize();
    }
  } catch (...) {
    return false;
  }
  return true;
}

int rref(DenseMat& m, std::vector<int>* pivots) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank(DenseMat m) { return rref(m); }

DenseMat nullspace(DenseMat m) {
  std::vector<int> piv;
  int r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  DenseMat out(m.cols - r, m.cols);
  int row = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    out.at(row, c) = 1;
    for (int i = 0; i < r; ++i) out.at(row, piv[i]) = -m.at(i, c);
    ++row;
  }
  return out;
}

std::optional<std::vector<Rational>> solve(DenseMat a, std::vector<Rational> b) {
  assert(static_cast<int>(b.size()) == a.rows);
  DenseMat aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  std::vector<int> piv;
  rref(aug, &piv);
  for (int c : piv)
    if (c == a.cols) return std::nullopt;  // inconsistent
  std::vector<Rational> x(a.cols);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), a.cols);
  return x;
}

std::optional<DenseMat> inverse(DenseMat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  DenseMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  int r = rref(aug, &piv);
  if (r < n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (piv[i] != i) return std::nullopt;
  DenseMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

void sp_sort(SpVec& v) {
  bool sorted = true;
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1].first >= v[i].first) { sorted = false; break; }
  if (sorted) return;
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SpVec out;
  for (auto& [c, val] : v) {
    if (!out.empty() && out.back().first == c) out.back().second += val;
    else out.emplace_back(c, val);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second == 0; }),
            out.end());
  v = std::move(out);
}

void sp_axpy(SpVec& dst, const Rational& c, const SpVec& src) {
  if (c == 0 || src.empty()) return;
  SpVec out;
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

namespace {

// integer row, sorted by column, content 1 after normalization
using ZRow = std::vector<std::pair<int, mpz_class>>;

void z_normalize(ZRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  if (r.front().second < 0)
    for (auto& [c, v] : r) v = -v;
}

// dst := a*dst + b*src, both sorted; result normalized by the caller
ZRow z_combine(const ZRow& dst, const mpz_class& a, const ZRow& src, const mpz_class& b) {
  ZRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.emplace_back(dst[i].first, a * dst[i].second);
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, b * src[j].second);
      ++j;
    } else {
      mpz_class v = a * dst[i].second + b * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i; ++j;
    }
  }
  return out;
}

}  // namespace

int sparse_rank(std::vector<SpVec> rows) {
  // clear denominators, drop empties, shortest rows first to limit fill-in
  std::vector<ZRow> zrows;
  zrows.reserve(rows.size());
  for (auto& row : rows) {
    sp_sort(row);
    if (row.empty()) continue;
    mpz_class lcm = 1;
    for (auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    ZRow zr;
    zr.reserve(row.size());
    for (auto& [c, v] : row) zr.emplace_back(c, mpz_class(v.get_num() * (lcm / v.get_den())));
    z_normalize(zr);
    zrows.push_back(std::move(zr));
  }
  std::stable_sort(zrows.begin(), zrows.end(),
                   [](const ZRow& a, const ZRow& b) { return a.size() < b.size(); });
  // lead column -> pivot row (content-normalized)
  std::vector<std::pair<int, ZRow>> pivots;  // sorted by lead
  auto locate = [&](int lead) {
    return std::lower_bound(pivots.begin(), pivots.end(), lead,
                            [](const auto& p, int l) { return p.first < l; });
  };
  int r = 0;
  for (auto& row : zrows) {
    while (!row.empty()) {
      auto it = locate(row.front().first);
      if (it == pivots.end() || it->first != row.front().first) break;
      // keep the sparser vector as the pivot
      if (row.size() < it->second.size()) std::swap(row, it->second);
      mpz_class a = it->second.front().second;   // pivot lead
      mpz_class b = -row.front().second;
      row = z_combine(row, a, it->second, b);
      z_normalize(row);
    }
    if (row.empty()) continue;
    int lead = row.front().first;
    pivots.insert(locate(lead), {lead, std::move(row)});
    ++r;
  }
  return r;
}

void SpanSolver::reduce(SpVec& v, SpVec& expr) const {
  while (!v.empty()) {
    int lead = v.front().first;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), lead,
                               [](const Row& r, int l) { return r.v.front().first < l; });
    if (it == rows_.end() || it->v.front().first != lead) break;
    Rational c = -v.front().second;
    sp_axpy(v, c, it->v);
    sp_axpy(expr, c, it->expr);
  }
}

bool SpanSolver::add(SpVec v) {
  sp_sort(v);
  SpVec expr{{rank(), Rational(1)}};
  // expr provisionally refers to "this vector"; only kept if independent.
  reduce(v, expr);
  if (v.empty()) return false;
  Rational inv = 1 / v.front().second;
  for (auto& [c, x] : v) x *= inv;
  for (auto& [c, x] : expr) x *= inv;
  Row row{std::move(v), std::move(expr)};
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row.v.front().first,
                             [](const Row& r, int l) { return r.v.front().first < l; });
  rows_.insert(it, std::move(row));
  return true;
}

bool SpanSolver::contains(SpVec v) const {
  sp_sort(v);
  SpVec expr;
  reduce(v, expr);
  return v.empty();
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(SpVec v) const {
  sp_sort(v);
  SpVec expr;
  reduce(v, expr);
  if (!v.empty()) return std::nullopt;
  std::vector<Rational> out(rank());
  // v reduced to 0 means v = -expr combination
  for (auto& [i, c] : expr) out[i] = -c;
  return out;
}

}  // namespace dgla
