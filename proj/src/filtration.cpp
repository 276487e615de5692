#include "dgla/filtration.hpp"

#include <algorithm>

#include "dgla/errors.hpp"
#include "dgla/linalg.hpp"

namespace dgla {

namespace {

SpVec genvec_row(const GenVec& v) {
  SpVec row;
  for (const auto& [g, c] : v.coords) row.emplace_back(g, c);
  return row;
}

// span containment of homogeneous generator vectors (degrees never mix since
// a homogeneous vector only touches generators of its degree)
bool span_contains(const std::vector<GenVec>& span, const GenVec& v) {
  SpanSolver s;
  for (const auto& w : span) s.add(genvec_row(w));
  return s.contains(genvec_row(v));
}

bool span_contains_all(const std::vector<GenVec>& big, const std::vector<GenVec>& small) {
  SpanSolver s;
  for (const auto& w : big) s.add(genvec_row(w));
  for (const auto& v : small)
    if (!s.contains(genvec_row(v))) return false;
  return true;
}

int span_rank(const std::vector<GenVec>& span) {
  SpanSolver s;
  for (const auto& w : span) s.add(genvec_row(w));
  return s.rank();
}

}  // namespace

FiltrationOfV::FiltrationOfV(const FreeLie* alg) : alg_(alg) {}

FiltrationOfV::FiltrationOfV(const FreeLie* alg, std::vector<std::vector<GenVec>> steps)
    : alg_(alg), steps_(std::move(steps)) {
  validate();
}

FiltrationOfV FiltrationOfV::coordinate(const FreeLie* alg,
                                        std::vector<std::vector<std::string>> steps) {
  std::vector<std::vector<GenVec>> out;
  for (const auto& names : steps) {
    std::vector<GenVec> span;
    for (const auto& n : names) {
      auto idx = alg->gens().index_of(n);
      if (!idx) throw error("filtration names unknown generator: " + n);
      span.push_back(GenVec{alg->gens()[*idx].degree, {{*idx, Rational(1)}}});
    }
    out.push_back(std::move(span));
  }
  return FiltrationOfV(alg, std::move(out));
}

void FiltrationOfV::validate() const {
  for (const auto& step : steps_)
    for (const auto& v : step) {
      if (v.coords.empty()) throw error("filtration step contains the zero vector");
      for (const auto& [g, c] : v.coords) {
        if (g < 0 || g >= alg_->gens().size()) throw error("filtration vector out of range");
        if (alg_->gens()[g].degree != v.degree)
          throw error("filtration vector is not degree-homogeneous");
      }
    }
  // strictly decreasing chain
  std::vector<GenVec> prev = span_of(0);
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (!span_contains_all(prev, steps_[i]))
      throw error("filtration steps must decrease");
    if (span_rank(steps_[i]) >= span_rank(prev))
      throw error("filtration must be strictly decreasing");
    prev = steps_[i];
  }
  if (!steps_.empty() && span_rank(steps_.back()) == 0)
    throw error("the final listed step must be nonzero (V^q = 0 is implicit)");
}

std::vector<GenVec> FiltrationOfV::span_of(int i) const {
  if (i <= 0) {
    std::vector<GenVec> all;
    for (int g = 0; g < alg_->gens().size(); ++g)
      all.push_back(GenVec{alg_->gens()[g].degree, {{g, Rational(1)}}});
    return all;
  }
  if (i >= length()) return {};
  return steps_[i - 1];
}

bool FiltrationOfV::is_coordinate() const {
  for (const auto& step : steps_)
    for (const auto& v : step)
      if (v.coords.size() != 1 || v.coords[0].second != 1) return false;
  return true;
}

int FiltrationOfV::level_of_generator(int g) const {
  if (!is_coordinate()) throw error("level_of_generator needs a coordinate filtration");
  int level = 0;
  for (size_t i = 0; i < steps_.size(); ++i) {
    bool in = false;
    for (const auto& v : steps_[i])
      if (v.coords[0].first == g) in = true;
    if (in) level = static_cast<int>(i) + 1;
    else break;
  }
  return level;
}

bool FiltrationOfV::contains(int i, const GenVec& v) const {
  if (i <= 0) return true;
  if (i >= length()) return v.coords.empty();
  return span_contains(steps_[i - 1], v);
}

RefinedFiltration::RefinedFiltration(const FiltrationOfV& f, int top_degree)
    : alg_(f.algebra()), top_degree_(top_degree) {
  if (alg_->gens().max_degree() > top_degree)
    throw error("refine_filtration: V is not bounded by the given top degree");
  int q = f.length();
  auto degree_part = [&](const std::vector<GenVec>& span, int l) {
    std::vector<GenVec> out;
    for (const auto& v : span)
      if (v.degree == l) out.push_back(v);
    return out;
  };
  auto tail = [&](int l) {  // V_{>l}
    std::vector<GenVec> out;
    for (int g = 0; g < alg_->gens().size(); ++g)
      if (alg_->gens()[g].degree > l)
        out.push_back(GenVec{alg_->gens()[g].degree, {{g, Rational(1)}}});
    return out;
  };
  std::vector<std::vector<GenVec>> raw;
  raw.push_back(f.span_of(0));  // V
  for (int l = 1; l <= top_degree; ++l) {
    for (int i = 1; i <= q - 1; ++i) {
      std::vector<GenVec> step = degree_part(f.span_of(i), l);
      auto t = tail(l);
      step.insert(step.end(), t.begin(), t.end());
      raw.push_back(std::move(step));
    }
    raw.push_back(tail(l));
  }
  // drop trailing zeros and collapse equal consecutive steps
  while (!raw.empty() && span_rank(raw.back()) == 0) raw.pop_back();
  for (const auto& step : raw) {
    if (!chain_.empty() && span_rank(chain_.back()) == span_rank(step) &&
        span_contains_all(chain_.back(), step))
      continue;
    chain_.push_back(step);
  }
}

bool RefinedFiltration::property_holds() const {
  for (int i = 0; i < length(); ++i) {
    const auto& step = chain_[i];
    for (int l = 1; l <= top_degree_; ++l) {
      bool nonzero_at_l = false;
      for (const auto& v : step)
        if (v.degree == l) { nonzero_at_l = true; break; }
      if (!nonzero_at_l) continue;
      // V_{>l} must lie inside the next step
      std::vector<GenVec> next = (i + 1 < length()) ? chain_[i + 1] : std::vector<GenVec>{};
      for (int g = 0; g < alg_->gens().size(); ++g) {
        if (alg_->gens()[g].degree <= l) continue;
        GenVec unit{alg_->gens()[g].degree, {{g, Rational(1)}}};
        if (!span_contains(next, unit)) return false;
      }
    }
  }
  return true;
}

long filtration_position(int n, int p, int q) {
  if (n < 1) throw error("filtration_position: n must be >= 1");
  if (q < 1) throw error("filtration_position: q must be >= 1");
  if (p < 0 || p >= n * q) throw error("filtration_position: p out of range [0, nq)");
  return static_cast<long>(n - 1) * n * q / 2 + p + 1;
}

}  // namespace dgla
