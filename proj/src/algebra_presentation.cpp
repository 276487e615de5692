#include "dgla/algebra_presentation.hpp"

#include <algorithm>

#include "dgla/errors.hpp"
#include "dgla/linalg.hpp"

namespace dgla {

namespace {

void vec_sort(PresVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  PresVec out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) out.back().second += c;
    else out.emplace_back(i, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
            out.end());
  v = std::move(out);
}

PresVec vec_scale(const Rational& c, PresVec v) {
  if (c == 0) return {};
  for (auto& [i, x] : v) x *= c;
  return v;
}

void vec_add(PresVec& dst, const PresVec& src) {
  dst.insert(dst.end(), src.begin(), src.end());
  vec_sort(dst);
}

}  // namespace

GradedAlgebraPresentation::GradedAlgebraPresentation(
    std::vector<Element> basis, std::map<std::pair<int, int>, PresVec> products)
    : basis_(std::move(basis)), products_(std::move(products)) {
  for (auto& [key, v] : products_) vec_sort(v);
  symmetrize();
  validate();
}

GradedAlgebraPresentation GradedAlgebraPresentation::unchecked(
    std::vector<Element> basis, std::map<std::pair<int, int>, PresVec> products) {
  GradedAlgebraPresentation a;
  a.basis_ = std::move(basis);
  a.products_ = std::move(products);
  for (auto& [key, v] : a.products_) vec_sort(v);
  a.symmetrize();
  return a;
}

std::optional<int> GradedAlgebraPresentation::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

PresVec GradedAlgebraPresentation::product(int i, int j) const {
  auto it = products_.find({i, j});
  return it == products_.end() ? PresVec{} : it->second;
}

void GradedAlgebraPresentation::symmetrize() {
  auto snapshot = products_;
  for (const auto& [key, v] : snapshot) {
    auto [i, j] = key;
    Rational sign = ((basis_[i].degree & 1) && (basis_[j].degree & 1)) ? -1 : 1;
    PresVec flipped = vec_scale(sign, v);
    auto it = products_.find({j, i});
    if (it == products_.end()) {
      if (!flipped.empty()) products_[{j, i}] = flipped;
    } else if (it->second != flipped) {
      throw error("products of " + basis_[i].name + " and " + basis_[j].name +
                  " violate graded commutativity");
    }
  }
}

void GradedAlgebraPresentation::validate() const {
  if (basis_.empty()) throw error("algebra presentation needs a nonempty basis");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree < 2)
      throw error("algebra element " + basis_[i].name + " must have degree >= 2");
    for (size_t j = 0; j < i; ++j)
      if (basis_[j].name == basis_[i].name)
        throw error("duplicate algebra element name: " + basis_[i].name);
  }
  for (const auto& [key, v] : products_) {
    auto [i, j] = key;
    if (i < 0 || i >= size() || j < 0 || j >= size())
      throw error("product references an unknown element");
    for (const auto& [k, c] : v)
      if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
        throw error("product " + basis_[i].name + "*" + basis_[j].name +
                    " violates degree additivity");
  }
  // associativity on every triple
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (int k = 0; k < size(); ++k) {
        PresVec lhs, rhs;
        for (const auto& [m, c] : product(i, j)) vec_add(lhs, vec_scale(c, product(m, k)));
        for (const auto& [m, c] : product(j, k)) vec_add(rhs, vec_scale(c, product(i, m)));
        if (lhs != rhs)
          throw error("products are not associative on (" + basis_[i].name + "," +
                      basis_[j].name + "," + basis_[k].name + ")");
      }
}

NilpotentLiePresentation::NilpotentLiePresentation(
    std::vector<Element> basis, std::map<std::pair<int, int>, PresVec> brackets, int bound)
    : basis_(std::move(basis)), brackets_(std::move(brackets)) {
  for (auto& [key, v] : brackets_) vec_sort(v);
  complete_antisymmetry();
  validate(bound);
}

std::optional<int> NilpotentLiePresentation::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

PresVec NilpotentLiePresentation::bracket(int i, int j) const {
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? PresVec{} : it->second;
}

PresVec NilpotentLiePresentation::bracket_vec(const PresVec& a, const PresVec& b) const {
  PresVec out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) vec_add(out, vec_scale(ci * cj, bracket(i, j)));
  return out;
}

void NilpotentLiePresentation::complete_antisymmetry() {
  auto snapshot = brackets_;
  for (const auto& [key, v] : snapshot) {
    auto [i, j] = key;
    Rational sign = ((basis_[i].degree & 1) && (basis_[j].degree & 1)) ? 1 : -1;
    PresVec flipped = vec_scale(sign, v);  // [b_j, b_i] = -(-1)^{|i||j|}[b_i, b_j]
    auto it = brackets_.find({j, i});
    if (it == brackets_.end()) {
      if (!flipped.empty()) brackets_[{j, i}] = flipped;
    } else if (it->second != flipped) {
      throw error("brackets of " + basis_[i].name + " and " + basis_[j].name +
                  " violate graded antisymmetry");
    }
  }
}

void NilpotentLiePresentation::validate(int bound) {
  if (basis_.empty()) throw error("Lie presentation needs a nonempty basis");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree < 0) throw error("basis degrees must be >= 0");
    for (size_t j = 0; j < i; ++j)
      if (basis_[j].name == basis_[i].name)
        throw error("duplicate basis name: " + basis_[i].name);
  }
  for (const auto& [key, v] : brackets_) {
    auto [i, j] = key;
    for (const auto& [k, c] : v)
      if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
        throw error("bracket [" + basis_[i].name + "," + basis_[j].name +
                    "] violates degree additivity");
  }
  // even-degree diagonal brackets vanish
  for (int i = 0; i < size(); ++i)
    if (!(basis_[i].degree & 1) && !bracket(i, i).empty())
      throw error("[x,x] must vanish for even-degree " + basis_[i].name);
  // graded Jacobi on all triples
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      for (int c = 0; c < size(); ++c) {
        PresVec lhs = bracket_vec({{a, 1}}, bracket(b, c));
        PresVec rhs = bracket_vec(bracket(a, b), {{c, 1}});
        Rational s = ((basis_[a].degree & 1) && (basis_[b].degree & 1)) ? -1 : 1;
        vec_add(rhs, vec_scale(s, bracket_vec({{b, 1}}, bracket(a, c))));
        if (lhs != rhs)
          throw error("Jacobi fails on (" + basis_[a].name + "," + basis_[b].name + "," +
                      basis_[c].name + ")");
      }
  // lower central series terminates within the bound
  std::vector<PresVec> layer;
  for (int i = 0; i < size(); ++i) layer.push_back({{i, Rational(1)}});
  int cls = 1;
  while (!layer.empty()) {
    if (cls > bound)
      throw error("lower central series did not reach zero within the nilpotency bound");
    // span of [L, layer]
    SpanSolver span;
    std::vector<PresVec> next;
    for (int i = 0; i < size(); ++i)
      for (const auto& v : layer) {
        PresVec br = bracket_vec({{i, Rational(1)}}, v);
        if (br.empty()) continue;
        SpVec row;
        for (const auto& [k, c] : br) row.emplace_back(k, c);
        if (span.add(row)) next.push_back(br);
      }
    layer = std::move(next);
    ++cls;
  }
  nilpotency_class_ = cls - 1;
}

}  // namespace dgla
