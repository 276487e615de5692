#ifndef DGLA_ALGEBRA_PRESENTATION_HPP
#define DGLA_ALGEBRA_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

// sparse vector over a presentation basis
using PresVec = std::vector<std::pair<int, Rational>>;

// Finite commutative graded algebra, given by a linear basis of the
// augmentation ideal and multiplication structure constants. Construction
// machine-checks: degrees >= 2, degree additivity, graded commutativity and
// associativity.
class GradedAlgebraPresentation {
 public:
  struct Element {
    std::string name;
    int degree = 0;
  };

  GradedAlgebraPresentation(std::vector<Element> basis,
                            std::map<std::pair<int, int>, PresVec> products);
  // skips validation; for negative tests only
  static GradedAlgebraPresentation unchecked(std::vector<Element> basis,
                                             std::map<std::pair<int, int>, PresVec> products);

  int size() const { return static_cast<int>(basis_.size()); }
  const Element& operator[](int i) const { return basis_[i]; }
  std::optional<int> index_of(const std::string& name) const;
  PresVec product(int i, int j) const;  // empty = zero

 private:
  GradedAlgebraPresentation() = default;
  std::vector<Element> basis_;
  std::map<std::pair<int, int>, PresVec> products_;
  void symmetrize();
  void validate() const;
};

// Finite graded Lie algebra presentation with a nilpotency bound; antisymmetry,
// Jacobi and nilpotency are machine-checked.
class NilpotentLiePresentation {
 public:
  struct Element {
    std::string name;
    int degree = 0;
  };

  NilpotentLiePresentation(std::vector<Element> basis,
                           std::map<std::pair<int, int>, PresVec> brackets,
                           int nilpotency_bound = 16);

  int size() const { return static_cast<int>(basis_.size()); }
  const Element& operator[](int i) const { return basis_[i]; }
  std::optional<int> index_of(const std::string& name) const;
  PresVec bracket(int i, int j) const;
  PresVec bracket_vec(const PresVec& a, const PresVec& b) const;
  int nilpotency_class() const { return nilpotency_class_; }

 private:
  std::vector<Element> basis_;
  std::map<std::pair<int, int>, PresVec> brackets_;
  int nilpotency_class_ = 0;
  void complete_antisymmetry();
  void validate(int bound);
};

}  // namespace dgla

#endif
