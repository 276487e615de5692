#ifndef DGLA_FILTRATION_HPP
#define DGLA_FILTRATION_HPP

#include <vector>

#include "dgla/free_lie.hpp"

namespace dgla {

// A degree-homogeneous vector in the generator space V.
struct GenVec {
  int degree = 0;
  std::vector<std::pair<int, Rational>> coords;  // (generator index, coefficient)
};

// Decreasing chain V = V^0 >= V^1 >= ... >= V^q = 0 of graded subspaces of V,
// given by spanning sets. Only the intermediate steps V^1..V^{q-1} are stored;
// V^0 = V and V^q = 0 are implicit. The chain must be strictly decreasing.
class FiltrationOfV {
 public:
  // trivial filtration V >= 0
  explicit FiltrationOfV(const FreeLie* alg);
  // steps[i] spans V^{i+1}
  FiltrationOfV(const FreeLie* alg, std::vector<std::vector<GenVec>> steps);
  // coordinate filtration: each step spanned by a subset of generators
  static FiltrationOfV coordinate(const FreeLie* alg,
                                  std::vector<std::vector<std::string>> steps);

  const FreeLie* algebra() const { return alg_; }
  int length() const { return static_cast<int>(steps_.size()) + 1; }  // q
  // spanning set of V^i (0 <= i <= q; i = 0 gives all generators, i = q none)
  std::vector<GenVec> span_of(int i) const;
  // is the whole chain spanned by plain generators?
  bool is_coordinate() const;
  // for coordinate filtrations: the largest i with generator g in V^i
  int level_of_generator(int g) const;

  // membership of a graded vector in V^i (exact rank test)
  bool contains(int i, const GenVec& v) const;

 private:
  const FreeLie* alg_ = nullptr;
  std::vector<std::vector<GenVec>> steps_;
  void validate() const;
};

// The interleaved refinement: degree blocks V_l^i + V_{>l} stacked over
// l = 1..m, renamed and deduplicated; satisfies: (refined step i nonzero in
// degree l) implies V_{>l} inside step i+1.
class RefinedFiltration {
 public:
  RefinedFiltration(const FiltrationOfV& f, int top_degree);
  const FreeLie* algebra() const { return alg_; }
  int length() const { return static_cast<int>(chain_.size()); }
  const std::vector<GenVec>& step(int i) const { return chain_[i]; }  // spans refined V^i
  // the defining property, checked degree by degree
  bool property_holds() const;

 private:
  const FreeLie* alg_ = nullptr;
  int top_degree_ = 0;
  std::vector<std::vector<GenVec>> chain_;  // chain_[0] = V, last nonzero step; 0 implicit
};

// position of F^{n,p} in the interleaved sequence: t = (n-1)n q/2 + p + 1
long filtration_position(int n, int p, int q);

}  // namespace dgla

#endif
