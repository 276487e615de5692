#ifndef DGLA_GENERATORS_HPP
#define DGLA_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dgla/errors.hpp"

namespace dgla {

// A free Lie algebra generator. `degree` is the homological (lower) degree;
// `upper` is the resolution degree of bigraded models and stays 0 otherwise.
// weight = degree - upper.
struct Generator {
  std::string name;
  int degree = 1;
  int upper = 0;
};

// Computation window: cells (word length n, degree d) with n <= max_word_length
// and d <= max_degree. When every generator has degree >= 1 the word length is
// bounded by the degree, so max_word_length defaults to max_degree.
struct Window {
  int max_degree = 0;
  int max_word_length = 0;
};

// Ordered finite generator list; declaration order fixes canonical bases and
// all tie-breaking.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  // Throws `error` on duplicate names or negative degrees; degree-0 generators
  // are legal only when the owning session supplies an explicit word-length
  // bound (enforced by FreeLie).
  explicit GeneratorSet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int i) const { return gens_[i]; }
  const std::vector<Generator>& all() const { return gens_; }
  std::optional<int> index_of(const std::string& name) const;
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  bool simply_positive() const { return min_degree_ >= 1; }

 private:
  std::vector<Generator> gens_;
  int min_degree_ = 0, max_degree_ = 0;
};

}  // namespace dgla

#endif
