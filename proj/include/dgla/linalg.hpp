#ifndef DGLA_LINALG_HPP
#define DGLA_LINALG_HPP

#include <optional>
#include <vector>

#include "dgla/rational.hpp"

namespace dgla {

// Dense exact matrix, row major. Sized for the small systems that appear in
// basis extraction, section choices and automorphism inversion.
struct DenseMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// In-place reduced row echelon form. Returns rank; pivot columns appended to
// pivots if non-null.
int rref(DenseMat& m, std::vector<int>* pivots = nullptr);

int rank(DenseMat m);

// Nullspace basis as rows of the returned matrix (cols = m.cols).
DenseMat nullspace(DenseMat m);

// Solves A x = b for one x. nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(DenseMat a, std::vector<Rational> b);

// Inverse of a square matrix; nullopt if singular.
std::optional<DenseMat> inverse(DenseMat m);

// Sparse row: (column, coefficient) sorted by column, no zero coefficients.
using SpVec = std::vector<std::pair<int, Rational>>;

// sorts by column and merges duplicates (rows are canonicalized on entry to
// sparse_rank and SpanSolver, so callers may build them in any order)
void sp_sort(SpVec& v);

// dst += c * src, both sorted.
void sp_axpy(SpVec& dst, const Rational& c, const SpVec& src);

// Exact rank of the span of the given sparse rows (rows are consumed).
int sparse_rank(std::vector<SpVec> rows);

// Incremental echelon structure for sparse span / membership / coordinate
// queries: supports "add vector", "is v in current span", and coordinate
// extraction of v in terms of the inserted vectors.
class SpanSolver {
 public:
  // Returns true if v was independent (span grew).
  bool add(SpVec v);
  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(SpVec v) const;
  // Coordinates of v in the inserted independent vectors (in insertion order
  // of the independent ones); nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(SpVec v) const;

 private:
  // Echelonized rows with their expression in terms of inserted vectors.
  struct Row {
    SpVec v;       // normalized: leading coefficient 1
    SpVec expr;    // combination of inserted independent vectors
  };
  std::vector<Row> rows_;  // sorted by leading column
  // Reduces v against rows_, tracking the combination used.
  void reduce(SpVec& v, SpVec& expr) const;
};

}  // namespace dgla

#endif
