#ifndef DGLA_DER_SUBSPACES_HPP
#define DGLA_DER_SUBSPACES_HPP

#include <map>
#include <vector>

#include "dgla/derivation.hpp"
#include "dgla/filtration.hpp"

namespace dgla {

// The distinguished families of derivations:
//   full           all of Der_k
//   dder           degree > 0: everything; degree 0: filtration-raising linear
//                  part modulo decomposables; degree < 0: decomposable values
//   sder           like dder (trivial filtration) but negative degrees need
//                  values of word length >= 3
//   weight_raising derivations of a bigraded session that strictly raise the
//                  weight
enum class DerKind { full, dder, sder, weight_raising };

struct DerSubspaceBasis {
  DerKind kind = DerKind::full;
  int degree = 0;
  std::vector<Derivation> elements;
  int dim() const { return static_cast<int>(elements.size()); }
};

// Bases within the window. All are validated against the membership predicate.
DerSubspaceBasis der_basis(const FreeLie* L, int k);
DerSubspaceBasis dder_basis(const FreeLie* L, const FiltrationOfV& f, int k);
DerSubspaceBasis sder_basis(const FreeLie* L, int k);
DerSubspaceBasis weight_raising_basis(const FreeLie* L, int k);

// Exact membership predicates (the ground truth the bases are checked
// against). The filtration is only consulted for dder at degree 0.
bool membership(DerKind kind, const FiltrationOfV* f, const Derivation& theta);

// ---- the interleaved filtration machinery on Der L ----
// Coordinate filtrations only: every monomial has a level sum p and sits in
// F^{n,p}; its position is filtration_position(word length, p, q).
long monomial_position(const FreeLie* L, const FiltrationOfV& f, Mono m);

// theta(F^r) inside F^{n+r} for all r >= 0 (F^0 = L), checked on all basis
// monomials inside the window.
bool fn_membership(const FreeLie* L, const FiltrationOfV& f, int n, const Derivation& theta);

// basis of the degree-k part of F^n within the window (exact nullspace of the
// position constraints over the elementary derivations)
DerSubspaceBasis fn_basis(const FreeLie* L, const FiltrationOfV& f, int n, int k);

// Sparse coordinates of derivations in a shared lazily-built column index;
// used for span comparisons and for expressing brackets in chosen bases.
class DerCoords {
 public:
  SpVec coords(const Derivation& th);

 private:
  std::map<std::pair<int, Mono>, int> cols_;
};

// span equality / containment helpers
bool der_span_contains(const std::vector<Derivation>& span, const Derivation& th);
bool der_spans_equal(const std::vector<Derivation>& a, const std::vector<Derivation>& b);

}  // namespace dgla

#endif
