#ifndef DGLA_HOMOLOGY_HPP
#define DGLA_HOMOLOGY_HPP

#include <vector>

#include "dgla/derivation.hpp"

namespace dgla {

// Throws window_error unless every cell of degree <= d_max lies inside the
// window (no silently missing word lengths).
void require_complete_degrees(const FreeLie& L, int d_max);

// rank of delta restricted to degree k (as a map L_k -> L_{k-1}), exact.
int differential_rank(const FreeLie& L, const Differential& delta, int k);

// dim H_k(L, delta) for k in [lo, hi]; exact ranks over Q.
std::vector<int> homology_dims(const FreeLie& L, const Differential& delta, int lo, int hi);

// dims of the word-length-filtration graded pieces of H_k: result[k-lo][n-1]
// is dim gr_n H_k for n = 1..max_word_length. Well defined because the
// differential is decomposable on the examples that use it; requires
// delta(F_n) inside F_n (checked).
std::vector<std::vector<int>> homology_wordlength_gr(const FreeLie& L,
                                                     const Differential& delta,
                                                     int lo, int hi);

enum class Ellipticity { certified_elliptic, inconclusive };

// Sufficient ellipticity test: with generators bounded by degree N, vanishing
// of H_k for all 2N <= k <= 3N certifies finite total homology. Needs the
// window to cover degree 3N+1.
Ellipticity elliptic_certificate(const FreeLie& L, const Differential& delta, int N);

}  // namespace dgla

#endif
