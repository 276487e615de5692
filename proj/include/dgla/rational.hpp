#ifndef DGLA_RATIONAL_HPP
#define DGLA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace dgla {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which the whole library relies on for equality.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Renders "p" or "p/q"; never floating point.
inline std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses "p" or "p/q" (arbitrary precision). Returns false on malformed input.
bool rat_parse(const std::string& s, Rational& out);

}  // namespace dgla

#endif
