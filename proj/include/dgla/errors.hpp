#ifndef DGLA_ERRORS_HPP
#define DGLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dgla {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing elements of different algebra sessions.
struct incompatible_algebra : error {
  using error::error;
};

// A computation needs cells outside the (degree, word length) window.
// Raised instead of ever returning a silently wrong answer.
struct window_error : error {
  using error::error;
};

// Non-terminating series (exp/log/gauge/bch) without a filtration certificate.
struct termination_error : error {
  using error::error;
};

// Result left the subspace it is contractually required to live in.
struct out_of_subspace : error {
  using error::error;
};

struct parse_error : error {
  int line, col;
  parse_error(const std::string& msg, int line_, int col_)
      : error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

}  // namespace dgla

#endif
