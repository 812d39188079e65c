#ifndef PASYM_ERRORS_HPP
#define PASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pasym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside a function's mathematical domain (e.g. nu(m) with m < 2).
struct DomainError : Error {
  using Error::Error;
};

/// Index outside a table or a sum's admissible range.
struct RangeError : Error {
  using Error::Error;
};

/// Expansion requested below its certified cutoff.
struct CutoffError : Error {
  using Error::Error;
};

/// Pair explicitly excluded by a theorem's hypothesis, e.g. (n,m) = (6,2).
struct ExclusionError : Error {
  using Error::Error;
};

/// Oracle table too small for the requested verification sweep.
struct SizingError : Error {
  SizingError(const std::string& msg, std::size_t required)
      : Error(msg), required_n_max(required) {}
  std::size_t required_n_max;
};

/// Certified comparison stayed inside the ambiguity margin up to max_bits.
struct AmbiguousError : Error {
  using Error::Error;
};

}  // namespace pasym

#endif  // PASYM_ERRORS_HPP
