#ifndef PASYM_PARTITION_TABLE_HPP
#define PASYM_PARTITION_TABLE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "pasym/precision.hpp"
#include "pasym/real.hpp"

namespace pasym {

/// Exact table of partition numbers p(0..n_max), the ground-truth oracle.
///
/// Built once with Euler's pentagonal-number recurrence
///   p(n) = sum_{j>=1} (-1)^{j+1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ],
/// then immutable and safe to share between threads.
class PartitionTable {
 public:
  explicit PartitionTable(std::size_t n_max);

  std::size_t n_max() const { return values_.size() - 1; }

  const mpz_class& at(std::size_t n) const;

  /// Exact p(n+k)/p(n) as a rational; requires n + k <= n_max and k >= 1.
  mpq_class exact_quotient(std::size_t n, unsigned k) const;

  /// p(n+k)/p(n) rounded to `bits` precision.
  Real quotient(std::size_t n, unsigned k, unsigned bits) const;

  /// Sign of the r-fold difference (Delta_j^r p)(n) =
  /// sum_{i=0}^{r} (-1)^i C(r,i) p(n - i j), computed exactly.
  /// Requires r, j >= 1 and n >= r*j.  Returns -1, 0 or +1.
  int delta_sign(unsigned r, unsigned j, std::size_t n) const;

  /// Exact log-concavity test p(n)^2 >= p(n-1) p(n+1); requires 1 <= n < n_max.
  bool log_concave_at(std::size_t n) const;

  /// Binary cache.  Layout (all integers little-endian):
  ///   8-byte magic "P5TABLE1", u64 n_max, then for n = 0..n_max a u64 byte
  ///   count followed by that many little-endian magnitude bytes of p(n).
  void save(const std::string& path) const;
  static PartitionTable load(const std::string& path);

 private:
  PartitionTable() = default;
  std::vector<mpz_class> values_;
};

}  // namespace pasym

#endif  // PASYM_PARTITION_TABLE_HPP
