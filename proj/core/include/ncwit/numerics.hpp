#pragma once

#include <cstdint>
#include <vector>

namespace ncwit {

// Wide enough for every Stirling number in the supported range; S(32,16)
// alone needs 81 bits.
using uint128 = unsigned __int128;

// Binomial coefficient C(n, k), exact. Requires 0 <= n <= 64 so that every
// value fits in 64 bits; k outside [0, n] yields 0.
std::uint64_t binomial(int n, int k);

// ln C(n, k) for arguments beyond the exact range.
double log_binomial(int n, int k);

// Stirling number of the second kind S(r, k): partitions of an r-set into k
// nonempty blocks. Exact for r, k <= 32; k outside [0, r] yields 0.
uint128 stirling2(int r, int k);

// n!! with the conventions (-1)!! = 0!! = 1. Supports -1 <= n <= 300.
double double_factorial(int n);

// Rising factorial x (x+1) ... (x+n-1); n = 0 gives 1.
double pochhammer(double x, int n);

// Precomputed ln(n!) for n = 0..max_n. Immutable after construction, so
// concurrent readers need no synchronization.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_n);

  // ln(n!); throws std::out_of_range beyond the table.
  double operator()(int n) const;

  int max_n() const { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<double> values_;
};

}  // namespace ncwit
