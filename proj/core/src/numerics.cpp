#include "ncwit/numerics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ncwit {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) {
    throw std::domain_error("binomial: exact range is 0 <= n <= 64, got n=" + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<uint128>(n - k + i) / static_cast<uint128>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

double log_binomial(int n, int k) {
  if (n < 0) throw std::domain_error("log_binomial: n must be non-negative");
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k outside [0, n]");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

uint128 stirling2(int r, int k) {
  constexpr int kMax = 32;
  if (r < 0 || r > kMax || k > kMax) {
    throw std::domain_error("stirling2: exact range is 0 <= r, k <= 32");
  }
  if (k < 0 || k > r) return 0;
  if (r == 0) return 1;  // S(0,0) = 1
  // Row-by-row recurrence S(r,k) = k S(r-1,k) + S(r-1,k-1).
  std::array<uint128, kMax + 1> row{};
  row[0] = 1;
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j >= 1; --j) {
      row[j] = static_cast<uint128>(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

double double_factorial(int n) {
  if (n < -1) throw std::domain_error("double_factorial: n must be >= -1");
  if (n > 300) throw std::domain_error("double_factorial: n > 300 overflows double");
  double acc = 1.0;
  for (int i = n; i > 1; i -= 2) acc *= i;
  return acc;
}

double pochhammer(double x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be non-negative");
  double acc = 1.0;
  for (int j = 0; j < n; ++j) acc *= x + j;
  return acc;
}

LogFactorialTable::LogFactorialTable(int max_n) {
  if (max_n < 0) throw std::domain_error("LogFactorialTable: max_n must be non-negative");
  values_.resize(max_n + 1);
  values_[0] = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    values_[n] = values_[n - 1] + std::log(static_cast<double>(n));
  }
}

double LogFactorialTable::operator()(int n) const {
  if (n < 0 || n >= static_cast<int>(values_.size())) {
    throw std::out_of_range("LogFactorialTable: index " + std::to_string(n) + " outside table");
  }
  return values_[n];
}

}  // namespace ncwit
