#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ncwit {

using cplx = std::complex<double>;

// Default bound on the relative probability mass allowed beyond a truncated
// number-basis expansion.
inline constexpr double kDefaultTailTol = 1e-14;

// Hard cap on the number-basis dimension any operation may reach.
inline constexpr int kMaxFockDim = 1 << 16;

// State vector in the number basis: amplitudes c_0 .. c_{dim-1}.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<cplx> amplitudes);

  // |n>, stored with dimension n+1.
  static FockVector basis(int n);

  int dim() const { return static_cast<int>(amps_.size()); }

  // c_n; zero outside the stored range.
  cplx amplitude(int n) const;
  std::span<const cplx> amplitudes() const { return amps_; }

  double norm_sq() const;
  double norm() const;

  // Copy with `extra` zero slots appended.
  FockVector padded(int extra) const;

  // Copy keeping only amplitudes below `dim`.
  FockVector truncated(int dim) const;

  // c_n -> c_n exp(-i n angle); realizes a -> a exp(-i angle) on moments.
  FockVector rotated(double angle) const;

 private:
  std::vector<cplx> amps_;
};

struct Normalized {
  FockVector state;
  double norm;  // norm of the input vector
};

// a: (a s)_n = sqrt(n+1) s_{n+1}, dimension shrinks by one.
FockVector apply_annihilation(const FockVector& s);

// a†: (a† s)_n = sqrt(n) s_{n-1}, dimension grows by one.
FockVector apply_creation(const FockVector& s);

// Unit-norm copy plus the original norm; throws AnnihilatedStateError on the
// zero vector.
Normalized normalize(const FockVector& s);

cplx inner_product(const FockVector& bra, const FockVector& ket);

// <a†^k a^l> of a unit vector, evaluated as <a^k s | a^l s> so no factorial
// ratios ever appear. Requires k + l < dim.
cplx moment(const FockVector& s, int k, int l);

// n-th central moment <(X - <X>)^n> of the rotated quadrature
// X = (a e^{-i angle} + a† e^{i angle}) / sqrt(2) on a unit vector.
double quadrature_moment(const FockVector& s, int n, double angle);

}  // namespace ncwit
