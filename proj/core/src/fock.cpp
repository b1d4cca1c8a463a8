#include "ncwit/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncwit/errors.hpp"

namespace ncwit {

namespace {

void check_finite(const std::vector<cplx>& amps) {
  for (const cplx& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("FockVector: amplitudes must be finite");
    }
  }
}

}  // namespace

FockVector::FockVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("FockVector: dimension must be >= 1");
  if (dim() > kMaxFockDim) {
    throw TruncationError("FockVector: dimension " + std::to_string(dim()) +
                          " exceeds the truncation budget");
  }
  check_finite(amps_);
}

FockVector FockVector::basis(int n) {
  if (n < 0) throw std::domain_error("FockVector::basis: n must be non-negative");
  std::vector<cplx> amps(n + 1, cplx{0.0, 0.0});
  amps[n] = 1.0;
  return FockVector(std::move(amps));
}

cplx FockVector::amplitude(int n) const {
  if (n < 0 || n >= dim()) return {0.0, 0.0};
  return amps_[n];
}

double FockVector::norm_sq() const {
  long double acc = 0.0L;
  for (const cplx& a : amps_) acc += std::norm(a);
  return static_cast<double>(acc);
}

double FockVector::norm() const { return std::sqrt(norm_sq()); }

FockVector FockVector::padded(int extra) const {
  if (extra < 0) throw std::domain_error("FockVector::padded: extra must be non-negative");
  std::vector<cplx> amps(amps_);
  amps.resize(amps_.size() + extra, cplx{0.0, 0.0});
  return FockVector(std::move(amps));
}

FockVector FockVector::truncated(int dim) const {
  if (dim < 1) throw std::domain_error("FockVector::truncated: dim must be >= 1");
  if (dim >= this->dim()) return *this;
  return FockVector(std::vector<cplx>(amps_.begin(), amps_.begin() + dim));
}

FockVector FockVector::rotated(double angle) const {
  std::vector<cplx> amps(amps_.size());
  for (int n = 0; n < dim(); ++n) amps[n] = amps_[n] * std::polar(1.0, -angle * n);
  return FockVector(std::move(amps));
}

FockVector apply_annihilation(const FockVector& s) {
  if (s.dim() == 1) {
    // a maps a one-slot vector to the zero vector; keep a representation.
    return FockVector(std::vector<cplx>{cplx{0.0, 0.0}});
  }
  std::vector<cplx> out(s.dim() - 1);
  for (int n = 0; n + 1 < s.dim(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * s.amplitude(n + 1);
  }
  return FockVector(std::move(out));
}

FockVector apply_creation(const FockVector& s) {
  if (s.dim() + 1 > kMaxFockDim) {
    throw TruncationError("apply_creation: dimension would exceed the truncation budget");
  }
  std::vector<cplx> out(s.dim() + 1, cplx{0.0, 0.0});
  for (int n = 1; n <= s.dim(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n)) * s.amplitude(n - 1);
  }
  return FockVector(std::move(out));
}

Normalized normalize(const FockVector& s) {
  const double nrm = s.norm();
  if (!(nrm > 0.0)) {
    throw AnnihilatedStateError("normalize: zero vector has no unit representative");
  }
  std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (cplx& a : amps) a /= nrm;
  return Normalized{FockVector(std::move(amps)), nrm};
}

cplx inner_product(const FockVector& bra, const FockVector& ket) {
  const int d = std::min(bra.dim(), ket.dim());
  long double re = 0.0L, im = 0.0L;
  for (int n = 0; n < d; ++n) {
    const cplx t = std::conj(bra.amplitude(n)) * ket.amplitude(n);
    re += t.real();
    im += t.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

cplx moment(const FockVector& s, int k, int l) {
  if (k < 0 || l < 0) throw std::domain_error("moment: orders must be non-negative");
  if (k + l >= s.dim()) {
    throw TruncationError("moment: order k+l=" + std::to_string(k + l) +
                          " does not fit in dimension " + std::to_string(s.dim()));
  }
  FockVector left = s;
  for (int i = 0; i < k; ++i) left = apply_annihilation(left);
  FockVector right = s;
  for (int i = 0; i < l; ++i) right = apply_annihilation(right);
  return inner_product(left, right);
}

double quadrature_moment(const FockVector& s, int n, double angle) {
  if (n < 0) throw std::domain_error("quadrature_moment: n must be non-negative");
  if (s.dim() + n + 2 > kMaxFockDim) {
    throw TruncationError("quadrature_moment: padded dimension exceeds the truncation budget");
  }
  const FockVector base = s.padded(n + 2);
  const cplx eminus = std::polar(1.0, -angle);
  const cplx eplus = std::polar(1.0, angle);
  const double mean = std::sqrt(2.0) * (eminus * moment(base, 0, 1)).real();

  // Repeatedly apply (X - <X>); creation grows the vector so nothing is
  // clipped at the top.
  FockVector v = base;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int step = 0; step < n; ++step) {
    const FockVector down = apply_annihilation(v);
    const FockVector up = apply_creation(v);
    std::vector<cplx> out(up.dim());
    for (int j = 0; j < up.dim(); ++j) {
      out[j] = inv_sqrt2 * (eminus * down.amplitude(j) + eplus * up.amplitude(j)) -
               mean * v.amplitude(j);
    }
    v = FockVector(std::move(out));
  }
  const cplx val = inner_product(base, v);
  return val.real();
}

}  // namespace ncwit
