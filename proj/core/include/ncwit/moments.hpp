#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "ncwit/fock.hpp"
#include "ncwit/states.hpp"

namespace ncwit {

// Normalized moments <a†^k a^l> of one fixed state. Results are memoized;
// entries are write-once, so concurrent readers may race on the first
// evaluation but always converge to the same value.
class MomentProvider {
 public:
  virtual ~MomentProvider() = default;

  cplx moment(int k, int l) const;
  virtual std::string label() const = 0;

 protected:
  virtual cplx compute(int k, int l) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint32_t, cplx> cache_;
};

using MomentProviderPtr = std::shared_ptr<const MomentProvider>;

// Closed-form moment of the two-amplitude superposition, normalized so that
// (0, 0) = 1. Throws AnnihilatedStateError on the degenerate point.
cplx cat_moment(const CatParams& p, int k, int l);
cplx cat_moment(cplx alpha, double phi, int k, int l);

// Closed-form squeezed-vacuum moment assembled from Gaussian pair
// contractions; exact coefficients up to k, l = 12.
cplx squeezed_moment(const SqueezedParams& p, int k, int l);

// The defining double integral over real coherent amplitudes, evaluated with
// Gauss-Legendre quadrature and normalized by its (0, 0) value. Validation
// path for k, l <= 4; requires cos(theta) > 0 for convergence.
cplx squeezed_moment_integral(const SqueezedParams& p, int k, int l, int nodes = 400);

// Unnormalized (0, 0) integral at theta = 0; equals 2 pi xi / sqrt(1 - xi^2).
double squeezed_norm_integral(double xi, int nodes = 400);

MomentProviderPtr cat_moments(const CatParams& p);
MomentProviderPtr squeezed_moments(const SqueezedParams& p);

// Brute-force backend over an explicit number-basis vector (normalized on
// construction). Serves states with no closed form, e.g. after photon
// addition or subtraction.
MomentProviderPtr fock_moments(FockVector s);

// moment'(k, l) = e^{i (k-l) angle} moment(k, l), i.e. a -> a e^{-i angle}.
MomentProviderPtr rotated(MomentProviderPtr base, double angle);

}  // namespace ncwit
