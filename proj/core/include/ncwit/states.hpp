#pragma once

#include "ncwit/fock.hpp"

namespace ncwit {

// Superposition of two opposite coherent amplitudes with a relative phase:
//   (|alpha> + e^{i phi} |-alpha>) / sqrt(N)
// phi = 0 keeps even photon numbers, phi = pi odd ones; phi = pi/2 has
// Poissonian statistics. alpha = 0 with phi = pi is degenerate (N -> 0).
struct CatParams {
  double alpha = 1.0;
  double phi = 0.0;

  void validate() const;  // alpha >= 0, both fields finite
};

// Squeezed vacuum written as a continuous superposition of real coherent
// amplitudes with Gaussian weight; the number-basis series carries the
// tanh-style parameter zeta = xi e^{i theta} with 0 <= xi < 1.
struct SqueezedParams {
  double xi = 0.5;
  double theta = 0.0;

  void validate() const;
};

// m photon additions followed by q subtractions: a^q a†^m, renormalized.
struct NonGaussianOp {
  int added = 0;
  int subtracted = 0;

  bool trivial() const { return added == 0 && subtracted == 0; }
  void validate() const;  // both >= 0, added + subtracted <= 8
};

// Unit-norm number-basis expansion. The dimension is chosen adaptively: the
// relative mass in the trailing four slots stays below tail_tol, and the last
// kept amplitude is small enough that moment sums with polynomial weights in
// n remain accurate.
FockVector cat_fock(const CatParams& p, double tail_tol = kDefaultTailTol);
FockVector squeezed_vacuum_fock(const SqueezedParams& p, double tail_tol = kDefaultTailTol);

// Applies the addition/subtraction chain and renormalizes. Throws
// AnnihilatedStateError when the chain annihilates the state.
FockVector apply_non_gaussian(const FockVector& s, const NonGaussianOp& op);

}  // namespace ncwit
