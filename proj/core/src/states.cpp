#include "ncwit/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncwit/errors.hpp"

namespace ncwit {

namespace {

// Floor on the last kept |c_n|^2 relative to the total, under the tail
// tolerance. Moments weight the tail by powers of n, so the cut must sit well
// below tail_tol itself; see the oracle-agreement tests for the calibration.
constexpr double kAmpFloorFactor = 1e-8;

void check_tail_tol(double tail_tol) {
  if (!(tail_tol > 1e-300) || !(tail_tol < 1e-4)) {
    throw std::domain_error("tail_tol must lie in (1e-300, 1e-4)");
  }
}

// Smallest dimension whose trailing four slots carry relative mass below
// tail_tol and whose last kept weight sits below the amplitude floor.
int select_dim(const std::vector<double>& w, double tail_tol) {
  const int n = static_cast<int>(w.size());
  long double total = 0.0L;
  for (double x : w) total += x;
  std::vector<long double> suffix(n + 1, 0.0L);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + w[i];

  const long double window_cap = tail_tol * total;
  const long double floor_cap = tail_tol * kAmpFloorFactor * total;
  for (int d = 5; d <= n; ++d) {
    // Parity states leave alternate slots exactly empty, so the floor must
    // look at the largest of the trailing kept weights, not just the last one.
    const double top = std::max(std::max(w[d - 1], w[d - 2]), std::max(w[d - 3], w[d - 4]));
    if (suffix[d - 4] < window_cap && top < floor_cap) return d;
  }
  throw TruncationError("state tail does not fit the truncation budget");
}

FockVector finish(std::vector<cplx> amps, const std::vector<double>& w, double tail_tol) {
  const int d = select_dim(w, tail_tol);
  amps.resize(d);
  Normalized r = normalize(FockVector(std::move(amps)));
  return std::move(r.state);
}

}  // namespace

void CatParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(phi)) {
    throw std::domain_error("cat parameters must be finite");
  }
  if (alpha < 0.0) {
    throw std::domain_error("alpha must be >= 0; got " + std::to_string(alpha));
  }
}

void SqueezedParams::validate() const {
  if (!std::isfinite(xi) || !std::isfinite(theta)) {
    throw std::domain_error("squeezed parameters must be finite");
  }
  if (xi < 0.0 || xi > 1.0 - 1e-6) {
    throw std::domain_error("xi must be < 1 (and >= 0); got " + std::to_string(xi));
  }
}

void NonGaussianOp::validate() const {
  if (added < 0 || subtracted < 0) {
    throw std::domain_error("photon addition/subtraction counts must be >= 0");
  }
  if (added + subtracted > 8) {
    throw std::domain_error("at most 8 combined additions and subtractions are supported");
  }
}

FockVector cat_fock(const CatParams& p, double tail_tol) {
  p.validate();
  check_tail_tol(tail_tol);

  const cplx phase = std::polar(1.0, p.phi);
  const cplx factor_even = 1.0 + phase;
  const cplx factor_odd = 1.0 - phase;

  if (p.alpha == 0.0) {
    // Same discriminant as the analytic normalization 2 + 2 cos(phi), which
    // rounds to an exact zero at phi = pi while |1 + e^{i phi}| does not.
    if (2.0 + 2.0 * std::cos(p.phi) <= 0.0) {
      throw AnnihilatedStateError(
          "cat state is undefined at alpha=0, phi=pi (normalization constant vanishes)");
    }
    std::vector<cplx> amps(8, cplx{0.0, 0.0});
    amps[0] = factor_even;
    std::vector<double> w(8, 0.0);
    w[0] = std::norm(factor_even);
    return finish(std::move(amps), w, tail_tol);
  }

  const double log_alpha = std::log(p.alpha);
  const double fe2 = std::norm(factor_even);
  const double fo2 = std::norm(factor_odd);
  const double stop_weight = std::min(1e-28, tail_tol * kAmpFloorFactor * 1e-2);

  // First pass: log magnitudes of the coherent coefficients alpha^n/sqrt(n!),
  // tracking the global peak; only past the peak does the running maximum
  // equal the final one, which is where the stop rule is evaluated.
  std::vector<double> logs;
  double log_mag = -0.5 * p.alpha * p.alpha;
  double log_max = log_mag;
  for (int n = 0; n < kMaxFockDim; ++n) {
    if (n > 0) {
      log_mag += log_alpha - 0.5 * std::log(static_cast<double>(n));
      log_max = std::max(log_max, log_mag);
    }
    logs.push_back(log_mag);
    const bool past_peak = n > p.alpha * p.alpha + 4.0;
    const double rel = std::exp(log_mag - log_max);
    if (past_peak && rel * rel * std::max(fe2, fo2) < stop_weight) break;
  }

  std::vector<cplx> amps(logs.size());
  std::vector<double> w(logs.size());
  for (std::size_t n = 0; n < logs.size(); ++n) {
    const double rel = std::exp(logs[n] - log_max);
    amps[n] = (n % 2 == 0 ? factor_even : factor_odd) * rel;
    w[n] = (n % 2 == 0 ? fe2 : fo2) * rel * rel;
  }
  return finish(std::move(amps), w, tail_tol);
}

FockVector squeezed_vacuum_fock(const SqueezedParams& p, double tail_tol) {
  p.validate();
  check_tail_tol(tail_tol);

  if (p.xi == 0.0) {
    return FockVector::basis(0).padded(7);
  }

  const double log_xi = std::log(p.xi);
  const double stop_weight = std::min(1e-28, tail_tol * kAmpFloorFactor * 1e-2);
  std::vector<cplx> amps;
  std::vector<double> w;
  double log_mag = 0.0;  // ln |c_{2m}| up to the overall normalization
  for (int m = 0; 2 * m < kMaxFockDim; ++m) {
    if (m > 0) {
      // c_{2m} / c_{2m-2} = zeta sqrt((2m-1)(2m)) / (2m)
      log_mag += log_xi + 0.5 * (std::log(2.0 * m - 1.0) + std::log(2.0 * m)) -
                 std::log(2.0 * m);
    }
    const double mag = std::exp(log_mag);
    amps.push_back(std::polar(mag, p.theta * m));
    amps.push_back(cplx{0.0, 0.0});  // odd slots are exactly empty
    w.push_back(mag * mag);
    w.push_back(0.0);
    if (m > 2 && mag * mag < stop_weight) break;
  }
  return finish(std::move(amps), w, tail_tol);
}

FockVector apply_non_gaussian(const FockVector& s, const NonGaussianOp& op) {
  op.validate();
  FockVector v = s;
  for (int i = 0; i < op.added; ++i) v = apply_creation(v);
  for (int i = 0; i < op.subtracted; ++i) v = apply_annihilation(v);
  Normalized r = normalize(FockVector(std::vector<cplx>(v.amplitudes().begin(),
                                                        v.amplitudes().end())));
  return std::move(r.state);
}

}  // namespace ncwit
