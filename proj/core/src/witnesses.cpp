#include "ncwit/witnesses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncwit/errors.hpp"
#include "ncwit/numerics.hpp"

namespace ncwit {

namespace {

cplx ipow(cplx base, int n) {
  cplx acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

double require_real(cplx value, const char* what) {
  if (std::abs(value.imag()) > kImagResidueTol) {
    throw ConsistencyError(std::string(what) + ": imaginary residue " +
                           std::to_string(value.imag()) + " exceeds tolerance");
  }
  return value.real();
}

WitnessResult make_result(WitnessKind kind, int order, double value, std::string params) {
  return WitnessResult{kind, order, value, value < kNonclassicalThreshold, std::move(params)};
}

}  // namespace

const char* witness_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Hoa: return "hoa";
    case WitnessKind::Hosps: return "hosps";
    case WitnessKind::HongMandel: return "hong_mandel";
    case WitnessKind::Hillery1: return "hillery_a1";
    case WitnessKind::Hillery2: return "hillery_a2";
  }
  return "unknown";
}

WitnessResult hoa(const MomentProvider& m, int l) {
  if (l < 1 || l > 8) throw std::domain_error("hoa: order must satisfy 1 <= l <= 8");
  const cplx d = m.moment(l + 1, l + 1) - ipow(m.moment(1, 1), l + 1);
  return make_result(WitnessKind::Hoa, l, require_real(d, "hoa"), m.label());
}

WitnessResult hosps(const MomentProvider& m, int l) {
  if (l < 2 || l > 8) throw std::domain_error("hosps: order must satisfy 2 <= l <= 8");
  const cplx n1 = m.moment(1, 1);
  cplx acc{0.0, 0.0};
  for (int r = 0; r <= l; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    const double c_lr = static_cast<double>(binomial(l, r));
    for (int k = 0; k <= r; ++k) {
      const double s2 = static_cast<double>(stirling2(r, k));
      if (s2 == 0.0) continue;
      const cplx diff = m.moment(k, k) - ipow(n1, k);  // D(k-1); zero at k = 0
      acc += s2 * c_lr * sign * diff * ipow(n1, l - r);
    }
  }
  return make_result(WitnessKind::Hosps, l, require_real(acc, "hosps"), m.label());
}

double quadrature_central_moment(const MomentProvider& m, int n, double angle) {
  if (n < 0 || n % 2 != 0 || n > 10) {
    throw std::domain_error("quadrature_central_moment: n must be even, 0 <= n <= 10");
  }
  auto rot = [&](int k, int l) { return std::polar(1.0, (k - l) * angle) * m.moment(k, l); };
  const cplx mean = rot(1, 0) + rot(0, 1);  // <a† + a> along the rotated axis
  const double scale = std::pow(2.0, -0.5 * n);
  cplx acc{0.0, 0.0};
  for (int r = 0; r <= n; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    const double c_nr = static_cast<double>(binomial(n, r));
    const cplx mean_pow = ipow(mean, n - r);
    for (int i = 0; 2 * i <= r; ++i) {
      const double pair_w = double_factorial(2 * i - 1) * static_cast<double>(binomial(r, 2 * i));
      for (int k = 0; k <= r - 2 * i; ++k) {
        const double c_k = static_cast<double>(binomial(r - 2 * i, k));
        acc += sign * scale * pair_w * c_k * c_nr * mean_pow * rot(k, r - 2 * i - k);
      }
    }
  }
  return require_real(acc, "quadrature_central_moment");
}

WitnessResult hong_mandel(const MomentProvider& m, int n, double angle) {
  if (n < 2 || n % 2 != 0 || n > 10) {
    throw std::domain_error("hong_mandel: order must be even, 2 <= n <= 10");
  }
  const double vacuum = pochhammer(0.5, n / 2);  // (1/2)_{n/2} = (n-1)!!/2^{n/2}
  const double dxn = quadrature_central_moment(m, n, angle);
  return make_result(WitnessKind::HongMandel, n, (dxn - vacuum) / vacuum, m.label());
}

std::pair<WitnessResult, WitnessResult> hillery2(const MomentProvider& m) {
  const cplx h40 = m.moment(4, 0);
  const cplx h04 = m.moment(0, 4);
  const cplx h22 = m.moment(2, 2);
  const cplx h20 = m.moment(2, 0);
  const cplx h02 = m.moment(0, 2);
  const cplx a1 = 0.25 * (h40 + h04 + 2.0 * h22 - ipow(h20 + h02, 2));
  const cplx a2 = 0.25 * (-h40 - h04 + 2.0 * h22 + ipow(h20 - h02, 2));
  return {make_result(WitnessKind::Hillery1, 2, require_real(a1, "hillery2"), m.label()),
          make_result(WitnessKind::Hillery2, 2, require_real(a2, "hillery2"), m.label())};
}

std::pair<WitnessResult, WitnessResult> hillery_general(const FockVector& s, int l) {
  if (l < 1 || l > 4) throw std::domain_error("hillery_general: order must satisfy 1 <= l <= 4");
  if (2 * l >= s.dim()) {
    throw TruncationError("hillery_general: dimension too small for the requested order");
  }
  const cplx exp_a = moment(s, 0, l);        // <a^l>
  const cplx exp_a2 = moment(s, 0, 2 * l);   // <a^{2l}>
  const double ada = moment(s, l, l).real(); // <a†^l a^l>

  FockVector up = s;
  for (int i = 0; i < l; ++i) up = apply_creation(up);
  const double aad = up.norm_sq();           // <a^l a†^l>

  const double y1 = exp_a.real();
  const double y2 = exp_a.imag();
  const double y1_sq = (2.0 * exp_a2.real() + aad + ada) / 4.0;
  const double y2_sq = (-2.0 * exp_a2.real() + aad + ada) / 4.0;
  const double bound = std::abs(aad - ada) / 4.0;  // |<[Y1, Y2]>| / 2

  const std::string params = "fock(dim=" + std::to_string(s.dim()) + ",l=" + std::to_string(l) + ")";
  return {make_result(WitnessKind::Hillery1, l, y1_sq - y1 * y1 - bound, params),
          make_result(WitnessKind::Hillery2, l, y2_sq - y2 * y2 - bound, params)};
}

}  // namespace ncwit
