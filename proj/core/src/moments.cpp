#include "ncwit/moments.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncwit/errors.hpp"
#include "ncwit/numerics.hpp"

namespace ncwit {

namespace {

cplx ipow(cplx base, int n) {
  cplx acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

class CatMomentProvider final : public MomentProvider {
 public:
  explicit CatMomentProvider(CatParams p) : p_(p) { p_.validate(); }

  std::string label() const override {
    return "cat(alpha=" + fmt(p_.alpha) + ",phi=" + fmt(p_.phi) + ")";
  }

 protected:
  cplx compute(int k, int l) const override { return cat_moment(p_, k, l); }

 private:
  CatParams p_;
};

class SqueezedMomentProvider final : public MomentProvider {
 public:
  explicit SqueezedMomentProvider(SqueezedParams p) : p_(p) { p_.validate(); }

  std::string label() const override {
    return "squeezed(xi=" + fmt(p_.xi) + ",theta=" + fmt(p_.theta) + ")";
  }

 protected:
  cplx compute(int k, int l) const override { return squeezed_moment(p_, k, l); }

 private:
  SqueezedParams p_;
};

class FockMomentProvider final : public MomentProvider {
 public:
  explicit FockMomentProvider(FockVector s) : s_(std::move(s)) {}

  std::string label() const override { return "fock(dim=" + std::to_string(s_.dim()) + ")"; }

 protected:
  cplx compute(int k, int l) const override { return ncwit::moment(s_, k, l); }

 private:
  FockVector s_;
};

class RotatedMomentProvider final : public MomentProvider {
 public:
  RotatedMomentProvider(MomentProviderPtr base, double angle)
      : base_(std::move(base)), angle_(angle) {
    if (!base_) throw std::invalid_argument("rotated: base provider is null");
  }

  std::string label() const override {
    return base_->label() + "*rot(" + fmt(angle_) + ")";
  }

 protected:
  cplx compute(int k, int l) const override {
    return std::polar(1.0, (k - l) * angle_) * base_->moment(k, l);
  }

 private:
  MomentProviderPtr base_;
  double angle_;
};

}  // namespace

cplx MomentProvider::moment(int k, int l) const {
  if (k < 0 || l < 0) throw std::domain_error("moment: orders must be non-negative");
  const std::uint32_t key = (static_cast<std::uint32_t>(k) << 16) | static_cast<std::uint32_t>(l);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const cplx value = compute(k, l);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, value).first->second;
}

cplx cat_moment(cplx alpha, double phi, int k, int l) {
  if (k < 0 || l < 0) throw std::domain_error("cat_moment: orders must be non-negative");
  const double a2 = std::norm(alpha);
  const cplx h00 = 2.0 + 2.0 * std::cos(phi) * std::exp(-2.0 * a2);
  if (std::abs(h00) == 0.0) {
    throw AnnihilatedStateError(
        "cat state is undefined at alpha=0, phi=pi (normalization constant vanishes)");
  }
  const double plus = 1.0 + ((k + l) % 2 == 0 ? 1.0 : -1.0);
  const double sk = (k % 2 == 0) ? 1.0 : -1.0;
  const double sl = (l % 2 == 0) ? 1.0 : -1.0;
  const cplx cross = std::exp(-2.0 * a2) *
                     (sk * std::polar(1.0, -phi) + sl * std::polar(1.0, phi));
  const cplx h = ipow(std::conj(alpha), k) * ipow(alpha, l) * (plus + cross);
  return h / h00;
}

cplx cat_moment(const CatParams& p, int k, int l) {
  p.validate();
  return cat_moment(cplx{p.alpha, 0.0}, p.phi, k, l);
}

cplx squeezed_moment(const SqueezedParams& p, int k, int l) {
  p.validate();
  if (k < 0 || l < 0) throw std::domain_error("squeezed_moment: orders must be non-negative");
  if (k > 12 || l > 12) {
    throw std::domain_error("squeezed_moment: closed form supported for k, l <= 12");
  }
  if ((k + l) % 2 != 0) return {0.0, 0.0};

  const double xi2 = p.xi * p.xi;
  const double nbar = xi2 / (1.0 - xi2);
  const cplx nu = std::polar(p.xi / (1.0 - xi2), p.theta);

  // Sum over perfect pairings: p pairs of a†, q pairs of a, s mixed pairs.
  long double re = 0.0L, im = 0.0L;
  for (int s = k % 2; s <= std::min(k, l); s += 2) {
    const int pp = (k - s) / 2;
    const int qq = (l - s) / 2;
    double coeff = static_cast<double>(binomial(k, s)) * double_factorial(k - s - 1) *
                   static_cast<double>(binomial(l, s)) * double_factorial(l - s - 1);
    for (int j = 2; j <= s; ++j) coeff *= j;  // s!
    const cplx term = coeff * ipow(std::conj(nu), pp) * ipow(nu, qq) *
                      std::pow(nbar, static_cast<double>(s));
    re += term.real();
    im += term.imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double squeezed_norm_integral(double xi, int nodes) {
  SqueezedParams p{xi, 0.0};
  p.validate();
  if (xi == 0.0) throw std::domain_error("squeezed_norm_integral: xi must be positive");
  std::vector<double> x, w;
  gauss_legendre(nodes, x, w);
  const double sigma = std::sqrt(std::max(xi / (1.0 - xi * xi), 0.25));
  const double L = 12.0 * sigma;
  const double g = (1.0 - xi) / (2.0 * xi);
  std::vector<double> f(nodes);
  for (int i = 0; i < nodes; ++i) {
    x[i] *= L;
    w[i] *= L;
    f[i] = std::exp(-g * x[i] * x[i]) * w[i];
  }
  long double acc = 0.0L;
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      const double d = x[i] - x[j];
      acc += f[i] * f[j] * std::exp(-0.5 * d * d);
    }
  }
  return static_cast<double>(acc);
}

cplx squeezed_moment_integral(const SqueezedParams& p, int k, int l, int nodes) {
  p.validate();
  if (k < 0 || l < 0 || k > 4 || l > 4) {
    throw std::domain_error("squeezed_moment_integral: validation path covers k, l <= 4");
  }
  if (p.xi == 0.0) return (k == 0 && l == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
  if (std::cos(p.theta) <= 0.05) {
    throw std::domain_error("squeezed_moment_integral: integral diverges unless cos(theta) > 0");
  }

  const cplx zeta = std::polar(p.xi, p.theta);
  const cplx g = (1.0 - zeta) / (2.0 * zeta);

  std::vector<double> x, w;
  gauss_legendre(nodes, x, w);
  const double sigma = std::sqrt(std::max(p.xi / (1.0 - p.xi * p.xi), 0.25));
  const double L = 12.0 * sigma;
  std::vector<cplx> f(nodes);
  for (int i = 0; i < nodes; ++i) {
    x[i] *= L;
    w[i] *= L;
    f[i] = std::exp(-g * x[i] * x[i]) * w[i];
  }

  // H(k,l) = sum_ij conj(f_i) f_j K_ij x_i^k x_j^l, normalized by (0,0).
  long double num_re = 0.0L, num_im = 0.0L, den_re = 0.0L, den_im = 0.0L;
  for (int i = 0; i < nodes; ++i) {
    const double xik = std::pow(x[i], k);
    for (int j = 0; j < nodes; ++j) {
      const double d = x[i] - x[j];
      const cplx base = std::conj(f[i]) * f[j] * std::exp(-0.5 * d * d);
      const cplx num = base * xik * std::pow(x[j], l);
      num_re += num.real();
      num_im += num.imag();
      den_re += base.real();
      den_im += base.imag();
    }
  }
  const cplx num{static_cast<double>(num_re), static_cast<double>(num_im)};
  const cplx den{static_cast<double>(den_re), static_cast<double>(den_im)};
  return num / den;
}

MomentProviderPtr cat_moments(const CatParams& p) {
  if (p.alpha == 0.0) {
    // force the degeneracy check up front
    cat_moment(p, 0, 0);
  }
  return std::make_shared<CatMomentProvider>(p);
}

MomentProviderPtr squeezed_moments(const SqueezedParams& p) {
  return std::make_shared<SqueezedMomentProvider>(p);
}

MomentProviderPtr fock_moments(FockVector s) {
  Normalized r = normalize(s);
  return std::make_shared<FockMomentProvider>(std::move(r.state));
}

MomentProviderPtr rotated(MomentProviderPtr base, double angle) {
  return std::make_shared<RotatedMomentProvider>(std::move(base), angle);
}

}  // namespace ncwit
