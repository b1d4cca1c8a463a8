#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncwit/errors.hpp"
#include "ncwit/fock.hpp"
#include "testutil.hpp"

using namespace ncwit;
using testutil::coherent;
using testutil::random_state;

TEST_CASE("vector construction and access") {
  const FockVector v(std::vector<cplx>{{1.0, 0.0}, {0.0, 2.0}});
  CHECK(v.dim() == 2);
  CHECK(v.amplitude(1) == cplx{0.0, 2.0});
  CHECK(v.amplitude(7) == cplx{0.0, 0.0});
  CHECK(v.amplitude(-1) == cplx{0.0, 0.0});
  CHECK(v.norm_sq() == doctest::Approx(5.0));

  CHECK(v.padded(3).dim() == 5);
  CHECK(v.padded(3).amplitude(1) == cplx{0.0, 2.0});
  CHECK(v.truncated(1).dim() == 1);

  CHECK_THROWS_AS(FockVector(std::vector<cplx>{}), std::invalid_argument);
  CHECK_THROWS_AS(FockVector(std::vector<cplx>{{std::nan(""), 0.0}}), std::invalid_argument);
}

TEST_CASE("basis states") {
  const FockVector n3 = FockVector::basis(3);
  CHECK(n3.dim() == 4);
  CHECK(n3.amplitude(3) == cplx{1.0, 0.0});
  CHECK(n3.amplitude(0) == cplx{0.0, 0.0});
  CHECK(moment(n3.padded(4), 1, 1).real() == doctest::Approx(3.0));
}

TEST_CASE("annihilation") {
  CHECK(apply_annihilation(FockVector::basis(1)).amplitude(0) == cplx{1.0, 0.0});
  const FockVector a2 = apply_annihilation(FockVector::basis(2));
  CHECK(a2.amplitude(1).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(a2.amplitude(1).imag() == 0.0);
  const FockVector vac = apply_annihilation(FockVector::basis(0));
  CHECK(vac.dim() == 1);
  CHECK(vac.norm() == 0.0);
}

TEST_CASE("creation") {
  CHECK(apply_creation(FockVector::basis(0)).amplitude(1) == cplx{1.0, 0.0});
  const FockVector c1 = apply_creation(FockVector::basis(1));
  CHECK(c1.dim() == 3);
  CHECK(c1.amplitude(2).real() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("creation then annihilation gives n + 1") {
  for (int n = 0; n <= 6; ++n) {
    const FockVector v = apply_annihilation(apply_creation(FockVector::basis(n)));
    CHECK(v.amplitude(n).real() == doctest::Approx(n + 1.0).epsilon(1e-14));
  }
}

TEST_CASE("normalize") {
  const Normalized r = normalize(FockVector(std::vector<cplx>{{2.0, 0.0}}));
  CHECK(r.norm == doctest::Approx(2.0));
  CHECK(r.state.amplitude(0) == cplx{1.0, 0.0});

  CHECK_THROWS_AS(normalize(FockVector(std::vector<cplx>(4, cplx{0.0, 0.0}))),
                  AnnihilatedStateError);
}

TEST_CASE("two-amplitude superposition norm") {
  const FockVector plus = coherent(1.0, 40);
  const FockVector minus = coherent(-1.0, 40);
  std::vector<cplx> amps(40);
  for (int n = 0; n < 40; ++n) amps[n] = plus.amplitude(n) + minus.amplitude(n);
  const Normalized r = normalize(FockVector(std::move(amps)));
  CHECK(r.norm * r.norm == doctest::Approx(2.2706705664732254).epsilon(1e-12));
}

TEST_CASE("single photon added coherent state mean photon number") {
  const FockVector pacs = normalize(apply_creation(coherent(1.0, 40))).state;
  // (|a|^4 + 3 |a|^2 + 1) / (|a|^2 + 1) at alpha = 1
  CHECK(moment(pacs, 1, 1).real() == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("moments of coherent and basis vectors") {
  const FockVector c = coherent(1.0, 40);
  CHECK(moment(c, 0, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment(c, 0, 1).imag() == doctest::Approx(0.0));
  CHECK(moment(c, 1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment(c, 2, 2).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("moment requires k + l < dim") {
  const FockVector v = FockVector::basis(1).padded(2);  // dim 4
  CHECK_NOTHROW(moment(v, 1, 2));
  CHECK_THROWS_AS(moment(v, 2, 2), TruncationError);
}

TEST_CASE("number expectation equals the amplitude-weighted sum") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const FockVector s = random_state(rng, 16);
    long double direct = 0.0L;
    for (int n = 0; n < s.dim(); ++n) direct += n * std::norm(s.amplitude(n));
    CHECK(moment(s, 1, 1).real() ==
          doctest::Approx(static_cast<double>(direct)).epsilon(1e-12));
  }
}

TEST_CASE("moment hermiticity on random states") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    const FockVector s = random_state(rng, 14);
    for (int k = 0; k <= 5; ++k) {
      for (int l = 0; l <= 5; ++l) {
        const cplx a = moment(s, k, l);
        const cplx b = std::conj(moment(s, l, k));
        CHECK(std::abs(a - b) < 1e-12);
      }
    }
  }
}

TEST_CASE("rotation shifts moments by a phase") {
  std::mt19937 rng(4242);
  const FockVector s = random_state(rng, 12);
  const double angle = 0.83;
  const FockVector r = s.rotated(angle);
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      const cplx expected = std::polar(1.0, (k - l) * angle) * moment(s, k, l);
      CHECK(std::abs(moment(r, k, l) - expected) < 1e-12);
    }
  }
}

TEST_CASE("quadrature central moments") {
  const FockVector vac = FockVector::basis(0);
  CHECK(quadrature_moment(vac, 2, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(quadrature_moment(vac, 4, 0.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(quadrature_moment(vac, 2, 1.1) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(quadrature_moment(FockVector::basis(1), 2, 0.0) == doctest::Approx(1.5).epsilon(1e-12));

  // coherent states sit exactly at the vacuum values for every angle
  const FockVector c = coherent(0.9, 40);
  for (double angle : {0.0, 0.7, 1.5707963267948966}) {
    CHECK(quadrature_moment(c, 2, angle) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(quadrature_moment(c, 4, angle) == doctest::Approx(0.75).epsilon(1e-10));
  }
}

TEST_CASE("first central quadrature moment vanishes") {
  std::mt19937 rng(99);
  const FockVector s = random_state(rng, 10);
  CHECK(quadrature_moment(s, 1, 0.4) == doctest::Approx(0.0).epsilon(1e-12));
}
