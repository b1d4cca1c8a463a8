#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncwit/errors.hpp"
#include "ncwit/moments.hpp"
#include "ncwit/states.hpp"
#include "ncwit/witnesses.hpp"
#include "testutil.hpp"

using namespace ncwit;
using testutil::coherent;
using testutil::random_state;

namespace {

const double kPi = 3.141592653589793;
const double kPiHalf = 1.5707963267948966;

// deliberately non-hermitian fake backend
class BogusProvider final : public MomentProvider {
 public:
  std::string label() const override { return "bogus"; }

 protected:
  cplx compute(int k, int l) const override {
    if (k == 0 && l == 0) return {1.0, 0.0};
    return {0.3, 0.4};
  }
};

}  // namespace

TEST_CASE("witness names") {
  CHECK(std::string(witness_name(WitnessKind::Hoa)) == "hoa");
  CHECK(std::string(witness_name(WitnessKind::Hosps)) == "hosps");
  CHECK(std::string(witness_name(WitnessKind::HongMandel)) == "hong_mandel");
  CHECK(std::string(witness_name(WitnessKind::Hillery1)) == "hillery_a1");
  CHECK(std::string(witness_name(WitnessKind::Hillery2)) == "hillery_a2");
}

TEST_CASE("antibunching witness") {
  const auto vac = fock_moments(FockVector::basis(0).padded(11));
  for (int l = 1; l <= 4; ++l) {
    const WitnessResult r = hoa(*vac, l);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_FALSE(r.nonclassical);
  }

  const auto odd = cat_moments({1.0, kPi});
  CHECK(hoa(*odd, 1).value == doctest::Approx(-0.7240616609663109).epsilon(1e-13));
  CHECK(hoa(*odd, 2).value == doctest::Approx(-0.9507185097260202).epsilon(1e-13));
  CHECK(hoa(*odd, 3).value == doctest::Approx(-1.9723886108139146).epsilon(1e-13));
  CHECK(hoa(*odd, 1).nonclassical);
  CHECK(hoa(*odd, 1).params.find("cat(") == 0);

  // closed form -alpha^4 / sinh^2(alpha^2)
  for (double alpha : {0.4, 0.9, 1.7}) {
    const double a2 = alpha * alpha;
    const double expected = -a2 * a2 / (std::sinh(a2) * std::sinh(a2));
    CHECK(hoa(*cat_moments({alpha, kPi}), 1).value ==
          doctest::Approx(expected).epsilon(1e-11));
  }

  // Poissonian point: phi = pi/2
  const WitnessResult ys = hoa(*cat_moments({1.0, kPiHalf}), 1);
  CHECK(std::abs(ys.value) < 1e-12);
  CHECK_FALSE(ys.nonclassical);

  CHECK_THROWS_AS(hoa(*vac, 0), std::domain_error);
  CHECK_THROWS_AS(hoa(*vac, 9), std::domain_error);
}

TEST_CASE("sub-Poissonian witness reduces to antibunching at l = 2") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = fock_moments(random_state(rng, 8 + trial % 17));
    CHECK(std::abs(hosps(*p, 2).value - hoa(*p, 1).value) < 1e-10);
  }
}

TEST_CASE("sub-Poissonian witness values") {
  const auto vac = fock_moments(FockVector::basis(0).padded(11));
  for (int l = 2; l <= 5; ++l) {
    CHECK(hosps(*vac, l).value == doctest::Approx(0.0).epsilon(1e-14));
  }

  const auto odd = cat_moments({1.0, kPi});
  CHECK(hosps(*odd, 2).value == doctest::Approx(-0.7240616609663109).epsilon(1e-13));
  CHECK(hosps(*odd, 3).value == doctest::Approx(0.27074796344689256).epsilon(1e-12));
  CHECK(hosps(*odd, 4).value == doctest::Approx(-3.8331630789171784).epsilon(1e-12));

  // squeezed family: l = 3 evaluates to -71/27 at xi = 0.5
  const auto sq = squeezed_moments({0.5, 0.0});
  CHECK(hosps(*sq, 3).value == doctest::Approx(-71.0 / 27.0).epsilon(1e-13));

  // coherent states are exactly Poissonian
  const auto coh = fock_moments(coherent(1.1, 40));
  for (int l = 2; l <= 5; ++l) CHECK(std::abs(hosps(*coh, l).value) < 1e-10);

  CHECK_THROWS_AS(hosps(*vac, 1), std::domain_error);
  CHECK_THROWS_AS(hosps(*vac, 9), std::domain_error);
}

TEST_CASE("quadrature expansion matches the operator evaluation") {
  std::mt19937 rng(271828);
  std::vector<FockVector> states;
  states.push_back(FockVector::basis(0).padded(15));
  states.push_back(FockVector::basis(2).padded(13));
  states.push_back(coherent(1.0, 40));
  states.push_back(cat_fock({1.0, 0.0}));
  states.push_back(cat_fock({1.3, kPi}));
  states.push_back(squeezed_vacuum_fock({0.5, 0.0}));
  states.push_back(squeezed_vacuum_fock({0.7, kPi / 3.0}));
  for (int trial = 0; trial < 3; ++trial) states.push_back(random_state(rng, 12));

  for (const FockVector& s : states) {
    const auto p = fock_moments(s);
    for (int n : {2, 4, 6}) {
      for (double angle : {0.0, 0.9, kPiHalf}) {
        const double expansion = quadrature_central_moment(*p, n, angle);
        const double direct = quadrature_moment(s, n, angle);
        CHECK(std::abs(expansion - direct) < 1e-9);
      }
    }
  }
}

TEST_CASE("Hong-Mandel witness") {
  const auto vac = fock_moments(FockVector::basis(0).padded(13));
  for (int n : {2, 4, 6, 8, 10}) {
    CHECK(hong_mandel(*vac, n, 0.0).value == doctest::Approx(0.0).epsilon(1e-12));
  }

  const auto sq = squeezed_moments({0.5, 0.0});
  CHECK(hong_mandel(*sq, 2, kPiHalf).value == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
  CHECK(hong_mandel(*sq, 4, kPiHalf).value == doctest::Approx(-8.0 / 9.0).epsilon(1e-12));
  CHECK(hong_mandel(*sq, 6, kPiHalf).value == doctest::Approx(-26.0 / 27.0).epsilon(1e-12));
  CHECK(hong_mandel(*sq, 2, kPiHalf).nonclassical);

  // anti-squeezed axis: S(2) = (1+xi)/(1-xi) - 1 = 2 at xi = 0.5
  CHECK(hong_mandel(*sq, 2, 0.0).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(hong_mandel(*sq, 2, 0.0).nonclassical);

  CHECK_THROWS_AS(hong_mandel(*sq, 3, 0.0), std::domain_error);
  CHECK_THROWS_AS(hong_mandel(*sq, 0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hong_mandel(*sq, 12, 0.0), std::domain_error);
}

TEST_CASE("fourth-moment squeezing pair") {
  const auto vac = fock_moments(FockVector::basis(0).padded(9));
  const auto [v1, v2] = hillery2(*vac);
  CHECK(v1.value == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v2.value == doctest::Approx(0.0).epsilon(1e-14));

  // squeezed family closed forms: A1 = xi^2 (1 + xi^2) / (1 - xi^2)^2,
  // A2 = xi^2 / (xi^2 - 1)
  for (double xi : {0.1, 0.5, 0.9}) {
    const auto [a1, a2] = hillery2(*squeezed_moments({xi, 0.0}));
    const double xi2 = xi * xi;
    CHECK(a1.value == doctest::Approx(xi2 * (1 + xi2) / ((1 - xi2) * (1 - xi2))).epsilon(1e-12));
    CHECK(a2.value == doctest::Approx(xi2 / (xi2 - 1)).epsilon(1e-12));
    CHECK(a2.nonclassical);
    CHECK_FALSE(a1.nonclassical);
  }

  // the bare two-amplitude superposition shows no fourth-moment squeezing
  for (double alpha : {0.4, 0.8, 1.3, 1.9}) {
    for (double phi : {0.0, 1.0, kPiHalf, kPi}) {
      const auto [a1, a2] = hillery2(*cat_moments({alpha, phi}));
      CHECK(a1.value >= -1e-12);
      CHECK(a2.value >= -1e-12);
    }
  }
}

TEST_CASE("photon addition turns on fourth-moment squeezing") {
  auto added = [](double alpha, double phi, int m, int q) {
    return apply_non_gaussian(cat_fock({alpha, phi}), {m, q});
  };

  const auto [a1, a2] = hillery2(*fock_moments(added(1.0, 0.0, 1, 0)));
  CHECK(a1.value == doctest::Approx(-0.4243214885985731).epsilon(1e-10));
  CHECK(a2.value == doctest::Approx(0.8646647167633883).epsilon(1e-10));
  CHECK(a1.nonclassical);

  CHECK(hillery2(*fock_moments(added(2.0, 0.0, 1, 0))).first.value ==
        doctest::Approx(-0.9629641402035922).epsilon(1e-10));
  CHECK(hillery2(*fock_moments(added(2.0, 0.0, 2, 1))).first.value ==
        doctest::Approx(-1.580756441583361).epsilon(1e-10));
  CHECK(hillery2(*fock_moments(added(0.5, 0.0, 1, 0))).first.value ==
        doctest::Approx(-0.10658997443370988).epsilon(1e-10));
}

TEST_CASE("operator-route pair matches the moment route at l = 2") {
  std::mt19937 rng(1618);
  std::vector<FockVector> states;
  states.push_back(squeezed_vacuum_fock({0.5, 0.0}));
  states.push_back(cat_fock({1.2, 0.9}));
  states.push_back(apply_non_gaussian(cat_fock({1.0, 0.0}), {1, 0}));
  for (int trial = 0; trial < 5; ++trial) states.push_back(random_state(rng, 14));

  for (const FockVector& s : states) {
    const auto [m1, m2] = hillery2(*fock_moments(s));
    const auto [g1, g2] = hillery_general(s, 2);
    CHECK(std::abs(m1.value - g1.value) < 1e-10);
    CHECK(std::abs(m2.value - g2.value) < 1e-10);
  }
}

TEST_CASE("operator-route pair at other orders") {
  const auto [v1, v2] = hillery_general(FockVector::basis(0).padded(9), 1);
  CHECK(v1.value == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v2.value == doctest::Approx(0.0).epsilon(1e-14));

  // l = 1 reduces to ordinary quadrature squeezing: A2 = (1-xi)/(4(1+xi)) - 1/4
  const FockVector sq = squeezed_vacuum_fock({0.5, 0.0});
  const auto [s1, s2] = hillery_general(sq, 1);
  CHECK(s2.value == doctest::Approx(1.0 / 12.0 - 0.25).epsilon(1e-12));
  CHECK(s1.value == doctest::Approx(0.75 - 0.25).epsilon(1e-12));

  CHECK_THROWS_AS(hillery_general(sq, 0), std::domain_error);
  CHECK_THROWS_AS(hillery_general(sq, 5), std::domain_error);
  CHECK_THROWS_AS(hillery_general(FockVector::basis(0), 1), TruncationError);
}

TEST_CASE("global phase invariance") {
  const FockVector s = apply_non_gaussian(cat_fock({1.4, 0.0}), {1, 0});
  std::vector<cplx> shifted(s.amplitudes().begin(), s.amplitudes().end());
  for (auto& a : shifted) a *= std::polar(1.0, 1.234);
  const auto [a1, a2] = hillery2(*fock_moments(s));
  const auto [b1, b2] = hillery2(*fock_moments(FockVector(std::move(shifted))));
  CHECK(a1.value == doctest::Approx(b1.value).epsilon(1e-12));
  CHECK(a2.value == doctest::Approx(b2.value).epsilon(1e-12));
}

TEST_CASE("imaginary residue is rejected") {
  const BogusProvider bogus;
  CHECK_THROWS_AS(hoa(bogus, 1), ConsistencyError);
}

TEST_CASE("nonclassical flag threshold") {
  const auto odd = cat_moments({1.0, kPi});
  CHECK(hoa(*odd, 1).nonclassical);
  const auto even = cat_moments({1.0, 0.0});
  CHECK_FALSE(hoa(*even, 1).nonclassical);
}
