#pragma once

#include <string>
#include <utility>

#include "ncwit/moments.hpp"

namespace ncwit {

enum class WitnessKind { Hoa, Hosps, HongMandel, Hillery1, Hillery2 };

const char* witness_name(WitnessKind kind);

// A witness value below this threshold is reported as nonclassical; the small
// negative margin absorbs floating-point noise around zero.
inline constexpr double kNonclassicalThreshold = -1e-12;

// Assembled witness values must be real up to this residue.
inline constexpr double kImagResidueTol = 1e-10;

struct WitnessResult {
  WitnessKind kind;
  int order;
  double value;
  bool nonclassical;
  std::string params;
};

// Higher-order antibunching: D(l) = <a†^{l+1} a^{l+1}> - <a†a>^{l+1}.
// Negative values certify nonclassical photon statistics. 1 <= l <= 8.
WitnessResult hoa(const MomentProvider& m, int l);

// Higher-order sub-Poissonian statistics D_h(l-1), a Stirling-weighted sum of
// the antibunching differences; reduces to D(1) at l = 2. 2 <= l <= 8.
WitnessResult hosps(const MomentProvider& m, int l);

// <(X - <X>)^n> assembled from normally ordered moments for the quadrature at
// `angle`; dual route to the operator evaluation in fock.hpp. Even n <= 10.
double quadrature_central_moment(const MomentProvider& m, int n, double angle);

// Hong-Mandel higher-order squeezing:
//   S(n) = [<(dX)^n> - (1/2)_{n/2}] / (1/2)_{n/2},  even n, X along `angle`.
WitnessResult hong_mandel(const MomentProvider& m, int n, double angle = 0.0);

// Fourth-moment squeezing pair (A1, A2) for Y1 = (a^2 + a†^2)/2 and
// Y2 = -i(a^2 - a†^2)/2, with the commutator bound folded in.
std::pair<WitnessResult, WitnessResult> hillery2(const MomentProvider& m);

// Direct operator-route evaluation of (dY_i)^2 - |<[Y1, Y2]>|/2 for the
// power-l pair Y1 = (a^l + a†^l)/2, Y2 = -i(a^l - a†^l)/2 on an explicit
// unit vector. Matches hillery2 at l = 2. 1 <= l <= 4.
std::pair<WitnessResult, WitnessResult> hillery_general(const FockVector& s, int l);

}  // namespace ncwit
