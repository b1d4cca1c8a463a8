#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncwit/states.hpp"

namespace ncwit {

inline constexpr const char* kVersion = "0.1.0";

enum class StateFamily { Cat, Squeezed };

// One scan over a single parameter of a state family, evaluating one witness
// family at a set of orders for every grid point.
struct SweepSpec {
  StateFamily family = StateFamily::Cat;
  CatParams cat;
  SqueezedParams squeezed;
  NonGaussianOp op;

  std::string param = "alpha";   // alpha | phi | xi | theta | m
  double start = 0.1;
  double stop = 2.0;
  double step = 0.1;

  std::string witness = "hoa";   // hoa | hosps | hong-mandel | hillery2
  std::vector<int> orders = {1};
  double angle = 0.0;            // quadrature angle for hong-mandel

  double tail_tol = kDefaultTailTol;
  int nmax = 0;                  // 0 = automatic truncation
  std::vector<std::string> comments;

  void validate() const;
};

struct SweepRow {
  double param_value = 0.0;
  std::string witness;
  int order = 0;
  double value = 0.0;
  bool nonclassical = false;
  bool valid = true;
};

struct SweepOutput {
  std::string param_name;
  std::vector<std::string> comments;
  std::vector<SweepRow> rows;
  int failed_points = 0;
};

SweepOutput run_sweep(const SweepSpec& spec, int threads = 0);

void write_csv(std::ostream& out, const SweepOutput& output);

// Canned sweeps reproducing the standard survey figures.
std::vector<std::string> preset_names();
SweepSpec figure_preset(const std::string& name);

}  // namespace ncwit
