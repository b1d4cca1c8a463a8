#include "ncwit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <iostream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ncwit/errors.hpp"
#include "ncwit/moments.hpp"
#include "ncwit/witnesses.hpp"

namespace ncwit {

namespace {

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool known_witness(const std::string& w) {
  return w == "hoa" || w == "hosps" || w == "hong-mandel" || w == "hillery2";
}

int grid_size(double start, double stop, double step) {
  return static_cast<int>(std::floor((stop - start) / step + 1.0 + 1e-9));
}

int rows_per_point(const SweepSpec& spec) {
  return spec.witness == "hillery2" ? 2 : static_cast<int>(spec.orders.size());
}

void eval_point(const SweepSpec& spec, double x, SweepRow* rows, std::atomic<bool>& warned) {
  const int n_rows = rows_per_point(spec);
  for (int i = 0; i < n_rows; ++i) {
    rows[i].param_value = x;
    rows[i].valid = false;
    rows[i].value = std::numeric_limits<double>::quiet_NaN();
    rows[i].nonclassical = false;
  }
  if (spec.witness == "hillery2") {
    rows[0].witness = witness_name(WitnessKind::Hillery1);
    rows[0].order = 2;
    rows[1].witness = witness_name(WitnessKind::Hillery2);
    rows[1].order = 2;
  } else {
    for (int i = 0; i < n_rows; ++i) {
      rows[i].witness = spec.witness == "hoa"     ? witness_name(WitnessKind::Hoa)
                        : spec.witness == "hosps" ? witness_name(WitnessKind::Hosps)
                                                  : witness_name(WitnessKind::HongMandel);
      rows[i].order = spec.orders[static_cast<std::size_t>(i)];
    }
  }

  try {
    CatParams cat = spec.cat;
    SqueezedParams squeezed = spec.squeezed;
    NonGaussianOp op = spec.op;
    if (spec.param == "alpha") cat.alpha = x;
    else if (spec.param == "phi") cat.phi = x;
    else if (spec.param == "xi") squeezed.xi = x;
    else if (spec.param == "theta") squeezed.theta = x;
    else op.added = static_cast<int>(std::lround(x));

    MomentProviderPtr provider;
    if (op.trivial() && spec.nmax == 0) {
      provider = spec.family == StateFamily::Cat ? cat_moments(cat) : squeezed_moments(squeezed);
    } else {
      FockVector s = spec.family == StateFamily::Cat ? cat_fock(cat, spec.tail_tol)
                                                     : squeezed_vacuum_fock(squeezed, spec.tail_tol);
      if (spec.nmax > 0 && spec.nmax < s.dim()) {
        if (!warned.exchange(true)) {
          std::cerr << "warning: nmax=" << spec.nmax << " is below the automatic dimension "
                    << s.dim() << "; tail mass is being discarded\n";
        }
        s = normalize(s.truncated(spec.nmax)).state;
      } else if (spec.nmax > s.dim()) {
        s = s.padded(spec.nmax);
      }
      if (!op.trivial()) s = apply_non_gaussian(s, op);
      provider = fock_moments(s);
    }

    if (spec.witness == "hillery2") {
      const auto [a1, a2] = hillery2(*provider);
      rows[0].value = a1.value;
      rows[0].nonclassical = a1.nonclassical;
      rows[1].value = a2.value;
      rows[1].nonclassical = a2.nonclassical;
    } else {
      for (int i = 0; i < n_rows; ++i) {
        const int order = rows[i].order;
        const WitnessResult r = spec.witness == "hoa"     ? hoa(*provider, order)
                                : spec.witness == "hosps" ? hosps(*provider, order)
                                                          : hong_mandel(*provider, order, spec.angle);
        rows[i].value = r.value;
        rows[i].nonclassical = r.nonclassical;
      }
    }
    for (int i = 0; i < n_rows; ++i) rows[i].valid = true;
  } catch (const std::exception&) {
    // leave the NaN rows in place; the caller counts them
  }
}

}  // namespace

void SweepSpec::validate() const {
  if (!known_witness(witness)) {
    throw std::invalid_argument("unknown witness '" + witness +
                                "' (expected hoa, hosps, hong-mandel or hillery2)");
  }
  const bool cat_param = param == "alpha" || param == "phi";
  const bool squeezed_param = param == "xi" || param == "theta";
  if (!cat_param && !squeezed_param && param != "m") {
    throw std::invalid_argument("unknown sweep parameter '" + param +
                                "' (expected alpha, phi, xi, theta or m)");
  }
  if (family == StateFamily::Cat && squeezed_param) {
    throw std::invalid_argument("parameter '" + param + "' does not apply to the cat family");
  }
  if (family == StateFamily::Squeezed && cat_param) {
    throw std::invalid_argument("parameter '" + param + "' does not apply to the squeezed family");
  }
  if (!(step > 0.0)) throw std::invalid_argument("sweep step must be positive");
  if (!std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw std::invalid_argument("sweep range is empty or not finite");
  }
  if (param == "m" && (start < -1e-9 || step < 1.0 - 1e-9)) {
    throw std::invalid_argument("photon-number sweeps need start >= 0 and integer step >= 1");
  }
  if (witness == "hillery2") {
    // fixed second-order pair; orders list is ignored
  } else if (orders.empty()) {
    throw std::invalid_argument("at least one witness order is required");
  } else {
    for (int l : orders) {
      if (witness == "hoa" && (l < 1 || l > 8)) {
        throw std::invalid_argument("hoa orders must satisfy 1 <= l <= 8");
      }
      if (witness == "hosps" && (l < 2 || l > 8)) {
        throw std::invalid_argument("hosps orders must satisfy 2 <= l <= 8");
      }
      if (witness == "hong-mandel" && (l < 2 || l > 10 || l % 2 != 0)) {
        throw std::invalid_argument("hong-mandel orders must be even, 2 <= n <= 10");
      }
    }
  }
  if (nmax < 0 || nmax > kMaxFockDim) throw std::invalid_argument("nmax out of range");
  if (family == StateFamily::Cat) {
    CatParams fixed = cat;
    if (param == "alpha") fixed.alpha = 1.0;
    if (param == "phi") fixed.phi = 0.0;
    fixed.validate();
  } else {
    SqueezedParams fixed = squeezed;
    if (param == "xi") fixed.xi = 0.5;
    if (param == "theta") fixed.theta = 0.0;
    fixed.validate();
  }
  op.validate();
}

SweepOutput run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();

  const int n_points = grid_size(spec.start, spec.stop, spec.step);
  const int block = rows_per_point(spec);

  SweepOutput out;
  out.param_name = spec.param;
  out.comments.push_back(std::string("tool: ncwit ") + kVersion);
  for (const auto& c : spec.comments) out.comments.push_back(c);
  {
    std::string line = "state: ";
    if (spec.family == StateFamily::Cat) {
      line += "cat";
      if (spec.param != "alpha") line += " alpha=" + format_number(spec.cat.alpha);
      if (spec.param != "phi") line += " phi=" + format_number(spec.cat.phi);
    } else {
      line += "squeezed";
      if (spec.param != "xi") line += " xi=" + format_number(spec.squeezed.xi);
      if (spec.param != "theta") line += " theta=" + format_number(spec.squeezed.theta);
    }
    if (spec.param == "m") {
      line += " add=m(swept) sub=" + std::to_string(spec.op.subtracted);
    } else if (!spec.op.trivial()) {
      line += " add=" + std::to_string(spec.op.added) +
              " sub=" + std::to_string(spec.op.subtracted);
    }
    out.comments.push_back(line);
  }
  {
    std::string line = "witness: " + spec.witness;
    if (spec.witness == "hillery2") {
      line += " (A1 and A2, order 2)";
    } else {
      line += " orders=";
      for (std::size_t i = 0; i < spec.orders.size(); ++i) {
        if (i) line += ",";
        line += std::to_string(spec.orders[i]);
      }
    }
    if (spec.witness == "hong-mandel") line += " angle=" + format_number(spec.angle);
    out.comments.push_back(line);
  }
  out.comments.push_back("grid: " + spec.param + "=" + format_number(spec.start) + ":" +
                         format_number(spec.stop) + ":" + format_number(spec.step) +
                         " points=" + std::to_string(n_points));
  out.comments.push_back(
      spec.nmax > 0 ? "truncation: nmax=" + std::to_string(spec.nmax)
                    : "truncation: auto tail_tol=" + format_number(spec.tail_tol));

  out.rows.resize(static_cast<std::size_t>(n_points) * block);

  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 4;
  }
  threads = std::clamp(threads, 1, n_points);

  std::atomic<bool> warned{false};
  auto worker = [&](int first) {
    for (int p = first; p < n_points; p += threads) {
      const double x = spec.start + p * spec.step;
      eval_point(spec, x, &out.rows[static_cast<std::size_t>(p) * block], warned);
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  for (int p = 0; p < n_points; ++p) {
    if (!out.rows[static_cast<std::size_t>(p) * block].valid) ++out.failed_points;
  }
  return out;
}

void write_csv(std::ostream& out, const SweepOutput& output) {
  for (const auto& c : output.comments) out << "# " << c << "\n";
  out << "param_name,param_value,witness,order,value,nonclassical\n";
  for (const auto& r : output.rows) {
    out << output.param_name << ',' << format_number(r.param_value) << ',' << r.witness << ','
        << r.order << ',' << format_number(r.value) << ',' << (r.nonclassical ? "true" : "false")
        << '\n';
  }
}

namespace {

const double kPi = std::acos(-1.0);

SweepSpec cat_alpha_sweep(double phi) {
  SweepSpec s;
  s.family = StateFamily::Cat;
  s.cat.phi = phi;
  s.param = "alpha";
  s.start = 0.05;
  s.stop = 2.0;
  s.step = 0.05;
  return s;
}

SweepSpec cat_phi_sweep(double alpha) {
  SweepSpec s;
  s.family = StateFamily::Cat;
  s.cat.alpha = alpha;
  s.param = "phi";
  s.start = 0.0;
  s.stop = 6.28;
  s.step = 0.04;
  return s;
}

SweepSpec squeezed_xi_sweep() {
  SweepSpec s;
  s.family = StateFamily::Squeezed;
  s.squeezed.theta = 0.0;
  s.param = "xi";
  s.start = 0.02;
  s.stop = 0.9;
  s.step = 0.02;
  return s;
}

SweepSpec photon_number_sweep(double alpha, int subtracted) {
  SweepSpec s;
  s.family = StateFamily::Cat;
  s.cat.alpha = alpha;
  s.cat.phi = 0.0;
  s.op.subtracted = subtracted;
  s.param = "m";
  s.start = 0.0;
  s.stop = 6.0;
  s.step = 1.0;
  s.witness = "hillery2";
  return s;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig1f", "fig2a", "fig2b", "fig2c",
          "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b", "hm-squeezed"};
}

SweepSpec figure_preset(const std::string& name) {
  SweepSpec s;
  if (name == "fig1a") {
    s = cat_alpha_sweep(kPi);
    s.witness = "hoa";
    s.orders = {1, 2, 3};
    s.comments = {"preset fig1a: antibunching depth vs alpha for the odd cat state (phi=pi)"};
  } else if (name == "fig1b") {
    s = cat_phi_sweep(1.0);
    s.witness = "hoa";
    s.orders = {1, 2, 3};
    s.comments = {"preset fig1b: antibunching vs phi at alpha=1"};
  } else if (name == "fig1c") {
    s = cat_phi_sweep(1.5);
    s.witness = "hoa";
    s.orders = {1, 2, 3};
    s.comments = {"preset fig1c: antibunching vs phi at alpha=1.5"};
  } else if (name == "fig1d") {
    s = cat_alpha_sweep(kPi);
    s.witness = "hosps";
    s.orders = {2, 3, 4};
    s.comments = {"preset fig1d: sub-Poissonian witness vs alpha for the odd cat state (phi=pi)"};
  } else if (name == "fig1e") {
    s = cat_phi_sweep(1.0);
    s.witness = "hosps";
    s.orders = {2, 3, 4};
    s.comments = {"preset fig1e: sub-Poissonian witness vs phi at alpha=1"};
  } else if (name == "fig1f") {
    s = cat_phi_sweep(1.5);
    s.witness = "hosps";
    s.orders = {2, 3, 4};
    s.comments = {"preset fig1f: sub-Poissonian witness vs phi at alpha=1.5"};
  } else if (name == "fig2a") {
    s = squeezed_xi_sweep();
    s.witness = "hosps";
    s.orders = {2, 3, 4};
    s.comments = {"preset fig2a: sub-Poissonian witness vs xi for the squeezed family (theta=0)"};
  } else if (name == "fig2b") {
    s = squeezed_xi_sweep();
    s.witness = "hillery2";
    s.comments = {"preset fig2b: Hillery A1/A2 vs xi for the squeezed family (theta=0)"};
  } else if (name == "fig2c") {
    s = squeezed_xi_sweep();
    s.witness = "hillery2";
    s.op.added = 1;
    s.comments = {"preset fig2c: Hillery A1/A2 vs xi after single-photon addition (theta=0)"};
  } else if (name == "fig3a") {
    s = cat_alpha_sweep(0.0);
    s.witness = "hillery2";
    s.op.added = 1;
    s.comments = {"preset fig3a: Hillery A1/A2 vs alpha for the photon-added even cat (m=1)"};
  } else if (name == "fig3b") {
    s = cat_phi_sweep(1.0);
    s.witness = "hillery2";
    s.op.added = 1;
    s.comments = {"preset fig3b: Hillery A1/A2 vs phi at alpha=1 after single-photon addition"};
  } else if (name == "fig3c") {
    s = cat_phi_sweep(0.5);
    s.witness = "hillery2";
    s.op.added = 2;
    s.comments = {"preset fig3c: Hillery A1/A2 vs phi at alpha=0.5 after two-photon addition"};
  } else if (name == "fig3d") {
    s = cat_phi_sweep(0.5);
    s.witness = "hillery2";
    s.op.added = 2;
    s.op.subtracted = 1;
    s.comments = {
        "preset fig3d: Hillery A1/A2 vs phi at alpha=0.5, two photons added then one subtracted"};
  } else if (name == "fig4a") {
    s = photon_number_sweep(1.5, 0);
    s.comments = {"preset fig4a: Hillery A1/A2 vs number of added photons m (alpha=1.5, phi=0)"};
  } else if (name == "fig4b") {
    s = photon_number_sweep(1.5, 2);
    s.comments = {
        "preset fig4b: Hillery A1/A2 vs m with two photons subtracted after the additions"};
  } else if (name == "hm-squeezed") {
    s = squeezed_xi_sweep();
    s.witness = "hong-mandel";
    s.orders = {2, 4, 6};
    s.angle = kPi / 2.0;
    s.comments = {"preset hm-squeezed: Hong-Mandel witness vs xi for the squeezed family",
                  "quadrature angle pi/2 (the squeezed direction when theta=0)"};
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return s;
}

}  // namespace ncwit
