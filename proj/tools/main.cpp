#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncwit/errors.hpp"
#include "ncwit/fock.hpp"
#include "ncwit/moments.hpp"
#include "ncwit/states.hpp"
#include "ncwit/sweep.hpp"
#include "ncwit/witnesses.hpp"

namespace {

const double kPi = std::acos(-1.0);

std::string fmt12(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct PointOpts {
  std::string state = "cat";
  double alpha = 1.0;
  double phi = 0.0;
  double xi = 0.5;
  double theta = 0.0;
  int add = 0;
  int sub = 0;
  double tail_tol = ncwit::kDefaultTailTol;
  int nmax = 0;
};

void add_point_options(CLI::App* cmd, PointOpts& o) {
  cmd->add_option("--state", o.state, "state family")
      ->check(CLI::IsMember({"cat", "squeezed"}))
      ->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "cat amplitude (alpha >= 0)")->capture_default_str();
  cmd->add_option("--phi", o.phi, "cat relative phase in radians")->capture_default_str();
  cmd->add_option("--xi", o.xi, "squeezed family magnitude (0 <= xi < 1)")->capture_default_str();
  cmd->add_option("--theta", o.theta, "squeezed family phase in radians")->capture_default_str();
  cmd->add_option("--add", o.add, "photons to add before any subtraction")->capture_default_str();
  cmd->add_option("--sub", o.sub, "photons to subtract after the additions")
      ->capture_default_str();
  cmd->add_option("--tail-tol", o.tail_tol, "truncation tail mass budget")->capture_default_str();
  cmd->add_option("--nmax", o.nmax, "fixed truncation dimension (0 = automatic)")
      ->capture_default_str();
}

std::string describe_point(const PointOpts& o) {
  std::string line = "state: " + o.state;
  if (o.state == "cat") {
    line += " alpha=" + fmt12(o.alpha) + " phi=" + fmt12(o.phi);
  } else {
    line += " xi=" + fmt12(o.xi) + " theta=" + fmt12(o.theta);
  }
  if (o.add || o.sub) line += " add=" + std::to_string(o.add) + " sub=" + std::to_string(o.sub);
  if (o.nmax > 0) line += " nmax=" + std::to_string(o.nmax);
  return line;
}

ncwit::FockVector build_fock(const PointOpts& o) {
  ncwit::NonGaussianOp op;
  op.added = o.add;
  op.subtracted = o.sub;
  op.validate();
  ncwit::FockVector s = o.state == "cat"
                            ? ncwit::cat_fock({o.alpha, o.phi}, o.tail_tol)
                            : ncwit::squeezed_vacuum_fock({o.xi, o.theta}, o.tail_tol);
  if (o.nmax > 0 && o.nmax < s.dim()) {
    std::cerr << "warning: nmax=" << o.nmax << " is below the automatic dimension " << s.dim()
              << "; tail mass is being discarded\n";
    s = ncwit::normalize(s.truncated(o.nmax)).state;
  } else if (o.nmax > s.dim()) {
    s = s.padded(o.nmax);
  }
  if (!op.trivial()) s = ncwit::apply_non_gaussian(s, op);
  return s;
}

ncwit::MomentProviderPtr build_provider(const PointOpts& o) {
  if (o.add == 0 && o.sub == 0 && o.nmax == 0) {
    return o.state == "cat" ? ncwit::cat_moments({o.alpha, o.phi})
                            : ncwit::squeezed_moments({o.xi, o.theta});
  }
  return ncwit::fock_moments(build_fock(o));
}

void print_result(const ncwit::WitnessResult& r) {
  std::cout << ncwit::witness_name(r.kind) << " order=" << r.order << " value=" << fmt12(r.value)
            << " nonclassical=" << (r.nonclassical ? "true" : "false") << "\n";
}

int run_witness(const PointOpts& o, const std::string& witness, int order, double angle) {
  std::cout << describe_point(o) << "\n";
  if (witness == "hillery2") {
    const int l = order == 0 ? 2 : order;
    if (l == 2) {
      const auto [a1, a2] = ncwit::hillery2(*build_provider(o));
      print_result(a1);
      print_result(a2);
    } else {
      const auto [a1, a2] = ncwit::hillery_general(build_fock(o), l);
      print_result(a1);
      print_result(a2);
    }
    return 0;
  }
  const auto provider = build_provider(o);
  ncwit::WitnessResult r = witness == "hoa"
                               ? ncwit::hoa(*provider, order == 0 ? 1 : order)
                               : witness == "hosps"
                                     ? ncwit::hosps(*provider, order == 0 ? 2 : order)
                                     : ncwit::hong_mandel(*provider, order == 0 ? 2 : order, angle);
  print_result(r);
  return 0;
}

int emit_sweep(const ncwit::SweepSpec& spec, const std::string& out_path, int threads) {
  const ncwit::SweepOutput output = ncwit::run_sweep(spec, threads);
  if (output.failed_points > 0) {
    std::cerr << "warning: " << output.failed_points
              << " grid point(s) failed and were written as NaN rows\n";
  }
  if (out_path.empty() || out_path == "-") {
    ncwit::write_csv(std::cout, output);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return 1;
    }
    ncwit::write_csv(file, output);
    std::cout << "wrote " << out_path << " (" << output.rows.size() << " rows)\n";
  }
  return 0;
}

struct DeviationTable {
  int kmax = 0;
  std::vector<double> dev;   // (kmax+1)^2 max deviations
  double worst = 0.0;
  std::string worst_where;

  explicit DeviationTable(int k) : kmax(k), dev(static_cast<std::size_t>((k + 1) * (k + 1)), 0.0) {}

  void update(int k, int l, double d, const std::string& where) {
    double& slot = dev[static_cast<std::size_t>(k * (kmax + 1) + l)];
    slot = std::max(slot, d);
    if (d > worst) {
      worst = d;
      worst_where = "(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ") at " + where;
    }
  }

  void print(const std::string& title) const {
    std::cout << title << "\n";
    std::printf("  k\\l");
    for (int l = 0; l <= kmax; ++l) std::printf("  %8d", l);
    std::printf("\n");
    for (int k = 0; k <= kmax; ++k) {
      std::printf("  %3d", k);
      for (int l = 0; l <= kmax; ++l) {
        std::printf("  %8.2e", dev[static_cast<std::size_t>(k * (kmax + 1) + l)]);
      }
      std::printf("\n");
    }
    std::cout << "  worst: " << fmt12(worst) << " " << worst_where << "\n";
  }
};

int run_oracle_check(const std::string& family, int kmax_flag, double tol, double integral_tol,
                     double tail_tol, std::vector<double> alphas, std::vector<double> phis,
                     std::vector<double> xis, std::vector<double> thetas) {
  int failures = 0;

  if (family == "cat" || family == "all") {
    const int kmax = kmax_flag > 0 ? kmax_flag : 5;
    DeviationTable table(kmax);
    for (double alpha : alphas) {
      for (double phi : phis) {
        const ncwit::CatParams p{alpha, phi};
        const auto analytic = ncwit::cat_moments(p);
        ncwit::FockVector s = ncwit::cat_fock(p, tail_tol);
        if (s.dim() <= 2 * kmax) s = s.padded(2 * kmax + 1);
        const std::string where = "alpha=" + fmt12(alpha) + ", phi=" + fmt12(phi);
        for (int k = 0; k <= kmax; ++k) {
          for (int l = 0; l <= kmax; ++l) {
            const double d = std::abs(analytic->moment(k, l) - ncwit::moment(s, k, l));
            table.update(k, l, d, where);
          }
        }
      }
    }
    table.print("cat family: analytic moments vs Fock oracle, " +
                std::to_string(alphas.size() * phis.size()) + " grid points");
    if (table.worst >= tol) {
      std::cout << "  FAIL: deviation " << fmt12(table.worst) << " exceeds tol " << fmt12(tol)
                << "\n";
      ++failures;
    } else {
      std::cout << "  OK (tol " << fmt12(tol) << ")\n";
    }
  }

  if (family == "squeezed" || family == "all") {
    const int kmax = kmax_flag > 0 ? kmax_flag : 4;
    DeviationTable table(kmax);
    for (double xi : xis) {
      for (double theta : thetas) {
        const ncwit::SqueezedParams p{xi, theta};
        const auto analytic = ncwit::squeezed_moments(p);
        ncwit::FockVector s = ncwit::squeezed_vacuum_fock(p, tail_tol);
        if (s.dim() <= 2 * kmax) s = s.padded(2 * kmax + 1);
        const std::string where = "xi=" + fmt12(xi) + ", theta=" + fmt12(theta);
        for (int k = 0; k <= kmax; ++k) {
          for (int l = 0; l <= kmax; ++l) {
            const double d = std::abs(analytic->moment(k, l) - ncwit::moment(s, k, l));
            table.update(k, l, d, where);
          }
        }
      }
    }
    table.print("squeezed family: analytic moments vs Fock oracle, " +
                std::to_string(xis.size() * thetas.size()) + " grid points");
    if (table.worst >= tol) {
      std::cout << "  FAIL: deviation " << fmt12(table.worst) << " exceeds tol " << fmt12(tol)
                << "\n";
      ++failures;
    } else {
      std::cout << "  OK (tol " << fmt12(tol) << ")\n";
    }

    const int kq = std::min(3, kmax);
    DeviationTable qtable(kq);
    for (double xi : xis) {
      const ncwit::SqueezedParams p{xi, 0.0};
      const auto analytic = ncwit::squeezed_moments(p);
      const std::string where = "xi=" + fmt12(xi) + ", theta=0";
      for (int k = 0; k <= kq; ++k) {
        for (int l = 0; l <= kq; ++l) {
          const double d =
              std::abs(analytic->moment(k, l) - ncwit::squeezed_moment_integral(p, k, l));
          qtable.update(k, l, d, where);
        }
      }
    }
    qtable.print("squeezed family: overlap-kernel quadrature vs analytic moments (theta=0)");
    if (qtable.worst >= integral_tol) {
      std::cout << "  FAIL: deviation " << fmt12(qtable.worst) << " exceeds tol "
                << fmt12(integral_tol) << "\n";
      ++failures;
    } else {
      std::cout << "  OK (tol " << fmt12(integral_tol) << ")\n";
    }
  }

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher-order nonclassicality witnesses for superpositions of coherent states"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("ncwit ") + ncwit::kVersion);

  // witness
  PointOpts wopts;
  std::string wwitness = "hoa";
  int worder = 0;
  double wangle = 0.0;
  CLI::App* witness_cmd =
      app.add_subcommand("witness", "evaluate one witness at a single parameter point");
  add_point_options(witness_cmd, wopts);
  witness_cmd->add_option("--witness", wwitness, "witness kind")
      ->check(CLI::IsMember({"hoa", "hosps", "hong-mandel", "hillery2"}))
      ->capture_default_str();
  witness_cmd->add_option("--order", worder,
                          "witness order (default: lowest; hillery2 accepts 1..4 and uses the "
                          "operator route when not 2)");
  witness_cmd->add_option("--angle", wangle, "quadrature angle for hong-mandel")
      ->capture_default_str();

  // sweep
  PointOpts sopts;
  std::string sparam = "alpha";
  std::string srange = "0.1:2:0.1";
  std::string switness = "hoa";
  std::vector<int> sorders = {1};
  double sangle = 0.0;
  std::string sout = "-";
  int sthreads = 0;
  std::vector<std::string> scomments;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan one parameter and emit CSV");
  add_point_options(sweep_cmd, sopts);
  sweep_cmd->add_option("--param", sparam, "swept parameter: alpha, phi, xi, theta or m")
      ->capture_default_str();
  sweep_cmd->add_option("--range", srange, "grid as start:stop:step")->capture_default_str();
  sweep_cmd->add_option("--witness", switness, "witness kind")
      ->check(CLI::IsMember({"hoa", "hosps", "hong-mandel", "hillery2"}))
      ->capture_default_str();
  sweep_cmd->add_option("--orders", sorders, "witness orders (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--angle", sangle, "quadrature angle for hong-mandel")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sout, "output file ('-' = stdout)")->capture_default_str();
  sweep_cmd->add_option("--threads", sthreads, "worker threads (0 = hardware)")
      ->capture_default_str();
  sweep_cmd->add_option("--comment", scomments, "extra CSV comment line (repeatable)");

  // oracle-check
  std::string ofamily = "all";
  int okmax = 0;
  double otol = 1e-9;
  double ointegral_tol = 1e-6;
  double otail = ncwit::kDefaultTailTol;
  std::vector<double> oalphas = {0.3, 0.7, 1.2, 1.8};
  std::vector<double> ophis = {0.0, 1.0, kPi / 2.0, kPi};
  std::vector<double> oxis = {0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> othetas = {0.0, kPi / 3.0};
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle-check", "compare analytic moments against the Fock oracle");
  oracle_cmd->add_option("--family", ofamily, "which family to check")
      ->check(CLI::IsMember({"cat", "squeezed", "all"}))
      ->capture_default_str();
  oracle_cmd->add_option("--kmax", okmax, "max moment order (0 = family default: cat 5, squeezed 4)")
      ->check(CLI::Range(0, 8));
  oracle_cmd->add_option("--tol", otol, "max allowed |analytic - fock|")->capture_default_str();
  oracle_cmd->add_option("--integral-tol", ointegral_tol, "tolerance for the quadrature cross-check")
      ->capture_default_str();
  oracle_cmd->add_option("--tail-tol", otail, "truncation tail mass budget")->capture_default_str();
  oracle_cmd->add_option("--alphas", oalphas, "cat alpha grid")->delimiter(',');
  oracle_cmd->add_option("--phis", ophis, "cat phi grid")->delimiter(',');
  oracle_cmd->add_option("--xis", oxis, "squeezed xi grid")->delimiter(',');
  oracle_cmd->add_option("--thetas", othetas, "squeezed theta grid")->delimiter(',');

  // figdata
  std::string fpreset;
  std::string fout;
  int fthreads = 0;
  bool flist = false;
  CLI::App* fig_cmd = app.add_subcommand("figdata", "emit CSV for a canned survey sweep");
  fig_cmd->add_option("preset", fpreset, "preset name (see --list)");
  fig_cmd->add_flag("--list", flist, "list available presets");
  fig_cmd->add_option("--out", fout, "output file (default <preset>.csv, '-' = stdout)");
  fig_cmd->add_option("--threads", fthreads, "worker threads (0 = hardware)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (witness_cmd->parsed()) return run_witness(wopts, wwitness, worder, wangle);

    if (sweep_cmd->parsed()) {
      ncwit::SweepSpec spec;
      spec.family = sopts.state == "cat" ? ncwit::StateFamily::Cat : ncwit::StateFamily::Squeezed;
      spec.cat = {sopts.alpha, sopts.phi};
      spec.squeezed = {sopts.xi, sopts.theta};
      spec.op.added = sopts.add;
      spec.op.subtracted = sopts.sub;
      spec.param = sparam;
      if (std::sscanf(srange.c_str(), "%lf:%lf:%lf", &spec.start, &spec.stop, &spec.step) != 3) {
        throw std::invalid_argument("range must be start:stop:step; got '" + srange + "'");
      }
      spec.witness = switness;
      spec.orders = sorders;
      spec.angle = sangle;
      spec.tail_tol = sopts.tail_tol;
      spec.nmax = sopts.nmax;
      spec.comments = scomments;
      const ncwit::SweepOutput output = ncwit::run_sweep(spec, sthreads);
      if (output.failed_points > 0) {
        std::cerr << "warning: " << output.failed_points
                  << " grid point(s) failed and were written as NaN rows\n";
      }
      if (sout.empty() || sout == "-") {
        ncwit::write_csv(std::cout, output);
      } else {
        std::ofstream file(sout, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot open '" << sout << "' for writing\n";
          return 1;
        }
        ncwit::write_csv(file, output);
        std::cout << "wrote " << sout << " (" << output.rows.size() << " rows)\n";
      }
      const int block = spec.witness == "hillery2" ? 2 : static_cast<int>(spec.orders.size());
      const int n_points = static_cast<int>(output.rows.size()) / std::max(1, block);
      return (n_points > 0 && output.failed_points == n_points) ? 1 : 0;
    }

    if (oracle_cmd->parsed()) {
      return run_oracle_check(ofamily, okmax, otol, ointegral_tol, otail, oalphas, ophis, oxis,
                              othetas);
    }

    if (fig_cmd->parsed()) {
      if (flist) {
        for (const auto& name : ncwit::preset_names()) std::cout << name << "\n";
        return 0;
      }
      if (fpreset.empty()) {
        std::cerr << "error: a preset name is required (try --list)\n";
        return 2;
      }
      const ncwit::SweepSpec spec = ncwit::figure_preset(fpreset);
      const std::string path = fout.empty() ? fpreset + ".csv" : fout;
      return emit_sweep(spec, path, fthreads);
    }

    std::cout << app.help();
    return 0;
  } catch (const ncwit::AnnihilatedStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
