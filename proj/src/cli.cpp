#include "wasp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "wasp/coray.hpp"
#include "wasp/errors.hpp"
#include "wasp/io.hpp"
#include "wasp/verify.hpp"

namespace wasp::cli {

namespace {

using io::format_number;

struct Globals {
  double p = 2.0;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io::ParseError("cannot write " + path);
  return out;
}

Point point_arg(const std::vector<double>& coords, const char* what) {
  if (coords.empty()) throw InvalidArgument(std::string(what) + " needs at least one coordinate");
  return Point(coords);
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    open_output(path) << text << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal transport, rays, Busemann functions and co-rays in P_p(R^d)", "wasp"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--p", g.p, "Transport exponent, 1 < p <= 16")->capture_default_str();
  app.add_option("--tol", g.tol, "Stopping / matching tolerance (command-specific default)");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str();

  std::function<int()> action;

  // dist
  std::string mu_path;
  std::string nu_path;
  bool show_coupling = false;
  auto* dist = app.add_subcommand("dist", "Print W_p between two measure files");
  dist->add_option("mu", mu_path)->required();
  dist->add_option("nu", nu_path)->required();
  dist->add_flag("--coupling", show_coupling, "Also print the optimal coupling entries");
  dist->callback([&] {
    action = [&] {
      const auto pi = solve_ot(io::read_measure(mu_path), io::read_measure(nu_path), g.p);
      out << format_number(pi.cost) << '\n';
      if (show_coupling) {
        for (const auto& e : pi.entries) out << e.left << ' ' << e.right << ' ' << format_number(e.mass) << '\n';
      }
      return kSuccess;
    };
  });

  // couple
  std::string out_path;
  auto* couple = app.add_subcommand("couple", "Write the optimal coupling as JSON");
  couple->add_option("mu", mu_path)->required();
  couple->add_option("nu", nu_path)->required();
  couple->add_option("-o,--out", out_path, "Output file (default stdout)");
  couple->callback([&] {
    action = [&] {
      emit(out_path, io::dump_coupling(solve_ot(io::read_measure(mu_path), io::read_measure(nu_path), g.p)), out);
      return kSuccess;
    };
  });

  // geodesic-section
  double section_time = 0.0;
  auto* geo = app.add_subcommand("geodesic-section", "Law at time t of the geodesic from mu to nu");
  geo->add_option("mu", mu_path)->required();
  geo->add_option("nu", nu_path)->required();
  geo->add_option("-t,--time", section_time, "Arc-length time, clamped to the geodesic length")->required();
  geo->add_option("-o,--out", out_path, "Output measure file (default stdout)");
  geo->callback([&] {
    action = [&] {
      const auto lift = lift_geodesic(solve_ot(io::read_measure(mu_path), io::read_measure(nu_path), g.p));
      emit(out_path, io::dump_measure(section(lift, section_time)), out);
      return kSuccess;
    };
  });

  // ray-new dirac | translation
  std::vector<double> origin;
  std::vector<double> velocity;
  std::string measure_path;
  auto* ray_new = app.add_subcommand("ray-new", "Create a ray file");
  ray_new->require_subcommand(1);
  auto* dirac = ray_new->add_subcommand("dirac", "Single ambient ray");
  dirac->add_option("--origin", origin)->required()->delimiter(',');
  dirac->add_option("--velocity", velocity)->required()->delimiter(',');
  dirac->add_option("-o,--out", out_path, "Output ray file (default stdout)");
  dirac->callback([&] {
    action = [&] {
      emit(out_path, io::dump_ray(make_dirac_ray(point_arg(origin, "origin"), point_arg(velocity, "velocity"), g.p)), out);
      return kSuccess;
    };
  });
  auto* translation = ray_new->add_subcommand("translation", "Every atom of a measure moving with one velocity");
  translation->add_option("--measure", measure_path)->required();
  translation->add_option("--velocity", velocity)->required()->delimiter(',');
  translation->add_option("-o,--out", out_path, "Output ray file (default stdout)");
  translation->callback([&] {
    action = [&] {
      emit(out_path,
           io::dump_ray(make_translation_ray(io::read_measure(measure_path), point_arg(velocity, "velocity"), g.p)),
           out);
      return kSuccess;
    };
  });

  // ray-validate
  std::string ray_path;
  std::vector<std::pair<double, double>> pairs;
  auto* validate = app.add_subcommand("ray-validate", "Check that a ray file induces optimal couplings");
  validate->add_option("ray", ray_path)->required();
  validate->add_option("--pair", pairs, "Extra time pair t1,t2 (repeatable)")->delimiter(',');
  validate->callback([&] {
    action = [&] {
      const auto report = validate_ray(io::read_ray(ray_path), pairs);
      out << "speed " << format_number(report.speed) << '\n';
      for (const auto& pr : report.pairs) {
        out << (pr.pass ? "PASS" : "FAIL") << " t1=" << format_number(pr.t1) << " t2=" << format_number(pr.t2)
            << " induced=" << format_number(pr.induced_cost) << " optimal=" << format_number(pr.optimal_cost)
            << " gap=" << format_number(pr.relative_gap) << '\n';
      }
      out << (report.pass ? "ray: valid" : "ray: invalid") << '\n';
      return report.pass ? kSuccess : kCheckFailed;
    };
  });

  // busemann
  BusemannOptions bopts;
  std::string csv_path;
  auto* busemann = app.add_subcommand("busemann", "Estimate the Busemann function of a unit-speed ray at nu");
  busemann->add_option("ray", ray_path)->required();
  busemann->add_option("nu", nu_path)->required();
  busemann->add_option("--t0", bopts.t0)->capture_default_str();
  busemann->add_option("--max-doublings", bopts.max_doublings)->capture_default_str();
  busemann->add_option("--csv", csv_path, "Write the (t, W_p(nu, mu_t) - t) schedule");
  busemann->callback([&] {
    action = [&] {
      if (g.tol) bopts.tol = *g.tol;
      const auto est = busemann_value(io::read_ray(ray_path), io::read_measure(nu_path), bopts);
      if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        csv << "t,value\n";
        for (const auto& s : est.schedule) csv << format_number(s.t) << ',' << format_number(s.value) << '\n';
      }
      out << "value " << format_number(est.value) << '\n'
          << "lower_bound " << format_number(est.lower_bound) << '\n'
          << "t_final " << format_number(est.t_final) << '\n'
          << "last_decrement " << format_number(est.last_decrement) << '\n'
          << "converged " << (est.converged ? "true" : "false") << '\n';
      return est.converged ? kSuccess : kNotConverged;
    };
  });

  // coray
  CorayOptions copts;
  int first_power = 1;
  int last_power = 16;
  std::vector<double> schedule;
  auto* coray = app.add_subcommand("coray", "Construct a co-ray from nu0 to a unit-speed ray");
  coray->add_option("ray", ray_path)->required();
  coray->add_option("nu0", nu_path)->required();
  coray->add_option("--first-power", first_power, "Schedule t_n = 2^n starts at this n")->capture_default_str();
  coray->add_option("--last-power", last_power, "Schedule t_n = 2^n ends at this n")->capture_default_str();
  coray->add_option("--schedule", schedule, "Explicit schedule (overrides the powers)")->delimiter(',');
  coray->add_option("--test-times", copts.test_times, "Times at which sections are compared")->delimiter(',');
  coray->add_option("-o,--out", out_path, "Output ray file for the co-ray");
  coray->add_option("--csv", csv_path, "Write per-step diagnostics");
  coray->callback([&] {
    action = [&] {
      if (g.tol) copts.tol = *g.tol;
      copts.threads = g.threads;
      if (!schedule.empty()) {
        copts.schedule = schedule;
      } else {
        if (first_power > last_power) throw InvalidArgument("--first-power must not exceed --last-power");
        copts.schedule.clear();
        for (int n = first_power; n <= last_power; ++n) copts.schedule.push_back(std::ldexp(1.0, n));
      }
      const auto result = construct_coray(io::read_ray(ray_path), io::read_measure(nu_path), copts);
      if (!out_path.empty()) io::write_ray(out_path, result.ray);
      if (!csv_path.empty()) {
        auto csv = open_output(csv_path);
        csv << "n,t,length,ratio_error,ratio_bound,diagnostic\n";
        for (std::size_t n = 0; n < result.steps.size(); ++n) {
          const auto& s = result.steps[n];
          csv << n << ',' << format_number(s.t) << ',' << format_number(s.length) << ','
              << format_number(s.ratio_error) << ',' << format_number(s.ratio_bound) << ','
              << (n == 0 ? std::string() : format_number(result.diagnostics[n - 1])) << '\n';
        }
      }
      out << "converged " << (result.converged ? "true" : "false") << '\n'
          << "last_diagnostic " << format_number(result.diagnostics.back()) << '\n'
          << "speed " << format_number(result.ray.speed) << '\n';
      if (out_path.empty()) out << io::dump_ray(result.ray) << '\n';
      return result.converged ? kSuccess : kNotConverged;
    };
  });

  // verify
  std::string suite = "all";
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites and write a pass/fail report");
  verify->add_option("--suite", suite, "ot | geodesic | ray | busemann | coray | all")->capture_default_str();
  verify->add_option("--report", report_path, "Report file (default stdout)");
  verify->callback([&] {
    action = [&] {
      const auto report = run_verify(suite, g.seed, g.threads);
      if (report_path.empty()) {
        out << report.text();
      } else {
        open_output(report_path) << report.text();
        out << (report.pass() ? "all checks passed" : "some checks failed") << '\n';
      }
      return report.pass() ? kSuccess : kCheckFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverError;
  }
}

}  // namespace wasp::cli
