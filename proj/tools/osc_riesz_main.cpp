#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oscriesz/report.hpp"

int main(int argc, char** argv) {
  using namespace oscriesz;

  CLI::App app{
      "osc_riesz - verification suites for the Laguerre-type spectral "
      "calculus and the harmonic-oscillator Riesz transform"};
  app.get_formatter()->column_width(26);

  RunConfig cfg;
  bool list = false;
  app.add_flag("--list", list, "list the available suites and exit");
  app.add_option("--suite", cfg.suite, "suite to run (see --list)");
  app.add_option("--alpha", cfg.alpha, "base Laguerre order (>= -1/2)")
      ->capture_default_str();
  app.add_option("--a", cfg.a, "twist exponent a (>= 1)")->capture_default_str();
  app.add_option("--jmax", cfg.jmax, "largest twist index j")
      ->capture_default_str();
  app.add_option("--p", cfg.p, "Lebesgue exponent")->capture_default_str();
  app.add_option("--delta", cfg.delta, "power-weight exponent")
      ->capture_default_str();
  app.add_option("--n", cfg.n, "ambient dimension (2 or 3)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all randomized inputs")
      ->capture_default_str();
  app.add_option("--grid-scale", cfg.grid_scale,
                 "density multiplier for sweep grids")
      ->capture_default_str();
  app.add_option("--tol-ratio", cfg.tol_ratio,
                 "max/min tolerance for uniformity sweeps")
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "report path (stdout when empty)");
  app.add_option("--format", cfg.format, "json or csv")->capture_default_str();
  app.add_option("--threads", cfg.threads,
                 "worker threads (0 = hardware default, 1 = serial)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    std::cout << list_suites();
    return 0;
  }
  if (cfg.suite.empty()) {
    std::cerr << "error: --suite is required (or use --list)\n";
    return 2;
  }
  if (cfg.threads == 0) {
    if (const char* env = std::getenv("OSC_RIESZ_THREADS"))
      cfg.threads = std::atoi(env);
  }
  if (cfg.format != "json" && cfg.format != "csv") {
    std::cerr << "error: --format must be json or csv\n";
    return 2;
  }

  Report rep;
  try {
    rep = run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error while running suite: " << e.what() << '\n';
    return 1;
  }

  const std::string body =
      (cfg.format == "csv") ? rep.to_csv_string() : rep.to_json_string();
  if (cfg.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out_path << '\n';
      return 1;
    }
    out << body;
  }

  std::cerr << "suite " << cfg.suite << ": " << (rep.pass ? "PASS" : "FAIL")
            << "  cases=" << rep.cases.size()
            << "  worst_ratio=" << rep.worst_ratio
            << "  runtime_ms=" << rep.runtime_ms << '\n';
  return rep.pass ? 0 : 1;
}
