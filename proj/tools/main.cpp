#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bandlimit/numeric.hpp"
#include "bandlimit/parallel.hpp"
#include "bandlimit/run.hpp"

namespace {

struct Output {
  std::string format = "json";
  std::string path;
};

int emit(const bandlimit::Json& rec, const Output& out) {
  const std::string text =
      out.format == "csv" ? bandlimit::format_csv(rec) : bandlimit::format_json(rec);
  if (out.path.empty() || out.path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out.path << " for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  using namespace bandlimit;
  CLI::App app{"Sharp constants and extremal functions for band-limited extremal problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(BANDLIMIT_VERSION));

  RunConfig cfg;
  Output out;
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores; BANDLIMIT_THREADS overrides)");
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--out", out.path, "Write the record here instead of stdout");
  app.add_option("--tol", cfg.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Add wall_time_ms to the record");

  auto* poly = app.add_subcommand("monotone-poly", "Polynomial-basis bound A_{1,d}");
  poly->add_option("--d", cfg.d, "Polynomial degree (<= 40)");
  poly->add_option("--path", cfg.path, "D-matrix path")->check(CLI::IsMember({"exact", "quadrature"}));

  auto* l2 = app.add_subcommand("monotone-l2", "L^2 orthonormal-family bound 1/lambda_d");
  l2->add_option("--d", cfg.d, "Number of modes");
  l2->add_flag("--allow-large", cfg.allow_large, "Allow d up to 1000");

  auto* lid = app.add_subcommand("lid", "Bessel lid ratio for one alpha");
  lid->add_option("--alpha", cfg.alpha, "Bessel order alpha > 0");

  auto* lopt = app.add_subcommand("lid-optimize", "Minimize the lid ratio over alpha");
  lopt->add_option("--lo", cfg.lo);
  lopt->add_option("--hi", cfg.hi);
  lopt->add_option("--alpha-tol", cfg.alpha_tol, "Width of the final alpha bracket");

  auto* sharp = app.add_subcommand("sharp-constant", "C(P) = (int_0^1 dt / P(t^2))^-1");
  sharp->add_option("--poly", cfg.poly, "Coefficients a_0,a_1,... of P")->required();

  auto* ineq = app.add_subcommand("verify-inequality", "Random-profile check of the weighted inequality");
  ineq->add_option("--poly", cfg.poly, "Coefficients a_0,a_1,... of P")->required();
  ineq->add_option("--draws", cfg.draws);
  ineq->add_option("--seed", cfg.seed);

  auto* zeros = app.add_subcommand("zeros", "Positive zeros of an extremizer candidate");
  zeros->add_option("--pipeline", cfg.pipeline)->check(CLI::IsMember({"h0", "poly", "l2"}));
  zeros->add_option("--d", cfg.d);
  zeros->add_option("--count", cfg.count);
  zeros->add_flag("--allow-large", cfg.allow_large, "Allow d up to 1000");

  app.add_subcommand("verify-f0", "Cross-check h0, f0 and the representation identity");

  auto* tables = app.add_subcommand("tables", "Write table and plot CSVs");
  tables->add_option("--out-dir", cfg.out_dir);
  tables->add_flag("--allow-large", cfg.allow_large, "Include the d = 400, 500, 1000 rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.out_format = out.format;

  if (const char* env = std::getenv("BANDLIMIT_THREADS")) {
    try {
      threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "BANDLIMIT_THREADS must be a non-negative integer\n";
      return 2;
    }
  }
  set_thread_count(threads);

  try {
    return emit(run(cfg), out);
  } catch (const DomainError& e) {
    emit(error_record(cfg, "config", e.what()), out);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    emit(error_record(cfg, "numerical", e.what()), out);
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    emit(error_record(cfg, "internal", e.what()), out);
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
