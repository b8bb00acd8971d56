#include "bandlimit/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "bandlimit/lids.hpp"
#include "bandlimit/monotone_l2.hpp"
#include "bandlimit/monotone_poly.hpp"
#include "bandlimit/numeric.hpp"
#include "bandlimit/represent.hpp"
#include "bandlimit/sharp_ineq.hpp"
#include "bandlimit/specfun.hpp"

#ifndef BANDLIMIT_VERSION
#define BANDLIMIT_VERSION "dev"
#endif

namespace bandlimit {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json params_of(const RunConfig& c) {
  Json p = Json::object();
  const std::string& cmd = c.command;
  if (cmd == "monotone-poly") {
    p["d"] = c.d.value_or(2);
    p["path"] = c.path;
  } else if (cmd == "monotone-l2") {
    p["d"] = c.d.value_or(10);
    p["allow_large"] = c.allow_large;
  } else if (cmd == "lid") {
    p["alpha"] = c.alpha.value_or(0.5);
  } else if (cmd == "lid-optimize") {
    p["lo"] = c.lo;
    p["hi"] = c.hi;
    p["alpha_tol"] = c.alpha_tol;
  } else if (cmd == "sharp-constant") {
    p["poly"] = c.poly;
  } else if (cmd == "verify-inequality") {
    p["poly"] = c.poly;
    p["draws"] = c.draws;
    p["seed"] = c.seed;
  } else if (cmd == "zeros") {
    p["pipeline"] = c.pipeline;
    p["d"] = c.d.value_or(c.pipeline == "l2" ? 1000 : 2);
    p["count"] = c.count;
    p["allow_large"] = c.allow_large;
  } else if (cmd == "tables") {
    p["out_dir"] = c.out_dir;
    p["allow_large"] = c.allow_large;
  }
  p["tol"] = c.tol;
  return p;
}

Json quad_diag(const QuadResult& r) {
  return Json{{"err_est", r.err_est},
              {"tail_bound", r.tail_bound},
              {"tail_extrapolated", r.tail_extrapolated},
              {"n_evals", r.n_evals}};
}

int l2_cap(const RunConfig& c) { return c.allow_large ? l2_hard_cap : l2_desk_cap; }

void check_l2_d(const RunConfig& c, int d) {
  if (d < 1) throw DomainError("--d must be >= 1");
  if (d > l2_hard_cap) throw DomainError("--d above the hard cap of 1000");
  if (d > l2_cap(c))
    throw DomainError("--d " + std::to_string(d) + " is above the desk-scale cap of " +
                      std::to_string(l2_desk_cap) + "; pass --allow-large");
}

Json run_monotone_poly(const RunConfig& c, Json& diag) {
  const int d = c.d.value_or(2);
  if (d < 0 || d > max_poly_degree) throw DomainError("--d must be in [0, 40]");
  DPath path;
  if (c.path == "exact")
    path = DPath::exact;
  else if (c.path == "quadrature")
    path = DPath::quadrature;
  else
    throw DomainError("--path must be exact or quadrature");
  const auto s = solve_poly(d, c.tol, path);
  diag["max_err_est"] = s.max_err_est;
  diag["n_evals"] = s.n_evals;
  diag["rayleigh_minus_bound"] = s.rayleigh - s.bound;
  Json r;
  r["d"] = d;
  r["bound"] = s.bound;
  r["coeffs"] = s.coeffs;
  if (d == 2) r["certificate"] = certify_d2_exact().str();
  return r;
}

Json run_monotone_l2(const RunConfig& c, Json& diag) {
  const int d = c.d.value_or(10);
  check_l2_d(c, d);
  const auto s = solve_l2(d, c.tol);
  diag["jacobi_sweeps"] = s.sweeps;
  diag["rayleigh_minus_lambda"] = s.rayleigh - s.lambda;
  diag["long_running"] = d > l2_desk_cap;
  Json r;
  r["d"] = d;
  r["lambda"] = s.lambda;
  r["bound"] = s.bound;
  r["coeffs"] = s.coeffs;
  return r;
}

Json run_lid(const RunConfig& c, Json& diag) {
  const double alpha = c.alpha.value_or(0.5);
  if (!(alpha > 0.0)) throw DomainError("--alpha must be positive");
  const auto r = bessel_lid_ratio(alpha, c.tol);
  diag["integral"] = quad_diag(r.integral);
  Json out;
  out["alpha"] = alpha;
  out["ratio"] = r.value;
  out["ratio_closed_form"] = bessel_lid_ratio_closed(alpha);
  out["peak"] = r.peak;
  out["integral"] = r.integral.value;
  return out;
}

Json run_lid_optimize(const RunConfig& c, Json& diag) {
  if (!(c.lo > 0.0) || !(c.hi >= c.lo)) throw DomainError("need 0 < --lo <= --hi");
  const auto m = minimize_alpha(c.lo, c.hi, c.alpha_tol, c.tol);
  diag["evaluations"] = m.evaluations;
  diag["unimodal_scan"] = m.unimodal;
  Json out;
  out["alpha_star"] = m.alpha;
  out["ratio_star"] = m.ratio;
  out["at_boundary"] = m.at_boundary;
  return out;
}

Json run_sharp_constant(const RunConfig& c, Json& diag) {
  const WeightPoly P(parse_number_list(c.poly));
  diag["certified_min_P"] = P.min_on_unit();
  Json out;
  out["poly"] = P.coeffs();
  out["constant"] = sharp_constant(P, c.tol);
  return out;
}

Json run_verify_inequality(const RunConfig& c, Json& diag) {
  if (c.draws < 1) throw DomainError("--draws must be >= 1");
  const WeightPoly P(parse_number_list(c.poly));
  const double C = sharp_constant(P, c.tol);
  double min_margin = std::numeric_limits<double>::infinity();
  int violations = 0;
  for (int k = 0; k < c.draws; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    const auto g = random_profile((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
    const double margin = functional(P, g, 0.01 * c.tol) - C;
    min_margin = std::min(min_margin, margin);
    if (margin < -1e-9) ++violations;
  }
  const auto ext = extremal_profile(P, c.tol);
  diag["certified_min_P"] = P.min_on_unit();
  Json out;
  out["constant"] = C;
  out["draws"] = c.draws;
  out["min_margin"] = min_margin;
  out["violations"] = violations;
  out["equality_gap"] = functional(P, ext, 0.01 * c.tol) - C;
  return out;
}

Json run_zeros(const RunConfig& c, Json& diag) {
  if (c.count < 1) throw DomainError("--count must be >= 1");
  BandFunction h;
  int d = 0;
  if (c.pipeline == "h0") {
    h = make_h0();
  } else if (c.pipeline == "poly") {
    d = c.d.value_or(2);
    if (d < 0 || d > max_poly_degree) throw DomainError("--d must be in [0, 40]");
    h = solve_poly(d, c.tol).h;
  } else if (c.pipeline == "l2") {
    d = c.d.value_or(1000);
    check_l2_d(c, d);
    h = solve_l2(d, c.tol).h;
  } else {
    throw DomainError("--pipeline must be h0, poly or l2");
  }
  const auto z = extremizer_zeros(h, c.count, 1e-12);
  diag["complete"] = z.complete();
  diag["found"] = z.zeros.size();
  Json out;
  out["pipeline"] = c.pipeline;
  if (c.pipeline != "h0") out["d"] = d;
  out["zeros"] = z.zeros;
  return out;
}

Json run_verify_f0(const RunConfig& c, Json& diag) {
  const auto h = make_h0();
  const double f_int = h_to_f(h, 0.0, c.tol);
  const auto f = make_f0();
  const double resid = derivative_identity_check(h, f, {0.5, 1.0, 3.25});
  double worst_f = 0.0;
  for (double x : {-3.0, -0.4, 0.7, 2.5, 6.0})
    worst_f = std::max(worst_f, std::abs(h_to_f(h, x, c.tol) - f0(x)));
  const auto q = quotient(h, c.tol);
  diag["quotient_numerator"] = quad_diag(q.numerator);
  diag["quotient_denominator"] = quad_diag(q.denominator);
  Json out;
  out["f0_at_0"] = f0(0.0);
  out["cumulative_at_0"] = f_int;
  out["max_abs_closed_vs_cumulative"] = worst_f;
  out["derivative_identity_residual"] = resid;
  out["quotient_h0"] = q.value;
  out["certificate"] = certify_d2_exact().str();
  out["certificate_value"] = to_double(certify_d2_exact());
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw DomainError("cannot write " + p.string());
  out << text;
}

std::string sample_csv(const std::string& header, double a, double b, int n,
                       const std::vector<std::function<double(double)>>& cols) {
  std::string s = header + "\n";
  for (int k = 0; k < n; ++k) {
    const double x = a + (b - a) * k / (n - 1);
    s += fmt(x);
    for (const auto& f : cols) s += "," + fmt(f(x));
    s += "\n";
  }
  return s;
}

Json run_tables(const RunConfig& c, Json& diag) {
  namespace fs = std::filesystem;
  const fs::path dir(c.out_dir);
  fs::create_directories(dir);
  const int cap = l2_cap(c);

  std::string tba = "pipeline,d,bound,golden,deviation,status\n";
  double worst = 0.0;
  for (const auto& g : golden_poly_bounds()) {
    const double b = solve_poly(g.d, c.tol).bound;
    worst = std::max(worst, std::abs(b - g.bound));
    tba += "poly," + std::to_string(g.d) + "," + fmt(b) + "," + fmt(g.bound) + "," +
           fmt(b - g.bound) + ",ok\n";
  }
  int skipped = 0;
  for (const auto& g : golden_l2_bounds()) {
    if (g.d > cap) {
      tba += "l2," + std::to_string(g.d) + ",," + fmt(g.bound) + ",,skipped\n";
      ++skipped;
      continue;
    }
    const double b = solve_l2(g.d, c.tol).bound;
    worst = std::max(worst, std::abs(b - g.bound));
    tba += "l2," + std::to_string(g.d) + "," + fmt(b) + "," + fmt(g.bound) + "," +
           fmt(b - g.bound) + ",ok\n";
  }
  write_file(dir / "tb_a.csv", tba);

  std::string tbz = "row,d";
  for (int k = 1; k <= 10; ++k) tbz += ",x" + std::to_string(k);
  tbz += ",max_deviation\n";
  auto zero_row = [&](const std::string& name, int d, const BandFunction& h,
                      const std::vector<double>& golden) {
    const auto z = extremizer_zeros(h, 10, 1e-12);
    double dev = 0.0;
    tbz += name + "," + std::to_string(d);
    for (std::size_t k = 0; k < 10; ++k) {
      tbz += "," + (k < z.zeros.size() ? fmt(z.zeros[k]) : std::string());
      if (k < z.zeros.size()) dev = std::max(dev, std::abs(z.zeros[k] - golden[k]));
    }
    tbz += "," + fmt(dev) + "\n";
  };
  zero_row("Pol", 2, make_h0(), golden_h0_zeros());
  const int dz = std::min(cap, l2_hard_cap);
  zero_row("L2", dz, solve_l2(dz, c.tol).h, golden_l2_zeros());
  write_file(dir / "tb_zeros.csv", tbz);

  constexpr int n = 2000;
  write_file(dir / "fejer_cover.csv",
             sample_csv("x,fejer,lid", -4.0, 4.0, n, {fejer, f_half}));
  write_file(dir / "f0.csv", sample_csv("x,f0", -5.0, 5.0, n, {f0}));
  write_file(dir / "h0_hat.csv",
             sample_csv("xi,4h0_hat", -0.5, 0.5, n, {[](double t) { return 4.0 * h0_hat(t); }}));
  write_file(dir / "h0.csv", sample_csv("x,h0_normalized", -10.0, 10.0, n,
                                        {[](double x) { return 600.0 / 91.0 * h0(x); }}));

  diag["max_bound_deviation"] = worst;
  diag["l2_rows_skipped"] = skipped;
  Json out;
  out["files"] = {"tb_a.csv", "tb_zeros.csv", "fejer_cover.csv", "f0.csv", "h0_hat.csv", "h0.csv"};
  out["l2_cap"] = cap;
  out["zeros_l2_d"] = dz;
  return out;
}

using Handler = Json (*)(const RunConfig&, Json&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"monotone-poly", run_monotone_poly},   {"monotone-l2", run_monotone_l2},
      {"lid", run_lid},                       {"lid-optimize", run_lid_optimize},
      {"sharp-constant", run_sharp_constant}, {"verify-inequality", run_verify_inequality},
      {"zeros", run_zeros},                   {"verify-f0", run_verify_f0},
      {"tables", run_tables}};
  return h;
}

void flatten(const std::string& key, const Json& v, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(key.empty() ? k : key + "." + k, x, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten(key + "[" + std::to_string(i) + "]", v[i], out);
  } else if (v.is_number_float()) {
    out += key + "," + fmt(v.get<double>()) + "\n";
  } else if (v.is_string()) {
    out += key + "," + v.get<std::string>() + "\n";
  } else {
    out += key + "," + v.dump() + "\n";
  }
}

} // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> c = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return c;
}

Json run(const RunConfig& cfg) {
  const auto it = handlers().find(cfg.command);
  if (it == handlers().end()) throw DomainError("unknown command '" + cfg.command + "'");
  if (!(cfg.tol > 0.0)) throw DomainError("--tol must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  Json diag = Json::object();
  Json result = it->second(cfg, diag);
  Json rec;
  rec["command"] = cfg.command;
  rec["params"] = params_of(cfg);
  rec["result"] = std::move(result);
  rec["diagnostics"] = std::move(diag);
  if (cfg.timing)
    rec["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec["version"] = BANDLIMIT_VERSION;
  return rec;
}

Json error_record(const RunConfig& cfg, const std::string& kind, const std::string& message) {
  Json rec;
  rec["command"] = cfg.command;
  rec["params"] = params_of(cfg);
  rec["error"] = Json{{"kind", kind}, {"message", message}};
  rec["version"] = BANDLIMIT_VERSION;
  return rec;
}

std::string format_json(const Json& record) { return record.dump(2) + "\n"; }

std::string format_csv(const Json& record) {
  std::string out = "key,value\n";
  flatten("", record, out);
  return out;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty entry in number list '" + text + "'");
    item = item.substr(b, e - b + 1);
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || !std::isfinite(v))
      throw DomainError("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

const std::vector<GoldenRow>& golden_poly_bounds() {
  static const std::vector<GoldenRow> g{{2, 1.277171240},  {4, 1.277148060},  {6, 1.277137688},
                                        {8, 1.277135865},  {10, 1.277135348}, {12, 1.277135173},
                                        {14, 1.277135104}, {16, 1.277135074}, {20, 1.277135052}};
  return g;
}

const std::vector<GoldenRow>& golden_l2_bounds() {
  static const std::vector<GoldenRow> g{{10, 1.277199350},  {50, 1.277136017},  {100, 1.277135195},
                                        {150, 1.277135093}, {200, 1.277135065}, {300, 1.277135050},
                                        {400, 1.277135046}, {500, 1.277135044}, {1000, 1.277135042}};
  return g;
}

const std::vector<double>& golden_h0_zeros() {
  static const std::vector<double> z{1.5839, 2.5715, 3.5573, 4.5470, 5.5395,
                                     6.5340, 7.5297, 8.5264, 9.5238, 10.5220};
  return z;
}

const std::vector<double>& golden_l2_zeros() {
  static const std::vector<double> z{1.5866, 2.5648, 3.5525, 4.5444, 5.5387,
                                     6.5344, 7.5311, 8.5284, 9.5261, 10.5243};
  return z;
}

} // namespace bandlimit
