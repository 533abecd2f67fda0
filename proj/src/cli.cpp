#include "bosonic/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bosonic/anticoncentration.hpp"
#include "bosonic/errors.hpp"
#include "bosonic/irreps.hpp"
#include "bosonic/moments.hpp"
#include "bosonic/parallel.hpp"
#include "bosonic/sweep.hpp"
#include "bosonic/verify.hpp"

namespace bosonic {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using nlohmann::json;

json exact_or_null(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string csv_number(const std::optional<double>& x, int precision) {
  return x ? to_decimal(*x, precision) : std::string();
}

// ---------------------------------------------------------------------------
// p2

struct P2Args {
  unsigned m = 0;
  unsigned n = 0;
  std::string method = "closed";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string format = "json";
  int precision = 15;
  unsigned jobs = 0;
};

int cmd_p2(const P2Args& a, std::ostream& out) {
  if (a.m < 1) throw UsageError("--modes must be at least 1");
  const auto method = parse_p2_method(a.method);
  if (!method) throw UsageError("unknown method '" + a.method + "'");
  P2Options options;
  options.method = *method;
  options.samples = a.samples;
  options.seed = a.seed;
  options.workers = a.jobs ? a.jobs : default_jobs();
  const P2Report r = evaluate_p2(a.m, a.n, options);

  const std::string p2 = r.exact ? to_decimal(*r.exact, a.precision) : to_decimal(r.p2, a.precision);
  const std::string regime = to_string(r.regime.regime);
  if (a.format == "json") {
    json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["method"] = to_string(r.method);
    j["p2"] = p2;
    if (r.exact) {
      j["p2_exact_num"] = r.exact->get_num().get_str();
      j["p2_exact_den"] = r.exact->get_den().get_str();
    }
    if (r.mc) j["p2_std_error"] = r.mc->std_error;
    j["regime"] = regime;
    j["asymptote"] = exact_or_null(r.asymptote);
    j["pz_bound_half"] = r.pz_bound_half;
    out << j.dump(2) << "\n";
  } else {
    out << "m,n,method,p2,p2_exact_num,p2_exact_den,regime,asymptote,pz_bound_half\r\n";
    out << r.m << ',' << r.n << ',' << to_string(r.method) << ',' << p2 << ','
        << (r.exact ? r.exact->get_num().get_str() : "") << ','
        << (r.exact ? r.exact->get_den().get_str() : "") << ',' << regime << ','
        << csv_number(r.asymptote, a.precision) << ',' << to_decimal(r.pz_bound_half, a.precision)
        << "\r\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  double c = 2;
  double beta = 1;
  unsigned n_min = 1;
  unsigned n_max = 10;
  unsigned n_step = 1;
  std::string method = "closed";
  std::string out_path;
  std::string format = "csv";
  std::string plot_script;
  int precision = 15;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto method = parse_p2_method(a.method);
  if (!method) throw UsageError("unknown method '" + a.method + "'");
  if (!(a.c > 0)) throw UsageError("--c must be positive");
  if (a.beta < 1) throw UsageError("--beta must be at least 1");
  if (a.n_min < 1 || a.n_max < a.n_min || a.n_step < 1) {
    throw UsageError("need 1 <= --n-min <= --n-max and --n-step >= 1");
  }
  if (!a.plot_script.empty() && (a.out_path.empty() || a.format != "csv")) {
    throw UsageError("--emit-plot-script needs --out with csv format");
  }
  SweepConfig cfg;
  cfg.c = a.c;
  cfg.beta = a.beta;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.n_step = a.n_step;
  cfg.p2.method = *method;
  cfg.p2.samples = a.samples;
  cfg.p2.seed = a.seed;
  cfg.precision = a.precision;
  cfg.jobs = a.jobs ? a.jobs : default_jobs();
  const auto rows = run_sweep(cfg);

  std::ostringstream body;
  if (a.format == "csv") {
    write_sweep_csv(body, rows);
  } else {
    body << sweep_to_json(cfg, rows).dump(2) << "\n";
  }
  if (a.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file || !(file << body.str()) || !file.flush()) {
      throw Failure("cannot write " + a.out_path);
    }
    out << "wrote " << rows.size() << " rows to " << a.out_path << "\n";
  }
  if (!a.plot_script.empty()) {
    std::ofstream script(a.plot_script);
    if (!script || !(script << sweep_plot_script(cfg, a.out_path)) || !script.flush()) {
      throw Failure("cannot write " + a.plot_script);
    }
    out << "wrote plot script " << a.plot_script << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// moment

struct MomentArgs {
  unsigned m = 0;
  unsigned n = 0;
  std::string input;
  std::string output;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
  int precision = 15;
  std::string format = "text";
  unsigned jobs = 0;
};

Occupation occupation_in(const std::string& text, unsigned m, unsigned n, const char* flag) {
  Occupation s;
  try {
    s = parse_occupation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (s.modes() != m || s.total() != n) {
    throw UsageError(std::string(flag) + " " + s.to_string() + " does not have " + std::to_string(m) +
                     " modes and " + std::to_string(n) + " photons");
  }
  return s;
}

int cmd_moment(const MomentArgs& a, std::ostream& out) {
  if (a.m < 1) throw UsageError("--modes must be at least 1");
  const auto in = occupation_in(a.input, a.m, a.n, "--input");
  const auto outp = occupation_in(a.output, a.m, a.n, "--output");
  const Rational exact = fock_second_moment(in, outp);
  const Rational first = Rational(BigInt(1), basis_size(a.m, a.n));
  std::optional<MomentEstimate> mc;
  bool pass = true;
  if (a.mc_samples) {
    if (a.mc_samples < 100) throw UsageError("--mc-check needs at least 100 samples");
    mc = mc_second_moment(in, outp, a.mc_samples, a.seed, a.jobs ? a.jobs : default_jobs());
    pass = std::abs(mc->mean - to_double(exact)) <= 3 * mc->std_error;
  }
  if (a.format == "json") {
    json j{{"m", a.m},
           {"n", a.n},
           {"input", in.to_string()},
           {"output", outp.to_string()},
           {"second_moment", to_decimal(exact, a.precision)},
           {"second_moment_num", exact.get_num().get_str()},
           {"second_moment_den", exact.get_den().get_str()},
           {"first_moment", to_string(first)}};
    if (mc) {
      j["mc_mean"] = mc->mean;
      j["mc_std_error"] = mc->std_error;
      j["mc_samples"] = mc->samples;
      j["mc_check"] = pass ? "PASS" : "FAIL";
    }
    out << j.dump(2) << "\n";
  } else {
    out << "second_moment " << to_string(exact) << "\n";
    out << "decimal " << to_decimal(exact, a.precision) << "\n";
    out << "first_moment " << to_string(first) << "\n";
    if (mc) {
      out << "mc_mean " << to_decimal(mc->mean, a.precision) << "\n";
      out << "mc_std_error " << to_decimal(mc->std_error, a.precision) << "\n";
      out << "mc_samples " << mc->samples << "\n";
      out << "mc_check " << (pass ? "PASS" : "FAIL") << " (3 sigma)\n";
    }
  }
  return pass ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  unsigned m = 0;
  unsigned n = 0;
  std::string obs;
  std::string format = "text";
  bool verify_projection = false;
  int precision = 15;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  if (a.m < 2) throw UsageError("spectrum needs --modes >= 2");
  const auto s = occupation_in(a.obs, a.m, a.n, "--obs");
  const auto op = DiagonalOperator::fock_projector(s);
  const auto table = spectrum(op);

  bool projection_ok = true;
  if (a.verify_projection) {
    const auto parts = decompose(op);
    for (const auto& e : table.entries) projection_ok = projection_ok && hs_norm_sq(parts[e.k]) == e.norm_sq;
  }
  BigInt dim_total = 0;
  for (const auto& e : table.entries) dim_total += e.dim;
  const Rational total = table.total();

  if (a.format == "json") {
    json rows = json::array();
    for (const auto& e : table.entries) {
      rows.push_back({{"k", e.k},
                      {"dim", e.dim.get_str()},
                      {"norm_sq", to_string(e.norm_sq)},
                      {"norm_sq_decimal", to_decimal(e.norm_sq, a.precision)}});
    }
    json j{{"m", a.m}, {"n", a.n}, {"obs", s.to_string()}, {"entries", rows},
           {"total", {{"dim", dim_total.get_str()},
                      {"norm_sq", to_string(total)},
                      {"norm_sq_decimal", to_decimal(total, a.precision)}}}};
    if (a.verify_projection) j["projection_check"] = projection_ok ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(8) << "k" << std::setw(16) << "d_k" << std::setw(28) << "norm_sq"
        << "decimal\n";
    for (const auto& e : table.entries) {
      out << std::setw(8) << e.k << std::setw(16) << e.dim.get_str() << std::setw(28)
          << to_string(e.norm_sq) << to_decimal(e.norm_sq, a.precision) << "\n";
    }
    out << std::setw(8) << "total" << std::setw(16) << dim_total.get_str() << std::setw(28)
        << to_string(total) << to_decimal(total, a.precision) << "\n";
    if (a.verify_projection) out << "projection_check " << (projection_ok ? "PASS" : "FAIL") << "\n";
  }
  return projection_ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

int cmd_verify(VerifyOptions options, unsigned jobs, std::ostream& out) {
  options.jobs = jobs ? jobs : default_jobs();
  const auto results = run_verify(options);
  print_verify_report(out, results);
  for (const auto& r : results) {
    if (!r.passed()) return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

Occupation parse_occupation(const std::string& text) {
  const std::string prefix = "fock:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("expected fock:a,b,... but got '" + text + "'");
  std::vector<unsigned> counts;
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw std::invalid_argument("bad photon count '" + item + "' in '" + text + "'");
    }
    counts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (counts.empty() || text.back() == ',') throw std::invalid_argument("empty occupation in '" + text + "'");
  return Occupation(std::move(counts));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Haar second moments and outcome-collision probabilities for boson sampling",
               "bosonic_moments"};
  app.require_subcommand(1);
  unsigned jobs = 0;

  P2Args p2;
  auto* p2_cmd = app.add_subcommand("p2", "normalized average outcome-collision probability P2(m,n)");
  p2_cmd->add_option("--modes,-m", p2.m, "number of modes")->required();
  p2_cmd->add_option("--photons,-n", p2.n, "number of photons")->required();
  p2_cmd->add_option("--method", p2.method, "closed|beta|integral|mc")
      ->check(CLI::IsMember({"closed", "beta", "integral", "mc"}));
  p2_cmd->add_option("--samples", p2.samples, "Monte-Carlo samples")->check(CLI::Range(100ull, 1ull << 40));
  p2_cmd->add_option("--seed", p2.seed, "Monte-Carlo seed");
  p2_cmd->add_option("--format", p2.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  p2_cmd->add_option("--precision", p2.precision, "significant digits")->check(CLI::Range(1, 100));
  p2_cmd->add_option("--jobs", jobs, "worker threads");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "P2 along m = round(c n^beta)");
  sweep_cmd->add_option("--c", sw.c, "scaling constant")->required();
  sweep_cmd->add_option("--beta", sw.beta, "scaling exponent")->required();
  sweep_cmd->add_option("--n-min", sw.n_min, "first n");
  sweep_cmd->add_option("--n-max", sw.n_max, "last n");
  sweep_cmd->add_option("--n-step", sw.n_step, "n increment");
  sweep_cmd->add_option("--method", sw.method, "closed|beta|integral|mc")
      ->check(CLI::IsMember({"closed", "beta", "integral", "mc"}));
  sweep_cmd->add_option("--out", sw.out_path, "output file (default: stdout)");
  sweep_cmd->add_option("--format", sw.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--emit-plot-script", sw.plot_script, "write a gnuplot script here");
  sweep_cmd->add_option("--precision", sw.precision, "significant digits")->check(CLI::Range(1, 100));
  sweep_cmd->add_option("--samples", sw.samples, "Monte-Carlo samples")->check(CLI::Range(100ull, 1ull << 40));
  sweep_cmd->add_option("--seed", sw.seed, "Monte-Carlo seed");
  sweep_cmd->add_option("--jobs", jobs, "worker threads");

  MomentArgs mo;
  auto* moment_cmd = app.add_subcommand("moment", "exact Haar second moment of a Fock output probability");
  moment_cmd->add_option("--modes,-m", mo.m, "number of modes")->required();
  moment_cmd->add_option("--photons,-n", mo.n, "number of photons")->required();
  moment_cmd->add_option("--input", mo.input, "fock:a,b,...")->required();
  moment_cmd->add_option("--output", mo.output, "fock:a,b,...")->required();
  moment_cmd->add_option("--mc-check", mo.mc_samples, "compare with a Monte-Carlo estimate");
  moment_cmd->add_option("--seed", mo.seed, "Monte-Carlo seed");
  moment_cmd->add_option("--precision", mo.precision, "significant digits")->check(CLI::Range(1, 100));
  moment_cmd->add_option("--format", mo.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  moment_cmd->add_option("--jobs", jobs, "worker threads");

  SpectrumArgs sp;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "irrep norms of a Fock projector");
  spectrum_cmd->add_option("--modes,-m", sp.m, "number of modes")->required();
  spectrum_cmd->add_option("--photons,-n", sp.n, "number of photons")->required();
  spectrum_cmd->add_option("--obs", sp.obs, "fock:a,b,...")->required();
  spectrum_cmd->add_option("--format", sp.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  spectrum_cmd->add_flag("--verify-projection", sp.verify_projection,
                         "compare with explicitly projected operators");
  spectrum_cmd->add_option("--precision", sp.precision, "significant digits")->check(CLI::Range(1, 100));

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "run every invariant suite");
  verify_cmd->add_option("--max-modes", vo.max_modes, "largest m in exhaustive suites")
      ->check(CLI::Range(2u, 8u));
  verify_cmd->add_option("--max-photons", vo.max_photons, "largest n in exhaustive suites")
      ->check(CLI::Range(1u, 6u));
  verify_cmd->add_option("--seed", vo.seed, "seed for random cases");
  verify_cmd->add_option("--mc-samples", vo.mc_samples, "Monte-Carlo samples per check")
      ->check(CLI::Range(100ull, 1ull << 40));
  verify_cmd->add_flag("--skip-mc", vo.skip_mc, "deterministic suites only");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  std::vector<const char*> argv{"bosonic_moments"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  p2.jobs = sw.jobs = mo.jobs = jobs;
  try {
    if (*p2_cmd) return cmd_p2(p2, out);
    if (*sweep_cmd) return cmd_sweep(sw, out);
    if (*moment_cmd) return cmd_moment(mo, out);
    if (*spectrum_cmd) return cmd_spectrum(sp, out);
    if (*verify_cmd) return cmd_verify(vo, jobs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bosonic
