#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distpair/expr.hpp"
#include "distpair/pv.hpp"
#include "distpair/report_json.hpp"
#include "distpair/verify.hpp"

namespace {

using namespace distpair;

struct VerifyOptions {
  std::string suite = "all";
  double tol = 1e-7;
  std::uint64_t seed = 42;
  std::size_t size = 50;
  std::string report_path;
  bool serial = false;
};

struct PairOptions {
  std::string dist;
  std::string phi;
  std::string route;
  double tol = 1e-7;
  std::string format = "text";
};

struct SampleOptions {
  std::string dist;
  std::string phi;
  std::string family;
  double from = 0.0, to = 0.0, step = 0.0;
  double tol = 1e-7;
  std::string out_path;
};

PvRoute route_from_name(const std::string& name) {
  if (name == "def") return PvRoute::Definition;
  if (name == "odd") return PvRoute::OddReflection;
  if (name == "centered") return PvRoute::Centered;
  if (name == "taylor") return PvRoute::TaylorSubtraction;
  if (name == "recursion") return PvRoute::DerivativeRecursion;
  throw ConfigError("unknown route: " + name);
}

void write_stream(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << payload;
}

int cmd_verify(const VerifyOptions& opt) {
  if (opt.tol < 0.0) throw ConfigError("tolerance must be nonnegative");
  if (opt.size < 1) throw ConfigError("corpus size must be at least 1");
  bool known = opt.suite == "all";
  for (const auto& name : suite_names()) known = known || name == opt.suite;
  if (!known) throw ConfigError("unknown suite: " + opt.suite);

  const Corpus corpus = corpus_generate(opt.seed, opt.size);
  const RunPolicy policy =
      opt.serial ? RunPolicy::Serial : RunPolicy::Parallel;
  const SuiteReport report = run_suite(opt.suite, corpus, opt.tol, policy);

  for (const auto& check : report.checks) {
    std::fprintf(stderr, "[%s] %-11s max_residual=%.3e tol=%.3e (%.0f ms",
                 check.pass ? "pass" : "FAIL", check.name.c_str(),
                 check.max_residual, check.tolerance, check.wall_ms);
    if (check.skipped > 0) std::fprintf(stderr, ", %d skipped", check.skipped);
    std::fprintf(stderr, ")\n");
  }
  write_stream(opt.report_path, to_json(report) + "\n");
  return report.all_pass() ? 0 : 1;
}

int cmd_pair(const PairOptions& opt) {
  if (!(opt.tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (opt.format != "text" && opt.format != "json")
    throw ConfigError("format must be text or json");
  const TestFunction phi = parse_test_function(opt.phi);

  PairingResult result;
  if (!opt.route.empty()) {
    // Route selection only applies to a bare principal-value distribution.
    std::string d = opt.dist;
    if (d.rfind("pv:", 0) != 0)
      throw ConfigError("--route requires --dist \"pv:<n>\"");
    const int order = std::stoi(d.substr(3));
    try {
      result = pv_pair(order, phi, route_from_name(opt.route), opt.tol);
    } catch (const InvalidRoute& e) {
      throw ConfigError(e.what());
    } catch (const InvalidOrder& e) {
      throw ConfigError(e.what());
    }
  } else {
    result = pair(parse_distribution(opt.dist), phi, opt.tol);
  }

  if (opt.format == "json") {
    std::printf("{\"re\": %s, \"im\": %s, \"error_estimate\": %s, "
                "\"evaluations\": %llu}\n",
                format_double(result.value.real()).c_str(),
                format_double(result.value.imag()).c_str(),
                format_double(result.error_estimate).c_str(),
                static_cast<unsigned long long>(result.evaluations));
  } else {
    std::printf("value = %.10g %s %.10gi\n", result.value.real(),
                result.value.imag() < 0 ? "-" : "+",
                std::abs(result.value.imag()));
    std::printf("error_estimate = %.3e\n", result.error_estimate);
    std::printf("evaluations = %llu\n",
                static_cast<unsigned long long>(result.evaluations));
  }
  return 0;
}

int cmd_sample(const SampleOptions& opt) {
  if (!(opt.tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (opt.family != "translate" && opt.family != "modulate")
    throw ConfigError("family must be translate or modulate");
  if (!(opt.step > 0.0)) throw ConfigError("step must be positive");
  if (!(opt.from < opt.to)) throw ConfigError("range must satisfy from < to");

  const Distribution dist = parse_distribution(opt.dist);
  const TestFunction phi = parse_test_function(opt.phi);
  const std::size_t rows =
      static_cast<std::size_t>(std::floor((opt.to - opt.from) / opt.step)) + 1;

  std::vector<PairingResult> results(rows);
  std::string error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
    const double t = opt.from + static_cast<double>(i) * opt.step;
    const TestFunction shifted = opt.family == "translate"
                                     ? phi.with_center(t)
                                     : phi.with_modulation(t);
    try {
      results[static_cast<std::size_t>(i)] = pair(dist, shifted, opt.tol);
    } catch (const Error& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      error = e.what();
    }
  }
  if (!error.empty()) throw Error(error);

  std::string csv = "t,re,im,err\n";
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = opt.from + static_cast<double>(i) * opt.step;
    csv += format_double(t) + "," + format_double(results[i].value.real()) +
           "," + format_double(results[i].value.imag()) + "," +
           format_double(results[i].error_estimate) + "\n";
  }
  write_stream(opt.out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical pairing engine for tempered distributions"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run identity-verification suites over a seeded corpus");
  verify->add_option("--suite", vopt.suite,
                     "prop1|pvn|fsgn|fheaviside|fone|remark|rl|delta-ramp|all");
  verify->add_option("--tol", vopt.tol, "identity tolerance")
      ->envname("DISTPAIR_TOL");
  verify->add_option("--seed", vopt.seed, "corpus seed");
  verify->add_option("--size", vopt.size, "corpus size");
  verify->add_option("--report", vopt.report_path,
                     "JSON report path (default: stdout)");
  verify->add_flag("--serial", vopt.serial, "disable the parallel runner");

  PairOptions popt;
  CLI::App* pairc = app.add_subcommand(
      "pair",
      "Evaluate a single pairing <T, phi>; pv:<n> is the principal value "
      "of 1/x^n (the Hadamard finite part, for even n >= 2)");
  pairc->add_option("--dist", popt.dist, "distribution expression")
      ->required();
  pairc->add_option("--phi", popt.phi, "test-function expression")->required();
  pairc->add_option("--route", popt.route,
                    "def|odd|centered|taylor|recursion (pv:<n> only)");
  pairc->add_option("--tol", popt.tol, "pairing tolerance")
      ->envname("DISTPAIR_TOL");
  pairc->add_option("--format", popt.format, "text|json");

  SampleOptions sopt;
  CLI::App* sample = app.add_subcommand(
      "sample", "Sweep a test-function parameter and emit CSV pairings");
  sample->add_option("--dist", sopt.dist, "distribution expression")
      ->required();
  sample->add_option("--phi", sopt.phi, "test-function expression")
      ->required();
  sample->add_option("--family", sopt.family, "translate|modulate")
      ->required();
  sample->add_option("--from", sopt.from, "sweep start")->required();
  sample->add_option("--to", sopt.to, "sweep end")->required();
  sample->add_option("--step", sopt.step, "sweep step")->required();
  sample->add_option("--tol", sopt.tol, "pairing tolerance")
      ->envname("DISTPAIR_TOL");
  sample->add_option("--out", sopt.out_path, "CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(vopt);
    if (*pairc) return cmd_pair(popt);
    if (*sample) return cmd_sample(sopt);
  } catch (const distpair::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const distpair::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
