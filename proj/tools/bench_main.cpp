// Times the verification suite with the serial reference runner and the
// OpenMP runner on the same corpus and confirms the reports agree.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distpair/report_json.hpp"
#include "distpair/verify.hpp"

using namespace distpair;

namespace {

double run_timed(const std::string& suite, const Corpus& corpus, double tol,
                 RunPolicy policy, std::string* json) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(suite, corpus, tol, policy);
  const auto stop = std::chrono::steady_clock::now();
  *json = strip_wall_times(to_json(report));
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel suite benchmark"};
  std::string suite = "all";
  double tol = 1e-7;
  std::uint64_t seed = 42;
  std::size_t size = 50;
  app.add_option("--suite", suite, "suite selector");
  app.add_option("--tol", tol, "identity tolerance");
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--size", size, "corpus size");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const Corpus corpus = corpus_generate(seed, size);

  std::string serial_json, parallel_json;
  const double serial_ms =
      run_timed(suite, corpus, tol, RunPolicy::Serial, &serial_json);
  const double parallel_ms =
      run_timed(suite, corpus, tol, RunPolicy::Parallel, &parallel_json);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("suite=%s size=%zu tol=%.1e seed=%llu\n", suite.c_str(), size,
              tol, static_cast<unsigned long long>(seed));
  std::printf("serial   : %10.1f ms\n", serial_ms);
  std::printf("parallel : %10.1f ms  (%d threads)\n", parallel_ms, threads);
  std::printf("speedup  : %10.2fx\n",
              parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
  const bool identical = serial_json == parallel_json;
  std::printf("reports identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
