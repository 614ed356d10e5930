#ifndef DISTPAIR_VERIFY_HPP
#define DISTPAIR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "distpair/dist.hpp"
#include "distpair/pv.hpp"
#include "distpair/testfn.hpp"

namespace distpair {

// Per-identity verification record over one corpus. A member passes when
// its residual is at most tol plus the quadrature error estimates that went
// into it, which separates identity failure from quadrature noise; the
// check passes when every member does.
struct CheckReport {
  std::string name;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  bool pass = false;
  double max_residual = 0.0;
  std::vector<double> residuals;   // one per corpus member
  std::vector<double> allowances;  // summed error estimates per member
  std::vector<bool> member_pass;
  double wall_ms = 0.0;
  int skipped = 0;  // members outside a check's representable class
};

// The corpus loops are data-parallel; Parallel runs them under OpenMP with
// per-member result slots, so reports are identical to the Serial reference
// apart from wall time.
enum class RunPolicy { Serial, Parallel };

// Agreement of the three n = 1 routes (Definition / OddReflection /
// Centered); residual = max pairwise difference.
CheckReport check_prop1(const Corpus& corpus, double tol,
                        RunPolicy policy = RunPolicy::Serial);

// TaylorSubtraction vs DerivativeRecursion for n = 1..n_max.
CheckReport check_pvn(const Corpus& corpus, int n_max, double tol,
                      RunPolicy policy = RunPolicy::Serial);

// <F sgn, phi> = -2i <p.v. 1/x, phi>.
CheckReport check_fourier_sgn(const Corpus& corpus, double tol,
                              RunPolicy policy = RunPolicy::Serial);

// <F H, phi> = -i <p.v. 1/x, phi> + pi phi(0).
CheckReport check_fourier_heaviside(const Corpus& corpus, double tol,
                                    RunPolicy policy = RunPolicy::Serial);

// <F 1, phi> = 2 pi phi(0).
CheckReport check_fourier_one(const Corpus& corpus, double tol,
                              RunPolicy policy = RunPolicy::Serial);

// F H pairs like (-1)^2 integral (-i h + pi ramp) phi'' .
CheckReport check_remark_csl(const Corpus& corpus, double tol,
                             RunPolicy policy = RunPolicy::Serial);

// integral ramp * phi'' = phi(0).
CheckReport check_delta_ramp(const Corpus& corpus, double tol,
                             RunPolicy policy = RunPolicy::Serial);

// Riemann-Lebesgue decay of F psi for psi(y) = (phi(y) - phi(-y))/y.
// Only members whose odd part divided by y stays in the class (center and
// modulation both zero) contribute; others are skipped. Pass requires
// non-increasing |F psi(N)| over Ns and a final value <= 1e-10.
CheckReport check_riemann_lebesgue(const TestFunction& phi,
                                   const std::vector<double>& big_n = {2.0, 5.0,
                                                                       10.0});
CheckReport check_riemann_lebesgue(const Corpus& corpus,
                                   RunPolicy policy = RunPolicy::Serial);

struct SuiteReport {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::size_t corpus_size = 0;
  std::vector<CheckReport> checks;
  bool all_pass() const;
};

// Suite selectors, in report order.
const std::vector<std::string>& suite_names();

// selector: one of suite_names() or "all". Throws ConfigError on an unknown
// selector.
SuiteReport run_suite(const std::string& selector, const Corpus& corpus,
                      double tol, RunPolicy policy = RunPolicy::Serial);

}  // namespace distpair

#endif
