#include "distpair/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace distpair {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
constexpr double kRlThreshold = 1e-10;

// Residual recorded for a member whose evaluation aborted (budget, degree
// cap, ...): the largest finite double, so failures stay serializable.
constexpr double kAborted = std::numeric_limits<double>::max();

struct MemberOutcome {
  double residual = 0.0;
  double allowance = 0.0;
  bool pass = false;
  bool skipped = false;
};

template <typename Fn>
void for_each_index(std::size_t count, RunPolicy policy, Fn&& fn) {
#ifdef _OPENMP
  if (policy == RunPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

// Runs one outcome functor per corpus member (parallel under the Parallel
// policy) and assembles the report deterministically by member index.
CheckReport run_member_check(
    std::string name, const Corpus& corpus, double tol, RunPolicy policy,
    const std::function<MemberOutcome(const TestFunction&)>& body) {
  CheckReport report;
  report.name = std::move(name);
  report.seed = corpus.seed;
  report.tolerance = tol;

  const std::size_t n = corpus.members.size();
  std::vector<MemberOutcome> outcomes(n);
  const auto start = std::chrono::steady_clock::now();
  for_each_index(n, policy, [&](std::size_t i) {
    try {
      outcomes[i] = body(corpus.members[i]);
    } catch (const Error&) {
      outcomes[i] = MemberOutcome{kAborted, 0.0, false, false};
    }
  });
  const auto stop = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  report.residuals.resize(n);
  report.allowances.resize(n);
  report.member_pass.resize(n);
  report.pass = true;
  for (std::size_t i = 0; i < n; ++i) {
    report.residuals[i] = outcomes[i].residual;
    report.allowances[i] = outcomes[i].allowance;
    report.member_pass[i] = outcomes[i].pass;
    report.max_residual = std::max(report.max_residual, outcomes[i].residual);
    if (!outcomes[i].pass) report.pass = false;
    if (outcomes[i].skipped) ++report.skipped;
  }
  return report;
}

MemberOutcome outcome_from(double residual, double allowance, double tol) {
  return {residual, allowance, residual <= tol + allowance, false};
}

// Quadrature runs tighter than the identity tolerance being verified.
double quad_tol(double tol) { return tol / 8.0; }

}  // namespace

CheckReport check_prop1(const Corpus& corpus, double tol, RunPolicy policy) {
  return run_member_check(
      "prop1", corpus, tol, policy, [tol](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult def =
            pv_pair(1, phi, PvRoute::Definition, qt);
        const PairingResult odd =
            pv_pair(1, phi, PvRoute::OddReflection, qt);
        const PairingResult cen = pv_pair(1, phi, PvRoute::Centered, qt);
        const double residual =
            std::max({std::abs(def.value - odd.value),
                      std::abs(odd.value - cen.value),
                      std::abs(def.value - cen.value)});
        const double allowance = def.error_estimate + odd.error_estimate +
                                 cen.error_estimate;
        return outcome_from(residual, allowance, tol);
      });
}

CheckReport check_pvn(const Corpus& corpus, int n_max, double tol,
                      RunPolicy policy) {
  return run_member_check(
      "pvn", corpus, tol, policy, [tol, n_max](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        MemberOutcome out;
        out.pass = true;
        for (int n = 1; n <= n_max; ++n) {
          const PairingResult ts =
              pv_pair(n, phi, PvRoute::TaylorSubtraction, qt);
          const PairingResult dr =
              pv_pair(n, phi, PvRoute::DerivativeRecursion, qt);
          const double residual = std::abs(ts.value - dr.value);
          const double allowance = ts.error_estimate + dr.error_estimate;
          if (residual > tol + allowance) out.pass = false;
          if (residual > out.residual) {
            out.residual = residual;
            out.allowance = allowance;
          }
        }
        return out;
      });
}

CheckReport check_fourier_sgn(const Corpus& corpus, double tol,
                              RunPolicy policy) {
  const Distribution fsgn = fourier(Distribution::regular(csl::sign()));
  return run_member_check(
      "fsgn", corpus, tol, policy, [tol, &fsgn](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult lhs = pair(fsgn, phi, qt);
        const PairingResult pv1 = pair(Distribution::pv(1), phi, qt);
        const double residual =
            std::abs(lhs.value + Complex{0.0, 2.0} * pv1.value);
        const double allowance =
            lhs.error_estimate + 2.0 * pv1.error_estimate;
        return outcome_from(residual, allowance, tol);
      });
}

CheckReport check_fourier_heaviside(const Corpus& corpus, double tol,
                                    RunPolicy policy) {
  const Distribution fh = fourier(Distribution::regular(csl::heaviside()));
  return run_member_check(
      "fheaviside", corpus, tol, policy, [tol, &fh](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult lhs = pair(fh, phi, qt);
        const PairingResult pv1 = pair(Distribution::pv(1), phi, qt);
        const Complex rhs =
            Complex{0.0, -1.0} * pv1.value + kPi * phi.eval(0.0);
        const double residual = std::abs(lhs.value - rhs);
        const double allowance = lhs.error_estimate + pv1.error_estimate;
        return outcome_from(residual, allowance, tol);
      });
}

CheckReport check_fourier_one(const Corpus& corpus, double tol,
                              RunPolicy policy) {
  const Distribution fone = fourier(Distribution::regular(csl::one()));
  return run_member_check(
      "fone", corpus, tol, policy, [tol, &fone](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult lhs = pair(fone, phi, qt);
        const double residual =
            std::abs(lhs.value - 2.0 * kPi * phi.eval(0.0));
        return outcome_from(residual, lhs.error_estimate, tol);
      });
}

CheckReport check_remark_csl(const Corpus& corpus, double tol,
                             RunPolicy policy) {
  const Distribution rep = Distribution::csl_rep(
      csl_combine({{Complex{0.0, -1.0}, csl::hfun()},
                   {Complex{kPi, 0.0}, csl::ramp()}}),
      2);
  const Distribution fh = fourier(Distribution::regular(csl::heaviside()));
  return run_member_check(
      "remark", corpus, tol, policy,
      [tol, &rep, &fh](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult lhs = pair(rep, phi, qt);
        const PairingResult rhs = pair(fh, phi, qt);
        const double residual = std::abs(lhs.value - rhs.value);
        const double allowance = lhs.error_estimate + rhs.error_estimate;
        return outcome_from(residual, allowance, tol);
      });
}

CheckReport check_delta_ramp(const Corpus& corpus, double tol,
                             RunPolicy policy) {
  const Distribution rep = Distribution::csl_rep(csl::ramp(), 2);
  return run_member_check(
      "delta-ramp", corpus, tol, policy, [tol, &rep](const TestFunction& phi) {
        const double qt = quad_tol(tol);
        const PairingResult lhs = pair(rep, phi, qt);
        const double residual = std::abs(lhs.value - phi.eval(0.0));
        return outcome_from(residual, lhs.error_estimate, tol);
      });
}

namespace {

// psi(y) = (phi(y) - phi(-y))/y stays in the class exactly when phi has no
// center shift and no modulation; the odd polynomial part then divides by y
// coefficient-wise.
bool rl_representable(const TestFunction& phi) {
  return phi.center() == 0.0 && phi.modulation() == 0.0;
}

MemberOutcome rl_outcome(const TestFunction& phi,
                         const std::vector<double>& big_n) {
  if (!rl_representable(phi)) return {0.0, 0.0, true, true};
  const auto& p = phi.poly().coeffs();
  std::vector<Complex> q(p.size(), Complex{});
  for (std::size_t k = 1; k < p.size(); k += 2) q[k - 1] = 2.0 * p[k];
  const TestFunction psi{ComplexPolynomial{std::move(q)}, phi.width(), 0.0,
                         0.0};
  const TestFunction fpsi = psi.fourier();

  MemberOutcome out;
  out.pass = true;
  double prev = std::numeric_limits<double>::infinity();
  for (double n : big_n) {
    const double mag = std::abs(fpsi.eval(n));
    if (mag > prev) out.pass = false;
    prev = mag;
    out.residual = mag;
  }
  if (out.residual > kRlThreshold) out.pass = false;
  return out;
}

}  // namespace

CheckReport check_riemann_lebesgue(const TestFunction& phi,
                                   const std::vector<double>& big_n) {
  Corpus single;
  single.members.push_back(phi);
  return run_member_check("rl", single, kRlThreshold, RunPolicy::Serial,
                          [&big_n](const TestFunction& member) {
                            return rl_outcome(member, big_n);
                          });
}

CheckReport check_riemann_lebesgue(const Corpus& corpus, RunPolicy policy) {
  return run_member_check("rl", corpus, kRlThreshold, policy,
                          [](const TestFunction& member) {
                            return rl_outcome(member, {2.0, 5.0, 10.0});
                          });
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop1", "pvn",    "fsgn", "fheaviside",
      "fone",  "remark", "rl",   "delta-ramp"};
  return names;
}

SuiteReport run_suite(const std::string& selector, const Corpus& corpus,
                      double tol, RunPolicy policy) {
  SuiteReport report;
  report.seed = corpus.seed;
  report.tol = tol;
  report.corpus_size = corpus.members.size();

  auto run_one = [&](const std::string& name) -> CheckReport {
    if (name == "prop1") return check_prop1(corpus, tol, policy);
    if (name == "pvn") return check_pvn(corpus, kPvMaxOrder, tol, policy);
    if (name == "fsgn") return check_fourier_sgn(corpus, tol, policy);
    if (name == "fheaviside")
      return check_fourier_heaviside(corpus, tol, policy);
    if (name == "fone") return check_fourier_one(corpus, tol, policy);
    if (name == "remark") return check_remark_csl(corpus, tol, policy);
    if (name == "rl") return check_riemann_lebesgue(corpus, policy);
    if (name == "delta-ramp") return check_delta_ramp(corpus, tol, policy);
    throw ConfigError("unknown suite: " + name);
  };

  if (selector == "all") {
    for (const auto& name : suite_names())
      report.checks.push_back(run_one(name));
  } else {
    report.checks.push_back(run_one(selector));
  }
  return report;
}

}  // namespace distpair
