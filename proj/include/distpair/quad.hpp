#ifndef DISTPAIR_QUAD_HPP
#define DISTPAIR_QUAD_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "distpair/algebra.hpp"

namespace distpair {

// Evaluation budget for one pairing. Generous for desk scale, small enough
// to fail fast on a divergent or mis-specified integrand.
inline constexpr std::uint64_t kWorkBudget = 2'000'000;

// Below this distance from a listed removable singularity the evaluator is
// replaced by the stored limit; closer in, cancellation noise dominates and
// the analytic limit is exact.
inline constexpr double kRemovableWindow = 1e-14;

// Complex-valued integrand with optional removable singularities given as
// (location, limit) pairs. The evaluator must be finite at every non-listed
// point.
struct Integrand {
  std::function<Complex(double)> f;
  std::vector<std::pair<double, Complex>> removable;

  Complex operator()(double x) const {
    for (const auto& [loc, limit] : removable)
      if (std::abs(x - loc) < kRemovableWindow) return limit;
    return f(x);
  }
};

// One <T, phi> evaluation: value, absolute error estimate, work counter.
struct PairingResult {
  Complex value{};
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

// Shared work counter threaded through every quadrature call of a pairing.
class EvalBudget {
 public:
  explicit EvalBudget(std::uint64_t cap = kWorkBudget) : cap_(cap) {}
  std::uint64_t used() const { return used_; }
  void charge(std::uint64_t n);

 private:
  std::uint64_t used_ = 0;
  std::uint64_t cap_;
};

// Adaptive bisection on [lo, hi] with a nested 15-point Kronrod / 7-point
// Gauss pair per panel; panel error |K15 - G7|; worst-error-first
// subdivision with insertion-index tie-break, so results are deterministic.
PairingResult integrate_interval(const Integrand& f, double lo, double hi,
                                 double tol, EvalBudget& budget);
PairingResult integrate_interval(const Integrand& f, double lo, double hi,
                                 double tol);

// Whole-line integral of an absolutely convergent integrand. The caller
// certifies integral_{|x|>radius} |f| <= tail_bound; the bound is added to
// the reported error estimate.
PairingResult integrate_line(const Integrand& f, double radius,
                             double tail_bound, double tol, EvalBudget& budget);
PairingResult integrate_line(const Integrand& f, double radius,
                             double tail_bound, double tol);

// Symmetric-truncation limit lim_{M->inf} integral_{-M}^{M} f for
// conditionally convergent integrands whose whole-line tails cancel between
// the two sides. Evaluates I(M) on the doubling ladder M = B, 2B, ..., 16B
// (B = 8 by default; callers pass a larger base when the integrand's
// essential support extends past 8) and stabilizes the sequence by
// Richardson extrapolation in the odd powers 1/M, 1/M^3, ... Returns the
// diagonal value once its successive differences decrease and the last one
// is at most tol; otherwise throws NoConvergence.
PairingResult integrate_symmetric_limit(const Integrand& f, double tol,
                                        EvalBudget& budget,
                                        double base_radius = 8.0);
PairingResult integrate_symmetric_limit(const Integrand& f, double tol,
                                        double base_radius = 8.0);

}  // namespace distpair

#endif
