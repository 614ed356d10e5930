#include "distpair/pv.hpp"

#include <cmath>

namespace distpair {

namespace {

// Near the origin the subtracted integrands lose all significant digits to
// cancellation: the rounding error of (phi(x) - T_{n-1}phi(x))/x^n grows
// like eps/x^n. Inside |x| < kWindowRadius the integrand is evaluated from
// the Taylor expansion of phi at 0 instead,
//     sum_{k=n}^{n+kWindowTerms} phi^(k)(0)/k! x^{k-n},
// whose truncation error at the window edge is far below every tolerance
// in use, while direct evaluation outside the window keeps eps/x^n small.
constexpr double kWindowRadius = 0.25;
constexpr int kWindowTerms = 24;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::pair<TestFunction, Complex> normalize(const TestFunction& phi) {
  const auto& c = phi.poly().coeffs();
  std::size_t argmax = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (std::abs(c[k]) > std::abs(c[argmax])) argmax = k;
  const Complex s = c[argmax];
  return {phi.scaled(Complex{1.0, 0.0} / s), s};
}

// Ladder base for the symmetric limit: past this radius the Gaussian part
// of phi carries no mass at the tolerances in play, so the truncation error
// of I(M) follows the pure polynomial-tail model the extrapolation assumes.
double ladder_base(const TestFunction& phi) {
  return phi.tail_radius(1e-17);
}

PairingResult route_definition(int order, const TestFunction& phi, double tol,
                               EvalBudget& budget) {
  const TestFunction psi = phi.derivative(order + 1);
  double tail = 0.0;
  // h is CSL with |h(x)| <= 1 + x^2.
  const double radius = psi.weighted_tail_radius(1.0, 2, 0.5 * tol, &tail);
  const Integrand g{[&psi](double x) { return h_eval(x) * psi.eval(x); },
                    {{0.0, Complex{}}}};
  // Split at the kink of h.
  const double eff = 0.5 * std::max(tol - tail, 0.5 * tol);
  const PairingResult left = integrate_interval(g, -radius, 0.0, eff, budget);
  const PairingResult right = integrate_interval(g, 0.0, radius, eff, budget);
  PairingResult r;
  r.value = (left.value + right.value) / factorial(order - 1);
  r.error_estimate =
      (left.error_estimate + right.error_estimate + tail) /
      factorial(order - 1);
  return r;
}

PairingResult route_odd_reflection(const TestFunction& phi, double tol,
                                   EvalBudget& budget) {
  const ComplexPolynomial taylor = phi.taylor(kWindowTerms + 1);
  // (phi(x) - phi(-x))/x = 2 sum_{k odd} c_k x^{k-1} near 0.
  std::vector<Complex> wcoeffs(kWindowTerms + 1, Complex{});
  for (int k = 1; k <= kWindowTerms + 1; k += 2)
    wcoeffs[static_cast<std::size_t>(k - 1)] = 2.0 * taylor.coeff(k);
  const ComplexPolynomial window{std::move(wcoeffs)};
  const Complex limit = 2.0 * taylor.coeff(1);  // 2 phi'(0)

  double tail = 0.0;
  const double radius =
      std::max(1.0, phi.weighted_tail_radius(1.0, 0, 0.25 * tol, &tail));
  const Integrand g{[&phi, &window](double x) {
                      if (std::abs(x) < kWindowRadius)
                        return window.eval(Complex{x, 0.0});
                      return (phi.eval(x) - phi.eval(-x)) / x;
                    },
                    {{0.0, limit}}};
  PairingResult r =
      integrate_interval(g, 0.0, radius, std::max(tol - tail, 0.5 * tol),
                         budget);
  r.error_estimate += tail;
  return r;
}

PairingResult route_subtracted(int order, const TestFunction& phi, double tol,
                               EvalBudget& budget) {
  const ComplexPolynomial taylor = phi.taylor(order + kWindowTerms);
  std::vector<Complex> wcoeffs(kWindowTerms + 1);
  for (int j = 0; j <= kWindowTerms; ++j)
    wcoeffs[static_cast<std::size_t>(j)] = taylor.coeff(order + j);
  const ComplexPolynomial window{std::move(wcoeffs)};
  const Complex limit = taylor.coeff(order);  // phi^(n)(0)/n!

  ComplexPolynomial subtracted;  // T_{n-1} phi
  {
    std::vector<Complex> tcoeffs(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k)
      tcoeffs[static_cast<std::size_t>(k)] = taylor.coeff(k);
    subtracted = ComplexPolynomial{std::move(tcoeffs)};
  }

  const Integrand g{[&phi, &window, &subtracted, order](double x) {
                      if (std::abs(x) < kWindowRadius)
                        return window.eval(Complex{x, 0.0});
                      return (phi.eval(x) -
                              subtracted.eval(Complex{x, 0.0})) /
                             std::pow(x, order);
                    },
                    {{0.0, limit}}};
  return integrate_symmetric_limit(g, tol, budget, ladder_base(phi));
}

PairingResult pv_pair_impl(int order, const TestFunction& phi, PvRoute route,
                           double tol, EvalBudget& budget) {
  switch (route) {
    case PvRoute::Definition:
      return route_definition(order, phi, tol, budget);
    case PvRoute::OddReflection:
      return route_odd_reflection(phi, tol, budget);
    case PvRoute::Centered:
      return route_subtracted(1, phi, tol, budget);
    case PvRoute::TaylorSubtraction:
      return route_subtracted(order, phi, tol, budget);
    case PvRoute::DerivativeRecursion: {
      PairingResult r = pv_pair(1, phi.derivative(order - 1),
                                PvRoute::OddReflection, tol, budget);
      const double scale = factorial(order - 1);
      r.value /= scale;
      r.error_estimate /= scale;
      return r;
    }
  }
  throw InvalidRoute("unknown p.v. route");
}

}  // namespace

double h_eval(double x) {
  if (x == 0.0) return 0.0;
  return x * std::log(std::abs(x)) - x;
}

PairingResult pv_pair(int order, const TestFunction& phi, PvRoute route,
                      double tol, EvalBudget& budget) {
  if (order < 1 || order > kPvMaxOrder)
    throw InvalidOrder("p.v. order must be in [1, " +
                       std::to_string(kPvMaxOrder) + "]");
  if (order != 1 &&
      (route == PvRoute::OddReflection || route == PvRoute::Centered))
    throw InvalidRoute("route is only defined for p.v. 1/x");
  if (!(tol > 0.0)) throw InvalidTolerance("pairing tolerance must be > 0");
  if (phi.poly().is_zero()) return {};

  const auto [unit, scale] = normalize(phi);
  PairingResult r = pv_pair_impl(order, unit, route, tol, budget);
  r.value *= scale;
  r.error_estimate *= std::abs(scale);
  r.evaluations = budget.used();
  return r;
}

PairingResult pv_pair(int order, const TestFunction& phi, PvRoute route,
                      double tol) {
  EvalBudget budget;
  return pv_pair(order, phi, route, tol, budget);
}

PvRoute pv_default_route(int order) {
  return order == 1 ? PvRoute::OddReflection : PvRoute::DerivativeRecursion;
}

Distribution pv_distribution(int order) { return Distribution::pv(order); }

}  // namespace distpair
