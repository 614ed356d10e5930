#ifndef DISTPAIR_PV_HPP
#define DISTPAIR_PV_HPP

#include "distpair/dist.hpp"
#include "distpair/quad.hpp"
#include "distpair/testfn.hpp"

namespace distpair {

// Largest supported principal-value order: factorial scaling and repeated
// differentiation degrade conditioning beyond this.
inline constexpr int kPvMaxOrder = 5;

// Evaluation routes for <p.v. 1/x^n, phi>. They agree mathematically;
// OddReflection and Centered exist only for n = 1.
//
//   Definition          (1/(n-1)!) integral h(x) phi^(n+1)(x) dx,
//                       h(x) = x ln|x| - x (absolutely convergent)
//   OddReflection       integral_0^inf (phi(x) - phi(-x))/x dx
//   Centered            sym-lim integral (phi(x) - phi(0))/x dx
//   TaylorSubtraction   sym-lim integral (phi(x) - T_{n-1}phi(x))/x^n dx
//   DerivativeRecursion (1/(n-1)!) <p.v. 1/x, phi^(n-1)> via OddReflection
enum class PvRoute {
  Definition,
  OddReflection,
  Centered,
  TaylorSubtraction,
  DerivativeRecursion,
};

// x ln|x| - x for x != 0, and 0 at x = 0.
double h_eval(double x);

PairingResult pv_pair(int order, const TestFunction& phi, PvRoute route,
                      double tol);
PairingResult pv_pair(int order, const TestFunction& phi, PvRoute route,
                      double tol, EvalBudget& budget);

// Pv(order) distribution whose default pairing uses the absolutely
// convergent route (OddReflection for n = 1, DerivativeRecursion above).
Distribution pv_distribution(int order);

// The route the Pv variant dispatches to.
PvRoute pv_default_route(int order);

}  // namespace distpair

#endif
