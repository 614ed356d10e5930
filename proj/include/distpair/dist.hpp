#ifndef DISTPAIR_DIST_HPP
#define DISTPAIR_DIST_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "distpair/quad.hpp"
#include "distpair/testfn.hpp"

namespace distpair {

// Maximum nesting depth of distribution expressions (cycle guard).
inline constexpr int kDepthCap = 16;

// Continuous, slowly growing function: |f(x)| <= scale * (1 + |x|^growth)
// and f(x)/x^growth -> 0. Breakpoints mark the finitely many kinks or jumps
// the quadrature should split at.
class CslFunction {
 public:
  CslFunction(std::string name, std::function<Complex(double)> eval,
              int growth_exponent, double growth_scale,
              std::vector<double> breakpoints);

  Complex operator()(double x) const { return eval_(x); }
  const std::string& name() const { return name_; }
  int growth_exponent() const { return growth_exponent_; }
  double growth_scale() const { return growth_scale_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

 private:
  std::string name_;
  std::function<Complex(double)> eval_;
  int growth_exponent_;
  double growth_scale_;
  std::vector<double> breakpoints_;
};

namespace csl {
CslFunction heaviside();  // 1 for x >= 0, else 0
CslFunction sign();       // 1 for x >= 0, else -1
CslFunction one();
CslFunction ramp();       // max(x, 0)
CslFunction hfun();       // x ln|x| - x, value 0 at 0
}  // namespace csl

// Complex-linear combination of CSL functions, itself CSL.
CslFunction csl_combine(
    const std::vector<std::pair<Complex, CslFunction>>& terms);

// True iff |f(x)| <= scale * (1 + |x|^growth) holds on the 1001-point audit
// grid over [-100, 100].
bool csl_audit(const CslFunction& f);

struct DistNode;
using DistNodePtr = std::shared_ptr<const DistNode>;

// Tempered distribution as an immutable expression tree. Pairings follow
// the variant:
//   Regular(f)     integral f * phi
//   Delta          phi(0)
//   Pv(n)          principal value of 1/x^n (see pv module)
//   CslRep(f, n)   (-1)^n integral f * phi^(n)
//   Derivative(T)  -<T, phi'>
//   Fourier(T)     <T, F phi>
//   Combo(terms)   complex-linear combination
class Distribution {
 public:
  static Distribution regular(CslFunction f);
  static Distribution delta();
  static Distribution pv(int order);  // 1 <= order <= kPvMaxOrder
  static Distribution csl_rep(CslFunction f, int order);

  const DistNode& node() const { return *node_; }
  int depth() const;

 private:
  explicit Distribution(DistNodePtr node) : node_(std::move(node)) {}
  friend Distribution derivative(const Distribution& t);
  friend Distribution fourier(const Distribution& t);
  friend Distribution combo(
      const std::vector<std::pair<Complex, Distribution>>& terms);

  DistNodePtr node_;
};

struct RegularNode {
  CslFunction f;
};
struct DeltaNode {};
struct PvNode {
  int order;
};
struct CslRepNode {
  CslFunction f;
  int order;
};
struct DerivativeNode {
  DistNodePtr inner;
};
struct FourierNode {
  DistNodePtr inner;
};
struct ComboNode {
  std::vector<std::pair<Complex, DistNodePtr>> terms;
};

struct DistNode {
  std::variant<RegularNode, DeltaNode, PvNode, CslRepNode, DerivativeNode,
               FourierNode, ComboNode>
      v;
  int depth;
};

// Distributional derivative: <T', phi> = -<T, phi'>.
Distribution derivative(const Distribution& t);

// Distributional Fourier transform: <F T, phi> = <T, F phi>.
Distribution fourier(const Distribution& t);

// Non-empty complex-linear combination.
Distribution combo(const std::vector<std::pair<Complex, Distribution>>& terms);

// Evaluate <T, phi> to absolute tolerance tol (relative to the dominant
// polynomial coefficient of phi, which is factored out so that pairings are
// exactly complex-linear in phi).
PairingResult pair(const Distribution& t, const TestFunction& phi, double tol);
PairingResult pair(const Distribution& t, const TestFunction& phi, double tol,
                   EvalBudget& budget);

}  // namespace distpair

#endif
