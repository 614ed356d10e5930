#include "distpair/dist.hpp"

#include <algorithm>
#include <cmath>

#include "distpair/pv.hpp"

namespace distpair {

CslFunction::CslFunction(std::string name, std::function<Complex(double)> eval,
                         int growth_exponent, double growth_scale,
                         std::vector<double> breakpoints)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      growth_exponent_(growth_exponent),
      growth_scale_(growth_scale),
      breakpoints_(std::move(breakpoints)) {
  if (growth_exponent_ < 0 || !(growth_scale_ >= 0.0))
    throw InvalidInput("invalid CSL growth bound");
}

namespace csl {

CslFunction heaviside() {
  return {"H", [](double x) { return Complex{x >= 0.0 ? 1.0 : 0.0, 0.0}; }, 1,
          1.0, {0.0}};
}

CslFunction sign() {
  return {"sgn", [](double x) { return Complex{x >= 0.0 ? 1.0 : -1.0, 0.0}; },
          1, 1.0, {0.0}};
}

CslFunction one() {
  return {"one", [](double) { return Complex{1.0, 0.0}; }, 1, 1.0, {}};
}

CslFunction ramp() {
  return {"ramp", [](double x) { return Complex{x > 0.0 ? x : 0.0, 0.0}; }, 2,
          1.0, {0.0}};
}

CslFunction hfun() {
  return {"h", [](double x) { return Complex{h_eval(x), 0.0}; }, 2, 1.0,
          {0.0}};
}

}  // namespace csl

CslFunction csl_combine(
    const std::vector<std::pair<Complex, CslFunction>>& terms) {
  if (terms.empty()) throw InvalidInput("empty CSL combination");
  int growth = 0;
  double scale = 0.0;
  std::vector<double> breaks;
  std::string name;
  for (const auto& [weight, f] : terms) {
    growth = std::max(growth, f.growth_exponent());
    scale += std::abs(weight) * f.growth_scale();
    breaks.insert(breaks.end(), f.breakpoints().begin(),
                  f.breakpoints().end());
    if (!name.empty()) name += " + ";
    name += f.name();
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto copy = terms;
  return {std::move(name),
          [copy](double x) {
            Complex acc{};
            for (const auto& [weight, f] : copy) acc += weight * f(x);
            return acc;
          },
          growth, scale, std::move(breaks)};
}

bool csl_audit(const CslFunction& f) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = -100.0 + 0.2 * i;
    const double bound =
        f.growth_scale() *
        (1.0 + std::pow(std::abs(x), f.growth_exponent()));
    if (!(std::abs(f(x)) <= bound)) return false;
  }
  return true;
}

namespace {

DistNodePtr make_node(DistNode node) {
  if (node.depth > kDepthCap)
    throw DepthExceeded("distribution nesting exceeds depth " +
                        std::to_string(kDepthCap));
  return std::make_shared<const DistNode>(std::move(node));
}

}  // namespace

int Distribution::depth() const { return node_->depth; }

Distribution Distribution::regular(CslFunction f) {
  return Distribution(make_node({RegularNode{std::move(f)}, 1}));
}

Distribution Distribution::delta() {
  return Distribution(make_node({DeltaNode{}, 1}));
}

Distribution Distribution::pv(int order) {
  if (order < 1 || order > kPvMaxOrder)
    throw InvalidOrder("p.v. order must be in [1, " +
                       std::to_string(kPvMaxOrder) + "]");
  return Distribution(make_node({PvNode{order}, 1}));
}

Distribution Distribution::csl_rep(CslFunction f, int order) {
  if (order < 0) throw InvalidInput("CslRep order must be nonnegative");
  return Distribution(make_node({CslRepNode{std::move(f), order}, 1}));
}

Distribution derivative(const Distribution& t) {
  return Distribution(
      make_node({DerivativeNode{t.node_}, t.depth() + 1}));
}

Distribution fourier(const Distribution& t) {
  return Distribution(make_node({FourierNode{t.node_}, t.depth() + 1}));
}

Distribution combo(
    const std::vector<std::pair<Complex, Distribution>>& terms) {
  if (terms.empty()) throw InvalidInput("combo needs at least one term");
  ComboNode node;
  int depth = 0;
  for (const auto& [weight, t] : terms) {
    depth = std::max(depth, t.depth());
    node.terms.emplace_back(weight, t.node_);
  }
  return Distribution(make_node({std::move(node), depth + 1}));
}

namespace {

struct PairContext {
  double tol;
  EvalBudget& budget;
};

PairingResult pair_node(const DistNode& node, const TestFunction& phi,
                        PairContext& ctx);

// (-1)^order * integral f * phi^(order), split at the breakpoints of f.
PairingResult pair_csl(const CslFunction& f, int order,
                       const TestFunction& phi, PairContext& ctx) {
  const TestFunction psi = order > 0 ? phi.derivative(order) : phi;
  double tail = 0.0;
  const double radius = psi.weighted_tail_radius(
      f.growth_scale(), f.growth_exponent(), 0.5 * ctx.tol, &tail);

  std::vector<double> cuts{-radius};
  for (double b : f.breakpoints())
    if (b > -radius && b < radius) cuts.push_back(b);
  cuts.push_back(radius);
  std::sort(cuts.begin(), cuts.end());

  const Integrand g{[&f, &psi](double x) { return f(x) * psi.eval(x); }, {}};
  const double eff =
      std::max(ctx.tol - tail, 0.5 * ctx.tol) / (cuts.size() - 1);
  PairingResult r;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const PairingResult piece =
        integrate_interval(g, cuts[k], cuts[k + 1], eff, ctx.budget);
    r.value += piece.value;
    r.error_estimate += piece.error_estimate;
  }
  r.error_estimate += tail;
  if (order % 2 == 1) r.value = -r.value;
  return r;
}

PairingResult pair_node(const DistNode& node, const TestFunction& phi,
                        PairContext& ctx) {
  return std::visit(
      [&](const auto& n) -> PairingResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RegularNode>) {
          return pair_csl(n.f, 0, phi, ctx);
        } else if constexpr (std::is_same_v<T, DeltaNode>) {
          return {phi.eval(0.0), 0.0, 0};
        } else if constexpr (std::is_same_v<T, PvNode>) {
          return pv_pair(n.order, phi, pv_default_route(n.order), ctx.tol,
                         ctx.budget);
        } else if constexpr (std::is_same_v<T, CslRepNode>) {
          return pair_csl(n.f, n.order, phi, ctx);
        } else if constexpr (std::is_same_v<T, DerivativeNode>) {
          PairingResult r = pair_node(*n.inner, phi.derivative(1), ctx);
          r.value = -r.value;
          return r;
        } else if constexpr (std::is_same_v<T, FourierNode>) {
          return pair_node(*n.inner, phi.fourier(), ctx);
        } else {
          static_assert(std::is_same_v<T, ComboNode>);
          // Every term runs at the full tolerance so that the combination
          // is exactly the linear combination of the standalone pairings.
          PairingResult r;
          for (const auto& [weight, term] : n.terms) {
            const PairingResult piece = pair_node(*term, phi, ctx);
            r.value += weight * piece.value;
            r.error_estimate += std::abs(weight) * piece.error_estimate;
          }
          return r;
        }
      },
      node.v);
}

// Factor out the dominant polynomial coefficient. Pairing the normalized
// function and rescaling afterwards makes <T, c*phi> track c * <T, phi>
// through identical quadrature nodes.
std::pair<TestFunction, Complex> normalize(const TestFunction& phi) {
  const auto& c = phi.poly().coeffs();
  std::size_t argmax = 0;
  for (std::size_t k = 1; k < c.size(); ++k)
    if (std::abs(c[k]) > std::abs(c[argmax])) argmax = k;
  const Complex s = c[argmax];
  return {phi.scaled(Complex{1.0, 0.0} / s), s};
}

}  // namespace

PairingResult pair(const Distribution& t, const TestFunction& phi, double tol,
                   EvalBudget& budget) {
  if (!(tol > 0.0)) throw InvalidTolerance("pairing tolerance must be > 0");
  if (phi.poly().is_zero()) return {};
  const auto [unit, scale] = normalize(phi);
  PairContext ctx{tol, budget};
  PairingResult r = pair_node(t.node(), unit, ctx);
  r.value *= scale;
  r.error_estimate *= std::abs(scale);
  r.evaluations = budget.used();
  return r;
}

PairingResult pair(const Distribution& t, const TestFunction& phi,
                   double tol) {
  EvalBudget budget;
  return pair(t, phi, tol, budget);
}

}  // namespace distpair
