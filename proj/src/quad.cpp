#include "distpair/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace distpair {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre (QUADPACK dqk15).
// Positive half of the abscissae; even-indexed entries are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo = 0.0, hi = 0.0;
  Complex value{};
  double err = 0.0;
  double abs_integral = 0.0;
  std::uint32_t index = 0;
};

// Worst error first; smaller insertion index breaks ties.
struct WorsePanel {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.index > b.index;
  }
};

Panel evaluate_panel(const Integrand& f, double lo, double hi,
                     std::uint32_t index, EvalBudget& budget) {
  budget.charge(15);
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);

  Complex kronrod{};
  Complex gauss{};
  double absval = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double xi = kXgk[j];
    Complex sum;
    if (j == 7) {
      sum = f(c);
    } else {
      sum = f(c - h * xi) + f(c + h * xi);
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
      throw InvalidInput("non-finite integrand value near x = " +
                         std::to_string(c));
    kronrod += kWgk[j] * sum;
    absval += kWgk[j] * std::abs(sum);
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }

  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = h * kronrod;
  p.err = std::abs(h * (kronrod - gauss));
  p.abs_integral = h * absval;
  p.index = index;
  return p;
}

// Rounding floor for the error estimate: the summed panel values cannot be
// trusted below a few eps of the accumulated |f| mass.
double noise_floor(double abs_integral) {
  return 8.0 * std::numeric_limits<double>::epsilon() * abs_integral;
}

bool splittable(const Panel& p) {
  const double scale = std::max({std::abs(p.lo), std::abs(p.hi), 1.0});
  return (p.hi - p.lo) > 16.0 * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

void EvalBudget::charge(std::uint64_t n) {
  used_ += n;
  if (used_ > cap_)
    throw BudgetExhausted("work budget of " + std::to_string(cap_) +
                          " evaluations exhausted");
}

PairingResult integrate_interval(const Integrand& f, double lo, double hi,
                                 double tol, EvalBudget& budget) {
  if (!(tol > 0.0)) throw InvalidTolerance("quadrature tolerance must be > 0");
  if (lo > hi) throw InvalidInput("integration bounds out of order");
  if (lo == hi) return {};

  std::uint32_t next_index = 0;
  std::priority_queue<Panel, std::vector<Panel>, WorsePanel> active;
  std::vector<Panel> done;  // panels too narrow to split further

  active.push(evaluate_panel(f, lo, hi, next_index++, budget));
  double total_err = active.top().err;
  double total_abs = active.top().abs_integral;

  while (total_err > tol && total_err > noise_floor(total_abs) &&
         !active.empty()) {
    Panel worst = active.top();
    active.pop();
    if (!splittable(worst)) {
      done.push_back(worst);
      continue;
    }
    total_err -= worst.err;
    total_abs -= worst.abs_integral;
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = evaluate_panel(f, worst.lo, mid, next_index++, budget);
    Panel right = evaluate_panel(f, mid, worst.hi, next_index++, budget);
    total_err += left.err + right.err;
    total_abs += left.abs_integral + right.abs_integral;
    active.push(left);
    active.push(right);
  }

  while (!active.empty()) {
    done.push_back(active.top());
    active.pop();
  }
  // Deterministic accumulation in spatial order.
  std::sort(done.begin(), done.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  PairingResult r;
  double err = 0.0;
  double absint = 0.0;
  for (const Panel& p : done) {
    r.value += p.value;
    err += p.err;
    absint += p.abs_integral;
  }
  r.error_estimate = std::max(err, noise_floor(absint));
  r.evaluations = budget.used();
  return r;
}

PairingResult integrate_interval(const Integrand& f, double lo, double hi,
                                 double tol) {
  EvalBudget budget;
  auto r = integrate_interval(f, lo, hi, tol, budget);
  r.evaluations = budget.used();
  return r;
}

PairingResult integrate_line(const Integrand& f, double radius,
                             double tail_bound, double tol,
                             EvalBudget& budget) {
  if (!(tol > 0.0)) throw InvalidTolerance("line tolerance must be > 0");
  if (!(radius > 0.0)) throw InvalidInput("line radius must be > 0");
  if (tail_bound < 0.0) throw InvalidInput("tail bound must be nonnegative");
  const double eff = std::max(tol - tail_bound, 0.5 * tol);
  PairingResult r = integrate_interval(f, -radius, radius, eff, budget);
  r.error_estimate += tail_bound;
  return r;
}

PairingResult integrate_line(const Integrand& f, double radius,
                             double tail_bound, double tol) {
  EvalBudget budget;
  auto r = integrate_line(f, radius, tail_bound, tol, budget);
  r.evaluations = budget.used();
  return r;
}

PairingResult integrate_symmetric_limit(const Integrand& f, double tol,
                                        EvalBudget& budget,
                                        double base_radius) {
  if (!(tol > 0.0))
    throw InvalidTolerance("symmetric-limit tolerance must be > 0");
  double base = 8.0;
  while (base < std::min(base_radius, 1024.0)) base *= 2.0;

  constexpr int kLevels = 5;
  const double inner_tol = std::max(tol / 16.0, 1e-13);
  double truncations[kLevels];
  double inner_err = 0.0;
  Complex table[kLevels][kLevels];
  for (int i = 0; i < kLevels; ++i) {
    truncations[i] = base * std::ldexp(1.0, i);
    const PairingResult ri =
        integrate_interval(f, -truncations[i], truncations[i], inner_tol,
                           budget);
    table[i][0] = ri.value;
    inner_err += ri.error_estimate;
  }

  // The truncation error of I(M) expands in odd powers 1/M, 1/M^3, ...
  // (even powers cancel between the two sides); eliminate them in turn.
  for (int j = 1; j < kLevels; ++j) {
    const double factor = std::ldexp(1.0, 2 * j - 1);  // 2^(2j-1)
    for (int i = j; i < kLevels; ++i)
      table[i][j] =
          (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
  }

  double diffs[kLevels - 1];
  for (int i = 1; i < kLevels; ++i)
    diffs[i - 1] = std::abs(table[i][i] - table[i - 1][i - 1]);
  const Complex value = table[kLevels - 1][kLevels - 1];
  const double last = diffs[kLevels - 2];
  const double slack =
      inner_err + 16.0 * std::numeric_limits<double>::epsilon() *
                      (1.0 + std::abs(value));
  const bool decreasing =
      last <= std::max(diffs[0], diffs[1]) + slack;
  if (!(last <= tol) || !decreasing)
    throw NoConvergence(
        "symmetric truncation did not stabilize: last difference " +
        std::to_string(last));

  PairingResult r;
  r.value = value;
  r.error_estimate = last + inner_err;
  r.evaluations = budget.used();
  return r;
}

PairingResult integrate_symmetric_limit(const Integrand& f, double tol,
                                        double base_radius) {
  EvalBudget budget;
  auto r = integrate_symmetric_limit(f, tol, budget, base_radius);
  r.evaluations = budget.used();
  return r;
}

}  // namespace distpair
