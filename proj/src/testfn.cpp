#include "distpair/testfn.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace distpair {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Upper bound for integral_S^inf t^k exp(-a t^2) dt, k >= 0, S > 0.
// Substituting u = t^2 gives (1/2) integral u^{(k-1)/2} exp(-a u) du; for
// odd k the integrand is a polynomial in u and the bound is exact, for even
// k the extra u^{-1/2} <= 1/S. Closed form via the finite exponential sum.
double gaussian_moment_tail(int k, double a, double s) {
  const int m = (k % 2 == 1) ? (k - 1) / 2 : k / 2;
  const double as2 = a * s * s;
  // sum_{j=0}^{m} exp(-a S^2) (a S^2)^j / j!, accumulated without overflow.
  double term = std::exp(-as2);
  double sum = term;
  for (int j = 1; j <= m; ++j) {
    term *= as2 / j;
    sum += term;
  }
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;
  double bound = 0.5 * fact * std::pow(a, -(m + 1)) * sum;
  if (k % 2 == 0) bound /= s;
  return bound;
}

}  // namespace

TestFunction::TestFunction(ComplexPolynomial poly, double width, double center,
                           double modulation)
    : poly_(std::move(poly)),
      width_(width),
      center_(center),
      modulation_(modulation) {
  if (!(width_ > 0.0))
    throw InvalidInput("test-function width must be strictly positive");
}

Complex TestFunction::eval(double x) const {
  const double dx = x - center_;
  return poly_.eval(Complex{x, 0.0}) *
         std::polar(std::exp(-width_ * dx * dx), modulation_ * x);
}

TestFunction TestFunction::derivative(int order) const {
  if (order < 0) throw InvalidInput("derivative order must be nonnegative");
  // (p * env)' = [p' + p * (i*omega - 2a(x - mu))] * env.
  const ComplexPolynomial lin{Complex{2.0 * width_ * center_, modulation_},
                              Complex{-2.0 * width_, 0.0}};
  ComplexPolynomial p = poly_;
  for (int k = 0; k < order; ++k) p = p.derivative() + p * lin;
  return TestFunction(p, width_, center_, modulation_);
}

ComplexPolynomial TestFunction::taylor(int order) const {
  if (order < 0) throw InvalidInput("taylor order must be nonnegative");
  if (order > kDegreeCap)
    throw DegreeCapExceeded("taylor order exceeds degree cap");
  const ComplexPolynomial lin{Complex{2.0 * width_ * center_, modulation_},
                              Complex{-2.0 * width_, 0.0}};
  const double env0 = std::exp(-width_ * center_ * center_);
  std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1);
  ComplexPolynomial p = poly_;
  double kfact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      p = p.derivative() + p * lin;
      kfact *= k;
    }
    // phi^(k)(0) = p_k(0) * exp(-a mu^2) (the modulation factor is 1 at 0).
    coeffs[static_cast<std::size_t>(k)] = p.eval(Complex{}) * env0 / kfact;
  }
  return ComplexPolynomial(std::move(coeffs));
}

TestFunction TestFunction::fourier() const {
  // With q(y) = p(y + mu) and the base rule F[exp(-a y^2)](x) =
  // sqrt(pi/a) exp(-x^2/(4a)), repeated use of F[y g] = i (F g)' gives
  //   F[q(y) exp(-a y^2)](x) = sqrt(pi/a) s(x) exp(-x^2/(4a)),
  //   s = sum_k q_k i^k r_k,  r_0 = 1,  r_{k+1} = r_k' - x/(2a) r_k.
  // The shift rule turns the center into modulation and the modulation rule
  // turns omega into the new center:
  //   F phi(x) = e^{i omega mu} e^{-i mu x} sqrt(pi/a) s(x-omega)
  //              exp(-(x-omega)^2/(4a)).
  const ComplexPolynomial q = poly_.shifted(Complex{-center_, 0.0});
  const ComplexPolynomial lin{Complex{}, Complex{-1.0 / (2.0 * width_), 0.0}};
  ComplexPolynomial r{Complex{1.0, 0.0}};
  ComplexPolynomial s;
  Complex ipow{1.0, 0.0};
  for (int k = 0; k <= q.degree(); ++k) {
    s = s + (q.coeff(k) * ipow) * r;
    r = r.derivative() + r * lin;
    ipow *= Complex{0.0, 1.0};
  }
  const Complex amp = std::polar(std::sqrt(kPi / width_),
                                 modulation_ * center_);
  ComplexPolynomial out = amp * s.shifted(Complex{modulation_, 0.0});
  return TestFunction(std::move(out), 1.0 / (4.0 * width_), modulation_,
                      -center_);
}

namespace {

// Weight terms (c_j, p_j) bounding |f(x)| <= sum_j c_j |x|^p_j.
using WeightTerms = std::vector<std::pair<double, int>>;

// Scan half-integer distances S from the center until the analytic bound on
// integral_{|t|>S} |f(t+mu)| |p(t+mu)| e^{-a t^2} dt drops to tol, with
// |p(t+mu)| <= sum_k |P_k| |t|^k for P = p(. + mu). First-accept scanning
// makes the radius monotone in tol even where the bound itself is not.
double tail_radius_scan(const ComplexPolynomial& poly, double width,
                        double center, const WeightTerms& weight, double tol,
                        double* tail_bound) {
  const ComplexPolynomial shifted = poly.shifted(Complex{-center, 0.0});
  const double amu = std::abs(center);
  for (double s = 0.5; s <= 512.0; s += 0.5) {
    double bound = 0.0;
    for (int k = 0; k <= shifted.degree(); ++k) {
      const double ck = std::abs(shifted.coeff(k));
      if (ck == 0.0) continue;
      for (const auto& [cw, pw] : weight)
        bound += ck * cw * gaussian_moment_tail(k + pw, width, s);
    }
    bound *= 2.0;  // both tails
    if (bound <= tol) {
      if (tail_bound) *tail_bound = bound;
      return s + amu;
    }
  }
  throw Error("tail radius search failed to reach the requested tolerance");
}

}  // namespace

double TestFunction::tail_radius(double tol) const {
  if (!(tol > 0.0)) throw InvalidTolerance("tail radius needs tol > 0");
  return tail_radius_scan(poly_, width_, center_, {{1.0, 0}}, tol, nullptr);
}

double TestFunction::weighted_tail_radius(double scale, int growth, double tol,
                                          double* tail_bound) const {
  if (!(tol > 0.0)) throw InvalidTolerance("tail radius needs tol > 0");
  if (growth < 0 || scale < 0.0)
    throw InvalidInput("invalid growth bound for tail radius");
  // |f(x)| <= scale (1 + |x|^g) with |t + mu|^g expanded binomially in |t|.
  WeightTerms weight{{scale, 0}};
  const double amu = std::abs(center_);
  double binom = 1.0;
  for (int j = 0; j <= growth; ++j) {
    weight.emplace_back(scale * binom * std::pow(amu, growth - j), j);
    binom = binom * (growth - j) / (j + 1);
  }
  return tail_radius_scan(poly_, width_, center_, weight, tol, tail_bound);
}

TestFunction TestFunction::reflected() const {
  std::vector<Complex> flipped(poly_.coeffs());
  for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
  return TestFunction(ComplexPolynomial(std::move(flipped)), width_, -center_,
                      -modulation_);
}

TestFunction TestFunction::scaled(Complex c) const {
  return TestFunction(c * poly_, width_, center_, modulation_);
}

TestFunction TestFunction::with_center(double mu) const {
  return TestFunction(poly_, width_, mu, modulation_);
}

TestFunction TestFunction::with_modulation(double omega) const {
  return TestFunction(poly_, width_, center_, omega);
}

TestFunction gauss() { return {{Complex{1.0, 0.0}}, 1.0, 0.0, 0.0}; }

TestFunction xgauss() {
  return {{Complex{}, Complex{1.0, 0.0}}, 1.0, 0.0, 0.0};
}

TestFunction gauss_at(double mu) {
  return {{Complex{1.0, 0.0}}, 1.0, mu, 0.0};
}

TestFunction x2gauss() {
  return {{Complex{}, Complex{}, Complex{1.0, 0.0}}, 0.5, 0.0, 0.0};
}

Corpus corpus_generate(std::uint64_t seed, std::size_t count,
                       const CorpusRanges& ranges) {
  Corpus corpus;
  corpus.seed = seed;
  corpus.members.reserve(count);

  const TestFunction canonical[4] = {gauss(), xgauss(), gauss_at(1.0),
                                     x2gauss()};
  for (std::size_t i = 0; i < count && i < 4; ++i)
    corpus.members.push_back(canonical[i]);

  std::mt19937_64 rng(seed);
  // Fixed 53-bit mapping; std::uniform_real_distribution is not portable
  // across standard libraries.
  auto u01 = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(); };

  for (std::size_t i = 4; i < count; ++i) {
    const int deg = std::min(
        ranges.max_degree,
        static_cast<int>(u01() * (ranges.max_degree + 1)));
    std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      c = Complex{re, im};
    }
    const double a = uniform(ranges.a_min, ranges.a_max);
    const double mu = uniform(ranges.mu_min, ranges.mu_max);
    const double omega = uniform(ranges.omega_min, ranges.omega_max);
    corpus.members.emplace_back(ComplexPolynomial(std::move(coeffs)), a, mu,
                                omega);
  }
  return corpus;
}

}  // namespace distpair
