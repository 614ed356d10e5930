#ifndef DISTPAIR_TESTFN_HPP
#define DISTPAIR_TESTFN_HPP

#include <cstdint>
#include <vector>

#include "distpair/algebra.hpp"

namespace distpair {

// Schwartz test function of the form
//
//     phi(x) = p(x) * exp(i*omega*x) * exp(-a*(x - mu)^2),     a > 0,
//
// with complex polynomial p. The class is closed under differentiation and
// under the Fourier transform F phi(x) = integral exp(-i*x*y) phi(y) dy,
// both computed exactly on the (p, a, mu, omega) data, so derivatives and
// transforms never go through numerical differentiation or quadrature.
class TestFunction {
 public:
  TestFunction(ComplexPolynomial poly, double width, double center,
               double modulation);

  const ComplexPolynomial& poly() const { return poly_; }
  double width() const { return width_; }
  double center() const { return center_; }
  double modulation() const { return modulation_; }

  Complex eval(double x) const;

  // Exact k-th derivative via the product rule; stays in the class.
  TestFunction derivative(int order = 1) const;

  // Taylor polynomial at 0 of the given order; coefficient k is
  // phi^(k)(0)/k! from exact derivatives, never finite differences.
  ComplexPolynomial taylor(int order) const;

  // Closed-form Fourier transform; stays in the class (the polynomial
  // degree is preserved).
  TestFunction fourier() const;

  // Smallest half-integer radius R on the scan grid such that the analytic
  // bound on integral_{|x - mu| > R - |mu|} |phi| is at most tol.
  // Monotone: a larger tol never yields a larger R.
  double tail_radius(double tol) const;

  // As tail_radius, but bounds integral |f * phi| for a slowly growing
  // weight with |f(x)| <= scale * (1 + |x|^growth). Returns the radius and
  // stores the certified bound in *tail_bound.
  double weighted_tail_radius(double scale, int growth, double tol,
                              double* tail_bound = nullptr) const;

  // x -> phi(-x); stays in the class.
  TestFunction reflected() const;

  TestFunction scaled(Complex c) const;
  TestFunction with_center(double mu) const;
  TestFunction with_modulation(double omega) const;

 private:
  ComplexPolynomial poly_;
  double width_;       // a
  double center_;      // mu
  double modulation_;  // omega
};

// The four canonical members used as acceptance anchors.
TestFunction gauss();                 // exp(-x^2)
TestFunction xgauss();                // x * exp(-x^2)
TestFunction gauss_at(double mu);     // exp(-(x-mu)^2)
TestFunction x2gauss();               // x^2 * exp(-x^2/2)

struct CorpusRanges {
  int max_degree = 4;
  double a_min = 0.2, a_max = 2.0;
  double mu_min = -2.0, mu_max = 2.0;
  double omega_min = -3.0, omega_max = 3.0;
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<TestFunction> members;
};

// Deterministic seeded corpus. Members 0..3 are the canonical anchors
// (when count >= 4); the rest draw a degree <= max_degree polynomial with
// coefficients from [-1,1]^2 and (a, mu, omega) from the stated ranges.
// Regeneration from the same seed is bit-identical.
Corpus corpus_generate(std::uint64_t seed, std::size_t count,
                       const CorpusRanges& ranges = {});

}  // namespace distpair

#endif
