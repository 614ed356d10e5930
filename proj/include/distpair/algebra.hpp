#ifndef DISTPAIR_ALGEBRA_HPP
#define DISTPAIR_ALGEBRA_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "distpair/errors.hpp"

namespace distpair {

using Complex = std::complex<double>;

// Hard cap on polynomial degree. Differentiation and Fourier transforms of
// the test-function class raise the degree by at most one per step; the cap
// turns a runaway chain (and its silent cancellation loss) into an explicit
// DegreeCapExceeded.
inline constexpr int kDegreeCap = 64;

// A trailing coefficient counts as zero when its magnitude is at or below
// this absolute threshold (subnormal guard). Absolute rather than relative,
// so degrees are stable under scaling.
inline constexpr double kCoeffZeroTol = 1e-300;

// Dense complex polynomial, coefficient k multiplying x^k. The empty
// coefficient sequence is the zero polynomial. Trailing zeros are stripped
// after every operation; all values are immutable once built.
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  ComplexPolynomial(std::initializer_list<Complex> coeffs);
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  const std::vector<Complex>& coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of x^k, zero beyond the stored degree.
  Complex coeff(int k) const;

  // Horner evaluation.
  Complex eval(Complex x) const;

  ComplexPolynomial derivative() const;

  // q with q(x) = p(x - c), by binomial expansion.
  ComplexPolynomial shifted(Complex c) const;

  ComplexPolynomial operator-() const;

  friend ComplexPolynomial operator+(const ComplexPolynomial& p,
                                     const ComplexPolynomial& q);
  friend ComplexPolynomial operator-(const ComplexPolynomial& p,
                                     const ComplexPolynomial& q);
  // Coefficient convolution; throws DegreeCapExceeded when
  // deg p + deg q > kDegreeCap.
  friend ComplexPolynomial operator*(const ComplexPolynomial& p,
                                     const ComplexPolynomial& q);
  friend ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p);

  friend bool operator==(const ComplexPolynomial& p,
                         const ComplexPolynomial& q) {
    return p.c_ == q.c_;
  }

 private:
  void normalize();
  std::vector<Complex> c_;
};

}  // namespace distpair

#endif
