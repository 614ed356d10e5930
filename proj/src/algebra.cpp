#include "distpair/algebra.hpp"

#include <cmath>
#include <utility>

namespace distpair {

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : c_(coeffs) {
  normalize();
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : c_(std::move(coeffs)) {
  normalize();
}

void ComplexPolynomial::normalize() {
  while (!c_.empty() && std::abs(c_.back()) <= kCoeffZeroTol) c_.pop_back();
  if (degree() > kDegreeCap)
    throw DegreeCapExceeded("polynomial degree " + std::to_string(degree()) +
                            " exceeds cap " + std::to_string(kDegreeCap));
}

Complex ComplexPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

Complex ComplexPolynomial::eval(Complex x) const {
  Complex acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * c_[k];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::shifted(Complex c) const {
  // Horner in the linear factor (x - c): acc <- acc*(x - c) + p_k.
  ComplexPolynomial acc;
  const ComplexPolynomial lin{-c, Complex{1.0, 0.0}};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + ComplexPolynomial{*it};
  return acc;
}

ComplexPolynomial ComplexPolynomial::operator-() const {
  std::vector<Complex> r(c_);
  for (auto& v : r) v = -v;
  return ComplexPolynomial(std::move(r));
}

ComplexPolynomial operator+(const ComplexPolynomial& p,
                            const ComplexPolynomial& q) {
  std::vector<Complex> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    Complex v{};
    if (k < p.c_.size()) v += p.c_[k];
    if (k < q.c_.size()) v += q.c_[k];
    r[k] = v;
  }
  return ComplexPolynomial(std::move(r));
}

ComplexPolynomial operator-(const ComplexPolynomial& p,
                            const ComplexPolynomial& q) {
  return p + (-q);
}

ComplexPolynomial operator*(const ComplexPolynomial& p,
                            const ComplexPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.degree() + q.degree() > kDegreeCap)
    throw DegreeCapExceeded("product degree " +
                            std::to_string(p.degree() + q.degree()) +
                            " exceeds cap " + std::to_string(kDegreeCap));
  std::vector<Complex> r(p.c_.size() + q.c_.size() - 1, Complex{});
  for (std::size_t j = 0; j < p.c_.size(); ++j)
    for (std::size_t k = 0; k < q.c_.size(); ++k) r[j + k] += p.c_[j] * q.c_[k];
  return ComplexPolynomial(std::move(r));
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
  std::vector<Complex> r(p.c_);
  for (auto& v : r) v *= s;
  return ComplexPolynomial(std::move(r));
}

}  // namespace distpair
