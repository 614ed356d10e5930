#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "distpair/testfn.hpp"
#include "oracles.hpp"

using distpair::Complex;
using distpair::ComplexPolynomial;
using distpair::Corpus;
using distpair::TestFunction;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
const double kSqrtPi = std::sqrt(kPi);

// Small mixed corpus reused by the closure properties below.
Corpus small_corpus() { return distpair::corpus_generate(42, 12); }

}  // namespace

TEST_CASE("eval: canonical values") {
  CHECK(distpair::gauss().eval(0.0) == Complex{1.0, 0.0});
  CHECK(std::abs(distpair::gauss().eval(1.0) - Complex{std::exp(-1.0), 0.0}) <
        1e-16);
  const Complex v = distpair::xgauss().eval(-2.0);
  CHECK(std::abs(v - Complex{-2.0 * std::exp(-4.0), 0.0}) < 1e-16);
}

TEST_CASE("derivative: exact symbolic results") {
  // d/dx e^{-x^2} = -2x e^{-x^2}
  const TestFunction d1 = distpair::gauss().derivative();
  CHECK(d1.poly() == ComplexPolynomial{Complex{}, Complex{-2.0, 0.0}});

  // d^2/dx^2 (x e^{-x^2}) = (4x^3 - 6x) e^{-x^2}
  const TestFunction d2 = distpair::xgauss().derivative(2);
  CHECK(d2.poly() == ComplexPolynomial{Complex{}, Complex{-6.0, 0.0},
                                       Complex{}, Complex{4.0, 0.0}});

  // order 0 is the identity
  const TestFunction same = distpair::xgauss().derivative(0);
  CHECK(same.poly() == distpair::xgauss().poly());
}

TEST_CASE("derivative matches central differences on the corpus") {
  for (const TestFunction& phi : small_corpus().members) {
    const TestFunction dphi = phi.derivative();
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const Complex fd =
          oracle::central_diff([&phi](double t) { return phi.eval(t); }, x);
      CHECK(std::abs(dphi.eval(x) - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("taylor: exact low-order polynomials") {
  // e^{-x^2}: T_2 = 1 - x^2
  const ComplexPolynomial t2 = distpair::gauss().taylor(2);
  CHECK(std::abs(t2.coeff(0) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(t2.coeff(1)) < 1e-15);
  CHECK(std::abs(t2.coeff(2) - Complex{-1.0, 0.0}) < 1e-15);

  // x e^{-x^2}: T_1 = x
  const ComplexPolynomial t1 = distpair::xgauss().taylor(1);
  CHECK(std::abs(t1.coeff(0)) < 1e-15);
  CHECK(std::abs(t1.coeff(1) - Complex{1.0, 0.0}) < 1e-15);

  // order 0 is the constant phi(0)
  for (const TestFunction& phi : small_corpus().members) {
    const ComplexPolynomial t0 = phi.taylor(0);
    CHECK(std::abs(t0.eval(Complex{}) - phi.eval(0.0)) < 1e-15);
  }
}

TEST_CASE("taylor remainder bound on [-1, 1]") {
  for (const TestFunction& phi : small_corpus().members) {
    for (int n = 1; n <= 5; ++n) {
      const ComplexPolynomial t = phi.taylor(n - 1);
      const TestFunction dn = phi.derivative(n);
      double mn = 0.0;
      for (int j = 0; j <= 200; ++j)
        mn = std::max(mn, std::abs(dn.eval(-1.0 + 0.01 * j)));
      double fact = 1.0;
      for (int k = 2; k <= n; ++k) fact *= k;
      for (int j = 0; j <= 40; ++j) {
        const double x = -1.0 + 0.05 * j;
        const double lhs = std::abs(phi.eval(x) - t.eval(Complex{x, 0.0}));
        const double bound = mn * std::pow(std::abs(x), n) / fact;
        CHECK(lhs <= 1.01 * bound + 1e-14);
      }
    }
  }
}

TEST_CASE("fourier: closed forms for the anchors") {
  // F[e^{-x^2}] = sqrt(pi) e^{-x^2/4}
  const TestFunction f1 = distpair::gauss().fourier();
  CHECK(f1.width() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(f1.poly().coeff(0) - Complex{kSqrtPi, 0.0}) < 1e-14);
  CHECK(f1.poly().degree() == 0);

  // F[x e^{-x^2}] = -(i sqrt(pi)/2) x e^{-x^2/4}
  const TestFunction f2 = distpair::xgauss().fourier();
  CHECK(std::abs(f2.poly().coeff(0)) < 1e-15);
  CHECK(std::abs(f2.poly().coeff(1) - Complex{0.0, -kSqrtPi / 2.0}) < 1e-14);

  // F[F[e^{-x^2}]] = 2 pi e^{-x^2}
  const TestFunction ff = f1.fourier();
  CHECK(ff.width() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(ff.poly().coeff(0) - Complex{2.0 * kPi, 0.0}) < 1e-13);
}

TEST_CASE("fourier matches the transform integral on the corpus") {
  for (const TestFunction& phi : small_corpus().members) {
    const TestFunction fphi = phi.fourier();
    const double radius = phi.tail_radius(1e-13);
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const Complex direct = oracle::simpson(
          [&phi, x](double y) {
            return std::polar(1.0, -x * y) * phi.eval(y);
          },
          -radius, radius, 60000);
      CHECK(std::abs(fphi.eval(x) - direct) <= 1e-8);
    }
  }
}

TEST_CASE("fourier inversion: F F phi = 2 pi phi(-x)") {
  for (const TestFunction& phi : small_corpus().members) {
    const TestFunction ff = phi.fourier().fourier();
    for (int j = 0; j <= 10; ++j) {
      const double x = -2.5 + 0.5 * j;
      const Complex expect = 2.0 * kPi * phi.eval(-x);
      CHECK(std::abs(ff.eval(x) - expect) <=
            1e-9 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("tail radius: gauss anchor and monotonicity") {
  const TestFunction g = distpair::gauss();
  const double r16 = g.tail_radius(1e-16);
  // Smallest half-integer with the one-term bound e^{-R^2}/R <= 1e-16.
  CHECK(r16 == doctest::Approx(6.0).epsilon(1e-12));
  // The certified bound really covers the tail integral (erfc oracle).
  const double tail = kSqrtPi * std::erfc(r16);
  CHECK(tail <= 1e-16);

  const double r4 = g.tail_radius(1e-4);
  CHECK(r4 < r16);
  for (const TestFunction& phi : small_corpus().members) {
    CHECK(phi.tail_radius(1e-6) <= phi.tail_radius(1e-12));
  }
}

TEST_CASE("tail radius: scaling moves tol linearly") {
  for (const TestFunction& phi : small_corpus().members) {
    const TestFunction big = phi.scaled(Complex{10.0, 0.0});
    CHECK(big.tail_radius(1e-8) == phi.tail_radius(1e-9));
  }
  CHECK_THROWS_AS(distpair::gauss().tail_radius(0.0),
                  distpair::InvalidTolerance);
}

TEST_CASE("rapid decrease at the weighted tail radius") {
  const ComplexPolynomial monomials[5] = {
      ComplexPolynomial{Complex{1.0, 0.0}},
      ComplexPolynomial{Complex{}, Complex{1.0, 0.0}},
      ComplexPolynomial{Complex{}, Complex{}, Complex{1.0, 0.0}},
      ComplexPolynomial{Complex{}, Complex{}, Complex{}, Complex{1.0, 0.0}},
      ComplexPolynomial{Complex{}, Complex{}, Complex{}, Complex{},
                        Complex{1.0, 0.0}}};
  for (const TestFunction& phi : small_corpus().members) {
    for (int m = 0; m <= 4; ++m) {
      const TestFunction dm = phi.derivative(m);
      for (int k = 0; k <= 4; ++k) {
        const TestFunction weighted{monomials[k] * dm.poly(), dm.width(),
                                    dm.center(), dm.modulation()};
        if (weighted.poly().is_zero()) continue;
        const double r = weighted.tail_radius(1e-16);
        CHECK(std::abs(weighted.eval(r)) <= 1e-12);
        CHECK(std::abs(weighted.eval(-r)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("corpus: canonical anchors, determinism, seed sensitivity") {
  const Corpus empty = distpair::corpus_generate(42, 0);
  CHECK(empty.members.empty());

  const Corpus a = distpair::corpus_generate(42, 10);
  const Corpus b = distpair::corpus_generate(42, 10);
  REQUIRE(a.members.size() == 10);
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    CHECK(a.members[i].poly() == b.members[i].poly());
    CHECK(a.members[i].width() == b.members[i].width());
    CHECK(a.members[i].center() == b.members[i].center());
    CHECK(a.members[i].modulation() == b.members[i].modulation());
  }

  // anchors
  CHECK(a.members[0].poly() == distpair::gauss().poly());
  CHECK(a.members[1].poly() == distpair::xgauss().poly());
  CHECK(a.members[2].center() == 1.0);
  CHECK(a.members[3].width() == 0.5);

  const Corpus c = distpair::corpus_generate(43, 10);
  bool differs = false;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (!(a.members[i].poly() == c.members[i].poly()) ||
        a.members[i].width() != c.members[i].width() ||
        a.members[i].center() != c.members[i].center() ||
        a.members[i].modulation() != c.members[i].modulation())
      differs = true;
  }
  CHECK(differs);

  // draw ranges
  for (std::size_t i = 4; i < a.members.size(); ++i) {
    CHECK(a.members[i].poly().degree() <= 4);
    CHECK(a.members[i].width() >= 0.2);
    CHECK(a.members[i].width() <= 2.0);
    CHECK(std::abs(a.members[i].center()) <= 2.0);
    CHECK(std::abs(a.members[i].modulation()) <= 3.0);
  }
}

TEST_CASE("width must be positive") {
  CHECK_THROWS_AS(TestFunction(ComplexPolynomial{Complex{1.0, 0.0}}, 0.0, 0.0,
                               0.0),
                  distpair::InvalidInput);
}
