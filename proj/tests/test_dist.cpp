#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "distpair/dist.hpp"
#include "distpair/pv.hpp"
#include "oracles.hpp"

using distpair::Complex;
using distpair::Distribution;
using distpair::PairingResult;
using distpair::TestFunction;

namespace {

constexpr double kPi = std::numbers::pi_v<double>;
const double kSqrtPi = std::sqrt(kPi);

distpair::Corpus small_corpus() { return distpair::corpus_generate(42, 10); }

}  // namespace

TEST_CASE("pair: regular distributions") {
  const Distribution h = Distribution::regular(distpair::csl::heaviside());
  const PairingResult a = pair(h, distpair::gauss(), 1e-10);
  CHECK(std::abs(a.value - Complex{kSqrtPi / 2.0, 0.0}) <=
        1e-10 + a.error_estimate);

  const Distribution sgn = Distribution::regular(distpair::csl::sign());
  const PairingResult b = pair(sgn, distpair::xgauss(), 1e-10);
  CHECK(std::abs(b.value - Complex{1.0, 0.0}) <= 1e-10 + b.error_estimate);
}

TEST_CASE("pair: delta is exact") {
  const Distribution d = Distribution::delta();
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult r = pair(d, phi, 1e-12);
    CHECK(std::abs(r.value - phi.eval(0.0)) <= 1e-15 * (1.0 + std::abs(r.value)));
    CHECK(r.error_estimate == 0.0);
  }
}

TEST_CASE("derivative: jump at 0 produces phi(0)") {
  const Distribution dh =
      derivative(Distribution::regular(distpair::csl::heaviside()));
  const PairingResult r = pair(dh, distpair::gauss_at(1.0), 1e-10);
  CHECK(std::abs(r.value - Complex{std::exp(-1.0), 0.0}) <=
        1e-9 + r.error_estimate);
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult m = pair(dh, phi, 1e-10);
    CHECK(std::abs(m.value - phi.eval(0.0)) <= 1e-9 + m.error_estimate);
  }

  const Distribution done = derivative(Distribution::regular(
      distpair::csl::one()));
  const PairingResult z = pair(done, distpair::gauss(), 1e-10);
  CHECK(std::abs(z.value) <= 1e-10 + z.error_estimate);
}

TEST_CASE("derivative: ramp'' acts like delta") {
  const Distribution ddr = derivative(
      derivative(Distribution::regular(distpair::csl::ramp())));
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult r = pair(ddr, phi, 1e-10);
    // independent oracle: integral ramp * phi'' by Simpson
    const TestFunction d2phi = phi.derivative(2);
    const double radius = phi.tail_radius(1e-14);
    const Complex direct = oracle::simpson(
        [&](double x) { return x > 0 ? x * d2phi.eval(x) : Complex{}; }, 0.0,
        radius, 80000);
    CHECK(std::abs(r.value - direct) <= 1e-7);
    CHECK(std::abs(r.value - phi.eval(0.0)) <= 1e-9 + r.error_estimate);
  }
}

TEST_CASE("fourier: F(1), F(delta), parity of F(sgn)") {
  const PairingResult f1 = pair(
      fourier(Distribution::regular(distpair::csl::one())), distpair::gauss(),
      1e-10);
  CHECK(std::abs(f1.value - Complex{2.0 * kPi, 0.0}) <=
        1e-9 + f1.error_estimate);

  const PairingResult fd =
      pair(fourier(Distribution::delta()), distpair::gauss(), 1e-10);
  CHECK(std::abs(fd.value - Complex{kSqrtPi, 0.0}) <=
        1e-10 + fd.error_estimate);

  const PairingResult fs = pair(
      fourier(Distribution::regular(distpair::csl::sign())), distpair::gauss(),
      1e-10);
  CHECK(std::abs(fs.value) <= 1e-10 + fs.error_estimate);
}

TEST_CASE("combo: H = (1 + sgn)/2 and degenerate forms") {
  const Distribution half_form =
      distpair::combo({{Complex{0.5, 0.0}, Distribution::regular(distpair::csl::one())},
             {Complex{0.5, 0.0},
              Distribution::regular(distpair::csl::sign())}});
  const Distribution h = Distribution::regular(distpair::csl::heaviside());
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult a = pair(half_form, phi, 1e-10);
    const PairingResult b = pair(h, phi, 1e-10);
    CHECK(std::abs(a.value - b.value) <=
          1e-9 + a.error_estimate + b.error_estimate);
  }

  const Distribution t = Distribution::pv(1);
  const PairingResult single =
      pair(distpair::combo({{Complex{1.0, 0.0}, t}}), distpair::xgauss(), 1e-10);
  const PairingResult direct = pair(t, distpair::xgauss(), 1e-10);
  CHECK(single.value == direct.value);

  const PairingResult cancel = pair(
      distpair::combo({{Complex{1.0, 0.0}, t}, {Complex{-1.0, 0.0}, t}}),
      distpair::xgauss(), 1e-10);
  CHECK(std::abs(cancel.value) <= 2e-10);
}

TEST_CASE("combo: exact complex linearity") {
  std::mt19937_64 rng(99);
  const Distribution s = Distribution::regular(distpair::csl::heaviside());
  const Distribution t = Distribution::pv(1);
  for (const TestFunction& phi : small_corpus().members) {
    const Complex alpha = oracle::random_complex(rng, -2.0, 2.0);
    const Complex beta = oracle::random_complex(rng, -2.0, 2.0);
    const PairingResult both =
        pair(distpair::combo({{alpha, s}, {beta, t}}), phi, 1e-9);
    const PairingResult ps = pair(s, phi, 1e-9);
    const PairingResult pt = pair(t, phi, 1e-9);
    const Complex expect = alpha * ps.value + beta * pt.value;
    CHECK(std::abs(both.value - expect) <=
          1e-12 * (1.0 + std::abs(alpha * ps.value) +
                   std::abs(beta * pt.value)));
  }
  CHECK_THROWS_AS(distpair::combo({}), distpair::InvalidInput);
}

TEST_CASE("pairing scales exactly linearly in phi") {
  std::mt19937_64 rng(7);
  const Distribution fh =
      fourier(Distribution::regular(distpair::csl::heaviside()));
  for (const TestFunction& phi : small_corpus().members) {
    double mag = oracle::uniform(rng, 0.5, 2.0);
    double arg = oracle::uniform(rng, 0.0, 2.0 * kPi);
    const Complex c = std::polar(mag, arg);
    const PairingResult base = pair(fh, phi, 1e-9);
    const PairingResult scaled = pair(fh, phi.scaled(c), 1e-9);
    CHECK(std::abs(scaled.value - c * base.value) <=
          1e-12 * (1.0 + std::abs(c * base.value)));
    CHECK(std::abs(scaled.error_estimate - mag * base.error_estimate) <=
          1e-12 * (1.0 + mag * base.error_estimate));
  }
}

TEST_CASE("csl_rep: ramp order 2 equals delta; remark combination is CSL") {
  const Distribution rep = Distribution::csl_rep(distpair::csl::ramp(), 2);
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult r = pair(rep, phi, 1e-10);
    CHECK(std::abs(r.value - phi.eval(0.0)) <= 1e-9 + r.error_estimate);
  }
}

TEST_CASE("fourier of integrable member matches classical transform") {
  // Treat a class member as a Regular distribution through its evaluator.
  const TestFunction member = distpair::x2gauss();
  const distpair::CslFunction as_csl{
      "member", [member](double x) { return member.eval(x); }, 1, 2.0, {}};
  const Distribution t = Distribution::regular(as_csl);
  for (const TestFunction& phi : small_corpus().members) {
    const PairingResult lhs = pair(fourier(t), phi, 1e-9);
    // classical route: integrate (F member) * phi with the closed form
    const TestFunction fm = member.fourier();
    const distpair::CslFunction fm_csl{
        "fmember", [fm](double x) { return fm.eval(x); }, 1, 10.0, {}};
    const PairingResult rhs =
        pair(Distribution::regular(fm_csl), phi, 1e-9);
    CHECK(std::abs(lhs.value - rhs.value) <=
          1e-8 + lhs.error_estimate + rhs.error_estimate);
  }
}

TEST_CASE("csl_audit") {
  CHECK(distpair::csl_audit(distpair::csl::hfun()));
  CHECK(distpair::csl_audit(distpair::csl::heaviside()));
  CHECK(distpair::csl_audit(distpair::csl::sign()));
  CHECK(distpair::csl_audit(distpair::csl::ramp()));
  for (int growth = 0; growth <= 8; ++growth) {
    const distpair::CslFunction expfn{
        "exp", [](double x) { return Complex{std::exp(x), 0.0}; }, growth,
        1.0, {}};
    CHECK_FALSE(distpair::csl_audit(expfn));
  }
}

TEST_CASE("depth cap") {
  Distribution t = Distribution::delta();
  for (int k = 0; k < 15; ++k) t = derivative(t);
  CHECK(t.depth() == 16);
  CHECK_THROWS_AS(derivative(t), distpair::DepthExceeded);
}

TEST_CASE("pair rejects bad tolerance") {
  CHECK_THROWS_AS(pair(Distribution::delta(), distpair::gauss(), 0.0),
                  distpair::InvalidTolerance);
}
