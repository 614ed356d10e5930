#ifndef DISTPAIR_ERRORS_HPP
#define DISTPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace distpair {

// Base class for every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polynomial operation would exceed kDegreeCap. Signals a runaway
// derivative / Fourier-transform chain rather than a recoverable state.
struct DegreeCapExceeded : Error {
  using Error::Error;
};

// A single pairing would exceed kWorkBudget evaluator calls. Signals a
// divergent or mis-specified integrand.
struct BudgetExhausted : Error {
  using Error::Error;
};

// Symmetric-truncation limit failed to stabilize.
struct NoConvergence : Error {
  using Error::Error;
};

// Distribution expression nesting exceeds the depth bound.
struct DepthExceeded : Error {
  using Error::Error;
};

struct InvalidTolerance : Error {
  using Error::Error;
};

// Principal-value route not valid for the requested order.
struct InvalidRoute : Error {
  using Error::Error;
};

// Principal-value order outside the supported range.
struct InvalidOrder : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// Bad CLI configuration (unknown suite, malformed expression, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace distpair

#endif
