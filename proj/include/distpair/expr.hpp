#ifndef DISTPAIR_EXPR_HPP
#define DISTPAIR_EXPR_HPP

#include <string>

#include "distpair/dist.hpp"
#include "distpair/testfn.hpp"

namespace distpair {

// Test-function grammar:
//   hg:poly=[c0,c1,...];a=<f>;mu=<f>;omega=<f>
// with coefficients written as `re` or `re+imi` (also `re-imi`), plus the
// canonical names gauss, xgauss, gauss@<f>, x2gauss.
// Throws ConfigError on malformed input.
TestFunction parse_test_function(const std::string& text);

// Distribution grammar:
//   H | sgn | one | ramp | delta | h | pv:<n> | d(<expr>) | F(<expr>)
//   | <scalar>*<expr> | <expr> + <expr> | <expr> - <expr> | (<expr>)
// Scalars are products of numbers and the literals pi and i.
// Throws ConfigError on malformed input.
Distribution parse_distribution(const std::string& text);

}  // namespace distpair

#endif
