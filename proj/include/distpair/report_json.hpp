#ifndef DISTPAIR_REPORT_JSON_HPP
#define DISTPAIR_REPORT_JSON_HPP

#include <string>

#include "distpair/verify.hpp"

namespace distpair {

// %.17g rendering used for every number in data outputs, so identical
// inputs serialize byte-identically.
std::string format_double(double v);

// Suite report with the fixed key order
//   {"seed", "tol", "corpus_size",
//    "checks": [{"name", "max_residual", "tolerance", "pass",
//                "residuals": [...], "wall_ms"}]}
// Only the wall_ms fields vary between identical runs.
std::string to_json(const SuiteReport& report);

// Copy with every wall_ms field zeroed, for byte comparisons.
std::string strip_wall_times(const std::string& json);

}  // namespace distpair

#endif
