#include "distpair/report_json.hpp"

#include <cstdio>

namespace distpair {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_json(const SuiteReport& report) {
  std::string out;
  out.reserve(4096);
  out += "{\"seed\": ";
  out += std::to_string(report.seed);
  out += ", \"tol\": ";
  out += format_double(report.tol);
  out += ", \"corpus_size\": ";
  out += std::to_string(report.corpus_size);
  out += ", \"checks\": [";
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const CheckReport& c = report.checks[k];
    if (k) out += ", ";
    out += "{\"name\": \"";
    out += c.name;
    out += "\", \"max_residual\": ";
    out += format_double(c.max_residual);
    out += ", \"tolerance\": ";
    out += format_double(c.tolerance);
    out += ", \"pass\": ";
    out += c.pass ? "true" : "false";
    out += ", \"residuals\": [";
    for (std::size_t i = 0; i < c.residuals.size(); ++i) {
      if (i) out += ", ";
      out += format_double(c.residuals[i]);
    }
    out += "], \"wall_ms\": ";
    out += format_double(c.wall_ms);
    out += "}";
  }
  out += "]}";
  return out;
}

std::string strip_wall_times(const std::string& json) {
  std::string out;
  out.reserve(json.size());
  std::size_t pos = 0;
  const std::string key = "\"wall_ms\": ";
  while (pos < json.size()) {
    const std::size_t hit = json.find(key, pos);
    if (hit == std::string::npos) {
      out.append(json, pos, std::string::npos);
      break;
    }
    out.append(json, pos, hit + key.size() - pos);
    out += "0";
    std::size_t end = hit + key.size();
    while (end < json.size() && json[end] != '}' && json[end] != ',')
      ++end;
    pos = end;
  }
  return out;
}

}  // namespace distpair
