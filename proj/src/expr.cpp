#include "distpair/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <numbers>

#include "distpair/pv.hpp"

namespace distpair {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// ---- complex coefficient literals: re, re+imi, re-imi ---------------------

Complex parse_complex(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw ConfigError("empty complex literal");
  const char* p = t.c_str();
  char* end = nullptr;
  const double first = std::strtod(p, &end);
  if (end == p) throw ConfigError("bad complex literal: " + t);
  if (*end == '\0') return Complex{first, 0.0};
  if (*end == 'i' && *(end + 1) == '\0') return Complex{0.0, first};
  if (*end != '+' && *end != '-')
    throw ConfigError("bad complex literal: " + t);
  const char* q = end;
  const double second = std::strtod(q, &end);
  if (end == q || *end != 'i' || *(end + 1) != '\0')
    throw ConfigError("bad complex literal: " + t);
  return Complex{first, second};
}

// ---- test-function grammar -------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_real(const std::string& text) {
  const std::string t = strip(text);
  const char* p = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(p, &end);
  if (end == p || *end != '\0') throw ConfigError("bad number: " + t);
  return v;
}

TestFunction parse_hg(const std::string& body) {
  ComplexPolynomial poly;
  bool have_poly = false, have_a = false;
  double a = 1.0, mu = 0.0, omega = 0.0;
  for (const std::string& field : split(body, ';')) {
    const std::string f = strip(field);
    if (f.empty()) continue;
    const std::size_t eq = f.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value in test function: " + f);
    const std::string key = strip(f.substr(0, eq));
    const std::string value = strip(f.substr(eq + 1));
    if (key == "poly") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ConfigError("poly expects [c0,c1,...]");
      std::vector<Complex> coeffs;
      const std::string inner = value.substr(1, value.size() - 2);
      if (!strip(inner).empty())
        for (const std::string& c : split(inner, ','))
          coeffs.push_back(parse_complex(c));
      poly = ComplexPolynomial(std::move(coeffs));
      have_poly = true;
    } else if (key == "a") {
      a = parse_real(value);
      have_a = true;
    } else if (key == "mu") {
      mu = parse_real(value);
    } else if (key == "omega") {
      omega = parse_real(value);
    } else {
      throw ConfigError("unknown test-function field: " + key);
    }
  }
  if (!have_poly || !have_a)
    throw ConfigError("test function needs poly=[...] and a=<f>");
  if (!(a > 0.0)) throw ConfigError("test-function width a must be > 0");
  return {std::move(poly), a, mu, omega};
}

// ---- distribution grammar ---------------------------------------------------

struct Lexer {
  std::string text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ConfigError(std::string("expected '") + c + "' in distribution");
  }
  // Identifier starting at the cursor, without consuming it.
  std::string peek_word() {
    skip_space();
    std::size_t e = pos;
    while (e < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[e])))
      ++e;
    return text.substr(pos, e - pos);
  }
  void consume_word(const std::string& w) { pos += w.size(); }
  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }
  double read_number() {
    skip_space();
    const char* p = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) throw ConfigError("expected number in distribution");
    pos += static_cast<std::size_t>(end - p);
    return v;
  }
  int read_int() {
    skip_space();
    const char* p = text.c_str() + pos;
    char* end = nullptr;
    const long v = std::strtol(p, &end, 10);
    if (end == p) throw ConfigError("expected integer in distribution");
    pos += static_cast<std::size_t>(end - p);
    return static_cast<int>(v);
  }
};

Distribution parse_expr(Lexer& lex);

bool at_scalar_atom(Lexer& lex) {
  if (lex.at_number()) return true;
  const std::string w = lex.peek_word();
  return w == "pi" || w == "i";
}

Complex read_scalar_atom(Lexer& lex) {
  if (lex.at_number()) return Complex{lex.read_number(), 0.0};
  const std::string w = lex.peek_word();
  if (w == "pi") {
    lex.consume_word(w);
    return Complex{std::numbers::pi_v<double>, 0.0};
  }
  if (w == "i") {
    lex.consume_word(w);
    return Complex{0.0, 1.0};
  }
  throw ConfigError("expected scalar in distribution");
}

Distribution parse_factor(Lexer& lex) {
  if (lex.accept('(')) {
    Distribution inner = parse_expr(lex);
    lex.expect(')');
    return inner;
  }
  const std::string w = lex.peek_word();
  if (w == "H") {
    lex.consume_word(w);
    return Distribution::regular(csl::heaviside());
  }
  if (w == "sgn") {
    lex.consume_word(w);
    return Distribution::regular(csl::sign());
  }
  if (w == "one") {
    lex.consume_word(w);
    return Distribution::regular(csl::one());
  }
  if (w == "ramp") {
    lex.consume_word(w);
    return Distribution::regular(csl::ramp());
  }
  if (w == "delta") {
    lex.consume_word(w);
    return Distribution::delta();
  }
  if (w == "h") {
    lex.consume_word(w);
    return Distribution::regular(csl::hfun());
  }
  if (w == "pv") {
    lex.consume_word(w);
    lex.expect(':');
    const int n = lex.read_int();
    try {
      return pv_distribution(n);
    } catch (const InvalidOrder& e) {
      throw ConfigError(e.what());
    }
  }
  if (w == "d") {
    lex.consume_word(w);
    lex.expect('(');
    Distribution inner = parse_expr(lex);
    lex.expect(')');
    return derivative(inner);
  }
  if (w == "F") {
    lex.consume_word(w);
    lex.expect('(');
    Distribution inner = parse_expr(lex);
    lex.expect(')');
    return fourier(inner);
  }
  throw ConfigError("unknown distribution near: " +
                    lex.text.substr(lex.pos));
}

// term := { scalar_atom '*' }* factor, with the scalar atoms multiplied out.
std::pair<Complex, Distribution> parse_term(Lexer& lex) {
  Complex weight{1.0, 0.0};
  bool saw_scalar = false;
  while (at_scalar_atom(lex)) {
    weight *= read_scalar_atom(lex);
    saw_scalar = true;
    if (!lex.accept('*')) {
      if (at_scalar_atom(lex))
        throw ConfigError("expected '*' between scalar factors");
      throw ConfigError("a scalar needs '*' and a distribution after it");
    }
  }
  (void)saw_scalar;
  return {weight, parse_factor(lex)};
}

Distribution parse_expr(Lexer& lex) {
  std::vector<std::pair<Complex, Distribution>> terms;
  double sign = 1.0;
  if (lex.accept('-'))
    sign = -1.0;
  else
    lex.accept('+');
  while (true) {
    auto [weight, term] = parse_term(lex);
    terms.emplace_back(sign * weight, std::move(term));
    if (lex.accept('+')) {
      sign = 1.0;
    } else if (lex.accept('-')) {
      sign = -1.0;
    } else {
      break;
    }
  }
  if (terms.size() == 1 && terms[0].first == Complex{1.0, 0.0})
    return terms[0].second;
  return combo(terms);
}

}  // namespace

TestFunction parse_test_function(const std::string& text) {
  const std::string t = strip(text);
  if (t == "gauss") return gauss();
  if (t == "xgauss") return xgauss();
  if (t == "x2gauss") return x2gauss();
  if (t.rfind("gauss@", 0) == 0) return gauss_at(parse_real(t.substr(6)));
  if (t.rfind("hg:", 0) == 0) return parse_hg(t.substr(3));
  throw ConfigError("unknown test function: " + t);
}

Distribution parse_distribution(const std::string& text) {
  Lexer lex{text};
  Distribution d = parse_expr(lex);
  if (!lex.done())
    throw ConfigError("trailing input in distribution: " +
                      lex.text.substr(lex.pos));
  return d;
}

}  // namespace distpair
