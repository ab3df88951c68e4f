#include "cubicdet/text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cubicdet {
namespace {

constexpr std::array<std::string_view, 3> kVars{"X", "Y", "Z"};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string monomial(const std::array<int, 3>& exps) {
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (exps[v] == 0) continue;
    out += kVars[v];
    if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
  }
  return out;
}

// Appends c * mono to out using the sign conventions described in the header.
void append_term(std::string& out, const FieldElement& c, const std::string& mono) {
  const FieldSpec& fs = c.field();
  bool negative = false;
  std::string coef;
  if (fs.m() == 1) {
    long long v = c.index();
    if (2 * v > static_cast<long long>(fs.p())) {
      v = static_cast<long long>(fs.p()) - v;
      negative = true;
    }
    coef = v == 1 && !mono.empty() ? "" : std::to_string(v);
  } else {
    coef = format_element(c);
    if (coef == "1" && !mono.empty()) coef.clear();
    else if (coef.find(' ') != std::string::npos && !mono.empty()) coef = "(" + coef + ")";
  }
  if (out.empty()) out += negative ? "-" : "";
  else out += negative ? " - " : " + ";
  out += coef + mono;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for polynomials in X, Y, Z over F_q[w].

using Poly = std::map<std::array<int, 3>, FieldElement>;

class Parser {
 public:
  Parser(const FieldSpec& fs, std::string_view text) : fs_(fs), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_omega() const { return s_.substr(pos_, 2) == "\xCF\x89"; }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'Y' || c == 'Z' || c == 'x' || c == 'y' ||
           c == 'z' || c == 'w' || c == '(' || at_omega();
  }

  Poly constant(const FieldElement& c) const {
    Poly p;
    if (!c.is_zero()) p[{0, 0, 0}] = c;
    return p;
  }

  static void add_into(Poly& a, const Poly& b, bool subtract) {
    for (const auto& [e, c] : b) {
      auto it = a.find(e);
      const FieldElement v = subtract ? -c : c;
      if (it == a.end()) {
        a.emplace(e, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) a.erase(it);
      }
    }
  }

  static Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) add_into(out, Poly{{{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb}}, false);
    return out;
  }

  Poly expr() {
    skip();
    Poly acc;
    bool subtract = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      subtract = s_[pos_] == '-';
      ++pos_;
    }
    add_into(acc, term(), subtract);
    for (;;) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      subtract = s_[pos_] == '-';
      ++pos_;
      add_into(acc, term(), subtract);
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = mul(acc, factor());
      } else if (starts_factor()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      const long long e = integer();
      if (e > 64) fail("exponent too large");
      Poly out = constant(fs_.one());
      for (long long i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  long long integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(fs_.from_int(integer()));
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'w' || at_omega()) {
      pos_ += c == 'w' ? 1 : 2;
      if (fs_.m() == 1) fail("w is only defined over extension fields");
      return constant(fs_.adjoined_root());
    }
    const std::string_view vars = "XYZxyz";
    if (const auto v = vars.find(c); v != std::string_view::npos) {
      ++pos_;
      std::array<int, 3> e{0, 0, 0};
      e[v % 3] = 1;
      return Poly{{e, fs_.one()}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const FieldSpec& fs_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

Poly parse_homogeneous(const FieldSpec& fs, std::string_view text, int degree) {
  Poly p = Parser(fs, text).parse();
  for (const auto& [e, c] : p)
    if (e[0] + e[1] + e[2] != degree)
      throw Error(ErrorCode::ParseError,
                  "\"" + std::string(text) + "\" is not homogeneous of degree " + std::to_string(degree));
  return p;
}

std::vector<std::string> split_entries(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']') continue;
    cleaned += c == ';' ? ',' : c;
  }
  std::vector<std::string> out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

std::string format_element(const FieldElement& a) {
  const FieldSpec& fs = a.field();
  if (fs.m() == 1) return std::to_string(a.index());
  const auto c = a.coeffs();
  std::string out;
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    if (c[d] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coef = c[d] == 1 && d > 0 ? "" : std::to_string(c[d]);
    out += coef;
    if (d >= 1) out += "w";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::string format_form(const TernaryCubic& f) {
  std::string out;
  for (std::size_t k = 0; k < 10; ++k)
    if (!f.coeff(k).is_zero()) append_term(out, f.coeff(k), monomial(kCubicExponents[k]));
  return out.empty() ? "0" : out;
}

std::string format_linear(const LinearForm& l) {
  std::string out;
  for (int v = 0; v < 3; ++v)
    if (!l.c[v].is_zero()) append_term(out, l.c[v], std::string(kVars[v]));
  return out.empty() ? "0" : out;
}

std::string format_point(const ProjPoint& p) {
  return "[" + format_element(p.x()) + ":" + format_element(p.y()) + ":" + format_element(p.z()) + "]";
}

std::string format_matrix(const LinearMatrixRep& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < 3; ++c) out += (c ? ", " : "") + format_linear(m.entry(r, c));
    out += "]";
  }
  return out + "]";
}

std::string format_mat3(const Mat3& m) {
  std::string out = "[";
  for (int r = 0; r < 3; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < 3; ++c) {
      std::string s;
      append_term(s, m(r, c), "");
      out += (c ? ", " : "") + s;
    }
    out += "]";
  }
  return out + "]";
}

FieldElement parse_element(const FieldSpec& fs, std::string_view text) {
  const Poly p = parse_homogeneous(fs, text, 0);
  return p.empty() ? fs.zero() : p.begin()->second;
}

TernaryCubic parse_form(const FieldSpec& fs, std::string_view text) {
  const Poly p = parse_homogeneous(fs, text, 3);
  TernaryCubic f(fs);
  for (const auto& [e, c] : p) {
    std::array<int, 3> vars{};
    int n = 0;
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) vars[n++] = v;
    f.set(cubic_index(vars[0], vars[1], vars[2]), c);
  }
  return f;
}

LinearForm parse_linear(const FieldSpec& fs, std::string_view text) {
  const Poly p = parse_homogeneous(fs, text, 1);
  LinearForm l = LinearForm::zero(fs);
  for (const auto& [e, c] : p)
    for (int v = 0; v < 3; ++v)
      if (e[v]) l.c[v] = c;
  return l;
}

ProjPoint parse_point(const FieldSpec& fs, std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']') continue;
    cleaned += c == ':' ? ',' : c;
  }
  const auto parts = split_entries(cleaned);
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "a point needs three coordinates: " + std::string(text));
  return ProjPoint(parse_element(fs, parts[0]), parse_element(fs, parts[1]), parse_element(fs, parts[2]));
}

LinearMatrixRep parse_matrix(const FieldSpec& fs, std::string_view text) {
  const auto parts = split_entries(text);
  if (parts.size() != 9) throw Error(ErrorCode::ParseError, "a matrix needs nine entries: " + std::string(text));
  LinearMatrixRep::Entries e;
  for (int i = 0; i < 9; ++i) e[i / 3][i % 3] = parse_linear(fs, parts[i]);
  return LinearMatrixRep(e);
}

Mat3 parse_mat3(const FieldSpec& fs, std::string_view text) {
  const auto parts = split_entries(text);
  if (parts.size() != 9) throw Error(ErrorCode::ParseError, "a matrix needs nine entries: " + std::string(text));
  Mat3 m(fs);
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = parse_element(fs, parts[i]);
  return m;
}

}  // namespace cubicdet
