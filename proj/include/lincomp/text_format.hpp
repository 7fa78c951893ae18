#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "sequence.hpp"

// Plain-text formats.
//
// Sequence file: the first non-comment line is `p=<int> m=<int> [mod=c0,...,cm]`,
// then whitespace-separated elements; an element is one integer in [0, p) when
// m = 1 and m comma-separated coordinates (low degree first) otherwise.
// `#` starts a comment that runs to the end of the line.
//
// Polynomials: terms low to high joined by " + ", each a coefficient followed
// by x or x^k. Coefficients print as integers when m = 1 and as [c0,c1,...]
// otherwise. The parser also takes "-", U+2212, products by juxtaposition,
// parenthesised groups and ^ on any factor, so factored strings read back.

namespace lincomp {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  if (s.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Coordinates of one element token; line is for diagnostics only.
inline FieldElement parse_element_token(const FieldSpec& f, std::string_view tok, std::size_t line) {
  const auto parts = split(tok, ',');
  if (parts.size() != f.degree())
    throw ParseError(ErrorCode::SyntaxError, line,
                     "element '" + std::string(tok) + "' needs " + std::to_string(f.degree()) + " coordinate(s)");
  std::vector<std::uint32_t> coords;
  for (auto part : parts) {
    const auto v = parse_uint(part);
    if (!v) throw ParseError(ErrorCode::SyntaxError, line, "not an integer: '" + std::string(part) + "'");
    if (*v >= f.characteristic())
      throw ParseError(ErrorCode::ElementOutOfRange, line,
                       "coordinate " + std::to_string(*v) + " outside [0, " + std::to_string(f.characteristic()) + ")");
    coords.push_back(static_cast<std::uint32_t>(*v));
  }
  return f.element(coords);
}

}  // namespace detail

/// True if the line (comment already stripped) looks like a field header.
inline bool is_field_header(std::string_view line) {
  const auto t = detail::tokens(line);
  return !t.empty() && t[0].starts_with("p=");
}

/// Field from a header line such as "p=3 m=2 mod=2,2,1".
inline FieldSpec parse_field_header(std::string_view text, std::size_t line = 0) {
  std::optional<std::uint64_t> p, m;
  std::optional<std::vector<std::uint32_t>> modulus;
  for (auto tok : detail::tokens(text)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(ErrorCode::BadHeader, line, "expected key=value, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "p" || key == "m") {
      const auto v = detail::parse_uint(value);
      if (!v) throw ParseError(ErrorCode::BadHeader, line, "bad value for " + std::string(key));
      (key == "p" ? p : m) = v;
    } else if (key == "mod") {
      modulus.emplace();
      for (auto part : detail::split(value, ',')) {
        const auto v = detail::parse_uint(part);
        if (!v || *v > UINT32_MAX) throw ParseError(ErrorCode::BadHeader, line, "bad modulus coefficient");
        modulus->push_back(static_cast<std::uint32_t>(*v));
      }
    } else {
      throw ParseError(ErrorCode::BadHeader, line, "unknown header key '" + std::string(key) + "'");
    }
  }
  if (!p || !m) throw ParseError(ErrorCode::BadHeader, line, "header needs both p= and m=");
  if (*m == 0 || *m > 64) throw ParseError(ErrorCode::BadHeader, line, "m must be a positive integer");
  try {
    return make_field(*p, static_cast<std::uint32_t>(*m), modulus);
  } catch (const Error& e) {
    throw ParseError(ErrorCode::BadHeader, line, e.what());
  }
}

/// Reads a sequence file. Without a header line, fallback supplies the field;
/// with both, they must agree.
inline PeriodicSequence parse_sequence(std::istream& in, std::optional<FieldSpec> fallback = std::nullopt) {
  std::optional<FieldSpec> field;
  std::vector<FieldElement> period;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (!field) {
      if (is_field_header(line)) {
        field = parse_field_header(line, line_no);
        if (fallback && *fallback != *field)
          throw ParseError(ErrorCode::BadHeader, line_no,
                           "file declares " + field->name() + " but " + fallback->name() + " was requested");
        continue;
      }
      if (!fallback) throw ParseError(ErrorCode::BadHeader, line_no, "missing header line 'p=<int> m=<int>'");
      field = fallback;
    }
    for (auto tok : detail::tokens(line)) period.push_back(detail::parse_element_token(*field, tok, line_no));
  }
  if (!field) {
    if (!fallback) throw ParseError(ErrorCode::BadHeader, 0, "empty input");
    field = fallback;
  }
  if (period.empty()) throw ParseError(ErrorCode::EmptyPeriod, line_no, "no sequence elements");
  return PeriodicSequence(*field, std::move(period));
}

inline PeriodicSequence parse_sequence_string(std::string_view text, std::optional<FieldSpec> fallback = std::nullopt) {
  std::istringstream in{std::string(text)};
  return parse_sequence(in, fallback);
}

inline PeriodicSequence parse_sequence_file(const std::string& path, std::optional<FieldSpec> fallback = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw ParseError(ErrorCode::SyntaxError, 0, "cannot open '" + path + "'");
  return parse_sequence(in, fallback);
}

/// Header line for a field, the inverse of parse_field_header.
inline std::string format_field_header(const FieldSpec& f) {
  std::string out = "p=" + std::to_string(f.characteristic()) + " m=" + std::to_string(f.degree());
  if (f.degree() > 1) {
    out += " mod=";
    const auto mod = f.modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) out += (i ? "," : "") + std::to_string(mod[i]);
  }
  return out;
}

/// One element as a sequence-file token.
inline std::string format_element_token(const FieldElement& e) {
  const auto c = e.coords();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

inline std::string format_sequence(const PeriodicSequence& s) {
  std::string out = format_field_header(s.field()) + "\n";
  for (std::size_t i = 0; i < s.period(); ++i) out += (i ? " " : "") + format_element_token(s[i]);
  return out + "\n";
}

/// Coefficient in polynomial text: "4" over a prime field, "[1,2]" otherwise.
inline std::string format_coefficient(const FieldElement& e) {
  if (e.field().degree() == 1) return std::to_string(e.index());
  return "[" + format_element_token(e) + "]";
}

inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const auto& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || !c.is_one()) out += format_coefficient(c);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// One factor of a product: "(1 - 4x)^7" when f = (1 - x)^k and s scales the
/// argument, otherwise the expanded f(s x) in parentheses.
inline std::string format_scaled_factor(const Poly& f, const FieldElement& s) {
  const FieldSpec& field = f.field();
  if (f.degree() <= 0) return format_poly(f);
  const auto k = static_cast<std::uint64_t>(f.degree());
  if (f == binomial_power(field, k)) {
    std::string out = "(1 - " + (s.is_one() ? std::string() : format_coefficient(s)) + "x)";
    if (k > 1) out += "^" + std::to_string(k);
    return out;
  }
  return "(" + format_poly(scale_argument(f, s)) + ")";
}

namespace detail {

/// Recursive-descent parser for the polynomial grammar described above.
class PolyParser {
 public:
  PolyParser(const FieldSpec& field, std::string_view text) : field_(field), s_(text) {}

  Poly parse() {
    Poly out = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
    return out;
  }

 private:
  // expr := ['+'|'-'] term (('+'|'-') term)*
  Poly expr() {
    Poly acc(field_);
    bool first = true;
    while (true) {
      skip_space();
      bool negate = false;
      if (eat('+')) {
      } else if (eat_minus()) {
        negate = true;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
    }
    return acc;
  }

  // term := factor factor*   (juxtaposition)
  Poly term() {
    Poly acc = factor();
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c == 'x' || c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c)))
        acc = acc * factor();
      else
        break;
    }
    return acc;
  }

  // factor := atom ['^' uint]
  Poly factor() {
    Poly base = atom();
    skip_space();
    if (eat('^')) {
      skip_space();
      base = pow(base, number());
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return Poly::monomial(field_.one(), 1);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      const auto close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("missing ']'");
      const auto body = s_.substr(pos_, close - pos_);
      pos_ = close + 1;
      std::vector<std::uint32_t> coords;
      for (auto part : split(body, ',')) {
        const auto v = parse_uint(trim(part));
        if (!v) fail("bad coordinate in [" + std::string(body) + "]");
        if (*v >= field_.characteristic()) throw Error(ErrorCode::ElementOutOfRange, "coordinate out of range");
        coords.push_back(static_cast<std::uint32_t>(*v));
      }
      if (coords.size() != field_.degree()) fail("coefficient needs " + std::to_string(field_.degree()) + " coordinates");
      return Poly::constant(field_.element(coords));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = number();
      if (v >= field_.characteristic()) throw Error(ErrorCode::ElementOutOfRange, std::to_string(v) + " is not below p");
      return Poly::constant(field_.from_int(static_cast<std::int64_t>(v)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::uint64_t number() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const auto v = parse_uint(s_.substr(start, pos_ - start));
    if (!v) fail("expected a number");
    return *v;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_minus() {
    if (eat('-')) return true;
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (s_.substr(pos_).starts_with(kUnicodeMinus)) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, 0, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  FieldSpec field_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const FieldSpec& field, std::string_view text) { return detail::PolyParser(field, text).parse(); }

}  // namespace lincomp
