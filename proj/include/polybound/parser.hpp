#ifndef POLYBOUND_PARSER_HPP
#define POLYBOUND_PARSER_HPP

// Input language:
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' factor) | factor)*       juxtaposition multiplies
//   factor := coeff | var ['^' uint] | '(' poly ')' ['^' uint]
//   coeff  := uint ['/' uint]                       '/' only over Q
//
// Whitespace is ignored. A run of identifier characters that is not itself a
// declared variable is split greedily into declared names, so "xy" reads as
// x*y when x and y are declared.

#include <cctype>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polybound/multipoly.hpp"

namespace polybound {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

enum class ParseErrorKind { UnexpectedToken, UnknownVariable, NonPrimeModulusLiteral, ExponentOverflow };

constexpr std::string_view parse_error_kind_name(ParseErrorKind k) noexcept {
  switch (k) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::UnknownVariable: return "UnknownVariable";
    case ParseErrorKind::NonPrimeModulusLiteral: return "NonPrimeModulusLiteral";
    case ParseErrorKind::ExponentOverflow: return "ExponentOverflow";
  }
  return "ParseError";
}

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, std::string message)
      : std::runtime_error(std::string(parse_error_kind_name(kind)) + " at " + std::to_string(span.start) + ".." +
                           std::to_string(span.end) + ": " + message),
        kind_(kind),
        span_(span),
        message_(std::move(message)) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  SourceSpan span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
  std::string message_;
};

inline constexpr std::uint64_t kMaxExponent = 1'000'000;
/// Powers of bases with more than one term may not expand past this degree.
inline constexpr std::int64_t kMaxExpandedDegree = 4096;

/// Caret diagram pointing at the span, for terminal output.
inline std::string render_parse_error(std::string_view text, const ParseError& e) {
  std::string out = "error: " + e.message() + " (" + std::string(parse_error_kind_name(e.kind())) + ")\n  " +
                    std::string(text) + "\n  ";
  out.append(e.span().start, ' ');
  out.append(std::max<std::size_t>(1, e.span().end - e.span().start), '^');
  out += '\n';
  return out;
}

/// "x,y" -> {"x", "y"}.
inline std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string name(text.substr(start, comma - start));
    std::erase_if(name, [](unsigned char c) { return std::isspace(c); });
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw ParseError(ParseErrorKind::UnexpectedToken, {start, comma}, "bad variable name '" + name + "'");
    for (const auto& prev : out)
      if (prev == name) throw ParseError(ParseErrorKind::UnexpectedToken, {start, comma}, "duplicate variable " + name);
    out.push_back(std::move(name));
    start = comma + 1;
  }
  return out;
}

inline std::vector<std::string> default_variables(std::size_t arity) {
  if (arity == 1) return {"x"};
  if (arity == 2) return {"x", "y"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= arity; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

/// "Q" / "QQ" for the rationals; "F7", "GF7" or "7" for a prime field.
inline FieldDescriptor parse_field(std::string_view text) {
  if (text == "Q" || text == "QQ") return FieldDescriptor::rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF")) digits.remove_prefix(2);
  else if (digits.starts_with("F")) digits.remove_prefix(1);
  const SourceSpan all{0, text.size()};
  if (digits.empty() || digits.size() > 12)
    throw ParseError(ParseErrorKind::UnexpectedToken, all, "expected Q or F<prime>");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(ParseErrorKind::UnexpectedToken, all, "expected Q or F<prime>");
  const std::uint64_t p = std::stoull(std::string(digits));
  if (p > kMaxPrimeModulus || !is_prime_u64(p))
    throw ParseError(ParseErrorKind::NonPrimeModulusLiteral, all,
                     std::to_string(p) + (p > kMaxPrimeModulus ? " exceeds 2^31" : " is not prime"));
  return FieldDescriptor::prime(p);
}

namespace detail {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  SourceSpan span;
  std::string text;  // digits for Number
  int var = 0;       // 1-based variable index for Name
};

inline std::vector<Token> tokenize(std::string_view s, std::span<const std::string> vars) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, {i, j}, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && is_ident(s[j])) ++j;
      // Greedy split of the identifier run into declared names.
      std::size_t k = i;
      while (k < j) {
        std::size_t best_len = 0;
        int best_var = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
          const auto& name = vars[v];
          if (name.size() > best_len && name.size() <= j - k && s.substr(k, name.size()) == name) {
            best_len = name.size();
            best_var = static_cast<int>(v) + 1;
          }
        }
        if (best_len == 0)
          throw ParseError(ParseErrorKind::UnknownVariable, {i, j},
                           "unknown variable '" + std::string(s.substr(i, j - i)) + "'");
        out.push_back({Tok::Name, {k, k + best_len}, std::string(s.substr(k, best_len)), best_var});
        k += best_len;
      }
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(ParseErrorKind::UnexpectedToken, {i, i + 1},
                         "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, {i, i + 1}, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, {s.size(), s.size()}, ""});
  return out;
}

template <FieldElement E>
std::size_t term_count(const MultiPoly<E>& m) {
  if (m.is_constant()) return m.is_zero() ? 0 : 1;
  std::size_t n = 0;
  for (const auto& t : m.terms()) n += term_count(t);
  return n;
}

template <FieldElement E>
class Parser {
 public:
  Parser(std::string_view text, const FieldDescriptor& field, std::span<const std::string> vars)
      : field_(field), arity_(static_cast<int>(vars.size())), toks_(tokenize(text, vars)) {}

  MultiPoly<E> parse() {
    MultiPoly<E> p = poly();
    if (peek().kind != Tok::End) unexpected("expected operator or end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void unexpected(const std::string& what) const {
    const Token& t = peek();
    const std::string shown = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseErrorKind::UnexpectedToken, t.span, what + ", found " + shown);
  }

  MultiPoly<E> poly() {
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      negate = true;
      next();
    }
    MultiPoly<E> acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      MultiPoly<E> t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor(Tok k) const { return k == Tok::Number || k == Tok::Name || k == Tok::LParen; }

  MultiPoly<E> term() {
    const SourceSpan first = peek().span;
    MultiPoly<E> acc = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
      } else if (!starts_factor(peek().kind)) {
        break;
      }
      const SourceSpan span{first.start, peek().span.end};
      MultiPoly<E> f = factor();
      for (int v = 1; v <= arity_; ++v)
        if (acc.deg(v) + f.deg(v) > Degree(static_cast<std::int64_t>(kMaxExponent)))
          throw ParseError(ParseErrorKind::ExponentOverflow, span, "degree exceeds 10^6");
      acc *= f;
    }
    return acc;
  }

  std::uint64_t exponent() {
    const Token& t = peek();
    if (t.kind != Tok::Number) unexpected("expected exponent");
    next();
    if (t.text.size() > 7 || std::stoull(t.text) > kMaxExponent)
      throw ParseError(ParseErrorKind::ExponentOverflow, t.span, "exponent " + t.text + " exceeds 10^6");
    return std::stoull(t.text);
  }

  MultiPoly<E> power(const MultiPoly<E>& base, std::uint64_t e, SourceSpan span) {
    const bool monomial = term_count(base) <= 1;
    for (int v = 1; v <= arity_; ++v) {
      const Degree d = base.deg(v);
      if (d.is_neg_inf()) break;
      const std::int64_t total = d.value() * static_cast<std::int64_t>(e);
      if (total > static_cast<std::int64_t>(kMaxExponent) || (!monomial && total > kMaxExpandedDegree))
        throw ParseError(ParseErrorKind::ExponentOverflow, span, "expanded degree too large");
    }
    return pow(base, e);
  }

  MultiPoly<E> factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        mpz_class num(t.text, 10);
        if (peek().kind == Tok::Slash) {
          if (!field_.is_rationals()) unexpected("fractions are only allowed over Q");
          next();
          const Token& d = peek();
          if (d.kind != Tok::Number) unexpected("expected denominator");
          next();
          mpz_class den(d.text, 10);
          if (den == 0) throw ParseError(ParseErrorKind::UnexpectedToken, d.span, "zero denominator");
          return MultiPoly<E>::constant(field_, E::from_integer(field_, num) / E::from_integer(field_, den));
        }
        return MultiPoly<E>::constant(field_, E::from_integer(field_, num));
      }
      case Tok::Name: {
        next();
        MultiPoly<E> v = MultiPoly<E>::variable(field_, t.var);
        if (peek().kind == Tok::Caret) {
          next();
          const SourceSpan span{t.span.start, peek().span.end};
          return power(v, exponent(), span);
        }
        return v;
      }
      case Tok::LParen: {
        next();
        MultiPoly<E> inner = poly();
        if (peek().kind != Tok::RParen) unexpected("expected ')'");
        const SourceSpan close = next().span;
        if (peek().kind == Tok::Caret) {
          next();
          const SourceSpan span{t.span.start, peek().span.end};
          (void)close;
          return power(inner, exponent(), span);
        }
        return inner;
      }
      default:
        unexpected("expected a number, variable or '('");
    }
  }

  FieldDescriptor field_;
  int arity_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <FieldElement E>
bool is_single_term(const MultiPoly<E>& m) { return term_count(m) == 1; }

template <FieldElement E>
std::string format_node(const MultiPoly<E>& m, std::span<const std::string> vars) {
  if (m.is_constant()) return m.constant_value().to_string();
  const auto& name = vars[static_cast<std::size_t>(m.main_var()) - 1];
  std::vector<std::string> pieces;
  const auto terms = m.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& c = terms[i];
    if (c.is_zero()) continue;
    if (i == 0) {
      pieces.push_back(format_node(c, vars));
      continue;
    }
    const std::string mono = i == 1 ? name : name + "^" + std::to_string(i);
    if (c.is_constant()) {
      const std::string cs = c.constant_value().to_string();
      pieces.push_back(cs == "1" ? mono : cs == "-1" ? "-" + mono : cs + "*" + mono);
    } else if (is_single_term(c)) {
      pieces.push_back(format_node(c, vars) + "*" + mono);
    } else {
      pieces.push_back("(" + format_node(c, vars) + ")*" + mono);
    }
  }
  std::string out = pieces.front();
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    if (pieces[k].starts_with('-')) out += " - " + pieces[k].substr(1);
    else out += " + " + pieces[k];
  }
  return out;
}

}  // namespace detail

/// Parses `text` into a canonical polynomial; variable i of `variables`
/// becomes x_(i+1). Throws ParseError.
template <FieldElement E>
MultiPoly<E> parse_poly(std::string_view text, const FieldDescriptor& field, std::span<const std::string> variables) {
  if (variables.empty()) throw ParseError(ParseErrorKind::UnexpectedToken, {0, 0}, "no variables declared");
  return detail::Parser<E>(text, field, variables).parse();
}

template <FieldElement E>
BiPoly<E> parse_bipoly(std::string_view text, const FieldDescriptor& field,
                       std::span<const std::string> variables = default_variables(2)) {
  return to_bipoly(parse_poly<E>(text, field, variables), 1, 2);
}

template <FieldElement E>
UniPoly<E> parse_unipoly(std::string_view text, const FieldDescriptor& field, std::string_view var = "x") {
  const std::vector<std::string> vars{std::string(var)};
  return to_unipoly(parse_poly<E>(text, field, vars), 1);
}

/// Ascending powers, outermost variable last; "0" for zero. parse_poly
/// reads the result back to an equal polynomial.
template <FieldElement E>
std::string format_poly(const MultiPoly<E>& f, std::span<const std::string> variables) {
  return detail::format_node(f, variables);
}

template <FieldElement E>
std::string format_poly(const BiPoly<E>& f, std::span<const std::string> variables = default_variables(2)) {
  return detail::format_node(from_bipoly(f, 1, 2), variables);
}

template <FieldElement E>
std::string format_poly(const UniPoly<E>& f, std::string_view var = "x") {
  const std::vector<std::string> vars{std::string(var)};
  return detail::format_node(from_unipoly(f, 1), vars);
}

}  // namespace polybound

#endif  // POLYBOUND_PARSER_HPP
