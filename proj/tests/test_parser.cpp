#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support.hpp"

using namespace pbtest;

namespace {

ParseError parse_failure(const std::string& text, const FieldDescriptor& fd = kQ) {
  try {
    if (fd.is_rationals()) (void)parse_poly<Rational>(text, fd, xy());
    else (void)parse_poly<Fp>(text, fd, xy());
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return ParseError(ParseErrorKind::UnexpectedToken, {}, "");
}

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(bq("6+5*x+x^2+(5+2*x)*y+y^2"), f1_expanded(2, 3, 1));
  EXPECT_EQ(format_poly(f1_expanded(2, 3, 1)), "6 + 5*x + x^2 + (5 + 2*x)*y + y^2");

  const auto zero = parse_poly<Rational>("0", kQ, xy());
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(format_poly(zero, xy()), "0");

  const auto f4 = bq("(1+x*y+y^2)^3");
  EXPECT_EQ(f4.deg_y(), Degree(6));
  EXPECT_EQ(f4.coeff(3), uq("x^3 + 6*x"));
  int at_max = 0;
  for (std::size_t i = 0; i <= 6; ++i) at_max += f4.coeff(i).degree() == Degree(3);
  EXPECT_EQ(at_max, 1);

  EXPECT_EQ(format_poly(bp("7*x + 7", 5)), "2 + 2*x");
  EXPECT_EQ(format_poly(up("7", 5)), "2");
}

TEST(Parser, GrammarForms) {
  EXPECT_EQ(bq("2x y^2"), bq("2*x*y^2"));
  EXPECT_EQ(bq("  (1 + x)(1 - x) "), bq("1 - x^2"));
  EXPECT_EQ(bq("-x + y"), bq("y - x"));
  EXPECT_EQ(bq("(-x)^2"), bq("x^2"));
  EXPECT_EQ(bq("1/2*x + 1/2*x"), bq("x"));
  EXPECT_EQ(bq("x^0"), bq("1"));
  EXPECT_EQ(bq("(x+y)^0"), bq("1"));
  EXPECT_EQ(bp("3*x + 4*x", 7), bp("0", 7));
  const std::vector<std::string> v{"a", "b", "c"};
  const auto m = parse_poly<Rational>("a*c^2 + b", kQ, v);
  EXPECT_EQ(m.deg(3), Degree(2));
  EXPECT_EQ(format_poly(m, v), "b + a*c^2");
}

TEST(Parser, ErrorsCarrySpans) {
  auto e = parse_failure("1 + z");
  EXPECT_EQ(e.kind(), ParseErrorKind::UnknownVariable);
  EXPECT_EQ(e.span().start, 4u);
  EXPECT_EQ(e.span().end, 5u);

  e = parse_failure("1/2*x", FieldDescriptor::prime(5));
  EXPECT_EQ(e.kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(e.span().start, 1u);

  e = parse_failure("x^1000001");
  EXPECT_EQ(e.kind(), ParseErrorKind::ExponentOverflow);
  EXPECT_EQ(parse_failure("x^1000000*x").kind(), ParseErrorKind::ExponentOverflow);
  EXPECT_EQ(parse_failure("(1+x)^100000").kind(), ParseErrorKind::ExponentOverflow);
  EXPECT_NO_THROW(bq("x^1000000"));

  EXPECT_EQ(parse_failure("1 +").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("(1 + x").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("x + - y").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("x^y").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("1/0").kind(), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(parse_failure("x $ y").kind(), ParseErrorKind::UnexpectedToken);

  const std::string text = "1 + z";
  const auto diagram = render_parse_error(text, parse_failure(text));
  EXPECT_NE(diagram.find("  1 + z\n      ^\n"), std::string::npos) << diagram;
}

TEST(Parser, FieldAndVariableLists) {
  EXPECT_TRUE(parse_field("Q").is_rationals());
  EXPECT_EQ(parse_field("F7").characteristic(), 7u);
  EXPECT_EQ(parse_field("GF11").characteristic(), 11u);
  EXPECT_EQ(parse_field("13").characteristic(), 13u);
  try {
    parse_field("F9");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::NonPrimeModulusLiteral);
  }
  EXPECT_THROW(parse_field("R"), ParseError);
  EXPECT_EQ(parse_variable_list("x1, x2,x3"), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_THROW(parse_variable_list("x,x"), ParseError);
  EXPECT_THROW(parse_variable_list("x,,y"), ParseError);
  EXPECT_EQ(default_variables(3), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(ParserProperty, RoundTripQ) {
  std::mt19937_64 rng(101);
  const std::vector<std::string> v3{"x1", "x2", "x3"};
  for (int t = 0; t < 300; ++t) {
    const auto f = random_multi<Rational>(rng, kQ, 3);
    const std::string s = format_poly(f, v3);
    EXPECT_EQ(parse_poly<Rational>(s, kQ, v3), f) << s;
    EXPECT_EQ(format_poly(parse_poly<Rational>(s, kQ, v3), v3), s);
  }
}

TEST(ParserProperty, RoundTripFp) {
  std::mt19937_64 rng(102);
  for (std::uint32_t p : {2u, 3u, 7u, 2147483647u}) {
    const auto fd = FieldDescriptor::prime(p);
    for (int t = 0; t < 100; ++t) {
      const auto f = random_multi<Fp>(rng, fd, 2);
      const std::string s = format_poly(f, xy());
      EXPECT_EQ(parse_poly<Fp>(s, fd, xy()), f) << s;
    }
  }
}

TEST(ParserProperty, TotalOnArbitraryInput) {
  const std::string alphabet = "xyz0123456789+-*/^() \t.#";
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 24);
  int parsed = 0;
  for (int t = 0; t < 20000; ++t) {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) s += alphabet[pick(rng)];
    for (bool modular : {false, true}) {
      try {
        if (modular) (void)parse_poly<Fp>(s, FieldDescriptor::prime(5), xy());
        else (void)parse_poly<Rational>(s, kQ, xy());
        ++parsed;
      } catch (const ParseError& e) {
        EXPECT_LE(e.span().start, e.span().end) << s;
        EXPECT_LE(e.span().end, s.size()) << s;
      } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected exception on '" << s << "': " << e.what();
      }
    }
  }
  EXPECT_GT(parsed, 0);
}

TEST(Parser, LeadingZerosAreDecimal) {
  EXPECT_EQ(bq("010*x"), bq("10*x"));
  EXPECT_EQ(bq("09"), bq("9"));
  EXPECT_EQ(bq("x^010"), bq("x^10"));
}
