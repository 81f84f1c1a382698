#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace pbtest;
using enum CriterionId;

namespace {

const std::vector<std::string> kVars3{"x1", "x2", "x3"};
const std::vector<std::string> kVars4{"x1", "x2", "x3", "x4"};

MultiPoly<Rational> m3(const std::string& text) { return parse_poly<Rational>(text, kQ, kVars3); }
MultiPoly<Rational> m4(const std::string& text) { return parse_poly<Rational>(text, kQ, kVars4); }

}  // namespace

TEST(Multivariate, Frame) {
  const VariableFrame frame(kVars3);
  EXPECT_EQ(frame.main_index(), 3);
  EXPECT_EQ(frame.pivot_index(), 2);
  EXPECT_THROW(VariableFrame({"x", "y"}), Error);
  EXPECT_THROW(VariableFrame({"a", "b", "a"}), Error);
}

TEST(Multivariate, CoefficientsInMain) {
  const VariableFrame frame(kVars3);
  EXPECT_EQ(coefficients_in_main(m3("x1*x3^2 + x2^3*x3 + x2"), frame),
            (std::vector<MultiPoly<Rational>>{m3("x2"), m3("x2^3"), m3("x1")}));
  EXPECT_EQ(coefficients_in_main(m3("1"), frame), (std::vector<MultiPoly<Rational>>{m3("1")}));
  EXPECT_EQ(coefficients_in_main(m3("x3^2"), frame), (std::vector<MultiPoly<Rational>>{m3("0"), m3("0"), m3("1")}));
  try {
    coefficients_in_main(m4("x4 + x1"), frame);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownVariable);
  }
}

TEST(Multivariate, FreeOfPivot) {
  const VariableFrame frame(kVars3);
  EXPECT_TRUE(is_free_of_pivot(m3("x1"), frame));
  EXPECT_FALSE(is_free_of_pivot(m3("x2^3"), frame));
  EXPECT_FALSE(is_free_of_pivot(m3("x1 + x2*x1"), frame));
  EXPECT_TRUE(is_free_of_pivot(m3("0"), frame));
}

TEST(Multivariate, ContentInCoefficientRing) {
  const VariableFrame frame(kVars3);
  EXPECT_EQ(content_pivot_ring(m3("x1*x2*x3 + x1*x2"), frame), m3("x1*x2"));
  EXPECT_EQ(content_pivot_ring(m3("x1*x3^2 + x2^3*x3 + x2"), frame), m3("1"));
  EXPECT_EQ(content_pivot_ring(m3("(x1 + x2)*(x3^2 - x1*x3 + 1)"), frame), m3("x1 + x2"));
  try {
    content_pivot_ring(m4("x1*x4 + x2"), VariableFrame(kVars4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSupported);
  }
}

TEST(Multivariate, CriteriaExamples) {
  const VariableFrame frame(kVars3);
  const auto f = m3("x1*x3^2 + x2^3*x3 + x2");
  const auto m4v = check_criterion(M4, f, frame);
  EXPECT_TRUE(m4v.applicable);
  EXPECT_EQ(m4v.bound, 1);
  EXPECT_EQ(m4v.witness.j, 1);
  const auto m5v = check_criterion(M5, f, frame);
  EXPECT_TRUE(m5v.applicable);
  EXPECT_EQ(m5v.bound, 1);

  EXPECT_EQ(check_criterion(M4, m3("x2*x3^2 + x2^3*x3 + 1"), frame).failed_hypothesis, hypothesis::kLeadFreeOfPivot);
  EXPECT_EQ(check_criterion(M4, m3("x1*x3^2 + x2*x3 + x2"), frame).failed_hypothesis, hypothesis::kDegreeInequality);
  EXPECT_EQ(check_criterion(M5, m3("x1*x2*x3^2 + x1*x2"), frame).failed_hypothesis, hypothesis::kContent);
  EXPECT_EQ(check_criterion(M4, m3("x2*x3 + 1"), frame).failed_hypothesis, hypothesis::kDegreeY);
  EXPECT_THROW(check_criterion(T1F, f, frame), Error);

  // M5 with a lead coefficient depending on the pivot: deg_2 a_0 = 5 > deg_2 a_1 + deg_2 a_2 = 1 + 1.
  const auto w = check_criterion(M5, m3("x2^5 + x1 + x2*x3 + x2*x3^2"), frame);
  EXPECT_TRUE(w.applicable) << w.failed_hypothesis;
  EXPECT_EQ(w.bound, 2);
}

TEST(Multivariate, ContentForHigherArity) {
  const VariableFrame frame(kVars4);
  const auto f = m4("x1*x4^2 + x3^3*x4 + x3");
  EXPECT_EQ(check_criterion(M5, f, frame).failed_hypothesis, hypothesis::kContentUnverifiable);
  const auto v = check_criterion(M5, f, frame, true);
  EXPECT_TRUE(v.applicable);
  EXPECT_EQ(v.bound, 1);
  EXPECT_TRUE(check_criterion(M4, f, frame).applicable);

  const auto plain = analyze(f, kVars4);
  EXPECT_FALSE(plain.content);
  EXPECT_TRUE(plain.assumptions.empty());
  EXPECT_EQ(plain.best_bound, 1);  // M4 needs no content check
  const auto assumed = analyze(f, kVars4, {.assume_primitive = true});
  EXPECT_EQ(assumed.assumptions.size(), 1u);
  EXPECT_EQ(assumed.certificate, M4);
}

TEST(Multivariate, AnalyzeStripsMainPower) {
  const auto r = analyze(m3("x3^3*(x1*x3^2 + x2^3*x3 + x2)"), kVars3);
  EXPECT_EQ(r.stripped_power, 3u);
  EXPECT_EQ(r.content, "1");
  EXPECT_EQ(r.verdicts.size(), 2u);
  EXPECT_EQ(r.best_bound, 1);
}

TEST(MultivariateProperty, DegreeOfProductIsAdditive) {
  std::mt19937_64 rng(601);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_multi<Rational>(rng, kQ, 3), g = random_multi<Rational>(rng, kQ, 3);
    for (int v = 1; v <= 3; ++v) EXPECT_EQ((f * g).deg(v), f.deg(v) + g.deg(v));
  }
}

TEST(MultivariateProperty, SpecializationKeepsPerronBound) {
  // Substituting x1 = c keeps a_n a nonzero constant and a_j dominant when
  // a_n(c), a_0(c) != 0 and deg_2 a_j(c) = deg_2 a_j.
  std::mt19937_64 rng(602);
  const VariableFrame frame(kVars3);
  int certified = 0, specialized = 0;
  for (int t = 0; t < 6000; ++t) {
    const auto f = random_multi<Rational>(rng, kQ, 3);
    if (f.is_zero() || f.deg(3) < Degree(2)) continue;
    const auto [k, g] = strip_main_power(f, frame);
    const auto v = check_criterion(M4, g, frame);
    if (!v.applicable) continue;
    ++certified;
    const auto a = coefficients_in_main(g, frame);
    const auto j = static_cast<std::size_t>(*v.witness.j);
    for (long c = -3; c <= 3; ++c) {
      const Rational cv(c);
      if (a.back().substitute(1, cv).is_zero() || a.front().substitute(1, cv).is_zero()) continue;
      if (a[j].substitute(1, cv).deg(2) != a[j].deg(2)) continue;
      const auto h = to_bipoly(g.substitute(1, cv), 2, 3);
      const auto p = check_criterion(PGEN, h);
      ++specialized;
      EXPECT_TRUE(p.applicable) << format_poly(g, kVars3) << " at x1 = " << c;
      EXPECT_EQ(p.bound, v.bound);
      EXPECT_EQ(p.witness.j, v.witness.j);
    }
  }
  EXPECT_GT(certified, 30);
  EXPECT_GT(specialized, 100);
}
