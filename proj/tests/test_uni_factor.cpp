#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace pbtest;

namespace {

template <FieldElement E>
void expect_well_formed(const UniPoly<E>& input, const FactorMultiset<E>& fm) {
  EXPECT_EQ(fm.product(), input) << format_poly(input);
  for (std::size_t k = 0; k < fm.factors.size(); ++k) {
    const auto& [f, m] = fm.factors[k];
    EXPECT_GE(m, 1u);
    EXPECT_GE(f.degree(), Degree(1));
    EXPECT_TRUE(f.leading().is_one());
    if (k > 0) EXPECT_TRUE(poly_less(fm.factors[k - 1].first, f)) << "unsorted or repeated factor";
  }
}

std::vector<std::pair<std::string, unsigned>> shown(const FactorMultiset<Rational>& fm) {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& [f, m] : fm.factors) out.emplace_back(format_poly(f), m);
  return out;
}

using Shown = std::vector<std::pair<std::string, unsigned>>;

}  // namespace

TEST(UniFactor, Examples) {
  EXPECT_EQ(shown(factor_uni(uq("6 + 5*x + x^2"))), (Shown{{"2 + x", 1}, {"3 + x", 1}}));
  EXPECT_EQ(shown(factor_uni(uq("x^4 + 1"))), (Shown{{"1 + x^4", 1}}));
  EXPECT_EQ(nu_count(uq("x^4 + 1")), 1u);

  const auto f2 = factor_uni(up("x^2 + 1", 2));
  ASSERT_EQ(f2.factors.size(), 1u);
  EXPECT_EQ(f2.factors[0].first, up("x + 1", 2));
  EXPECT_EQ(f2.factors[0].second, 2u);

  EXPECT_EQ(nu_count(uq("(2 + x^2)^4")), 4u);
  EXPECT_EQ(nu_count(uq("5")), 0u);
  EXPECT_EQ(nu_count(uq("6 + 5*x + x^2")), 2u);

  EXPECT_EQ(smallest_irreducible_degree(uq("(2 + x^2)^4")), 2);
  EXPECT_EQ(smallest_irreducible_degree(uq("x^3 + 2")), 3);
  EXPECT_EQ(smallest_irreducible_degree(uq("x^2 - 1")), 1);
}

TEST(UniFactor, KnownFactorizationsOverQ) {
  EXPECT_EQ(shown(factor_uni(uq("x^4 + 4"))), (Shown{{"2 - 2*x + x^2", 1}, {"2 + 2*x + x^2", 1}}));
  EXPECT_EQ(nu_count(uq("x^4 - 10*x^2 + 1")), 1u);  // reducible modulo every prime
  EXPECT_EQ(nu_count(uq("x^12 - 1")), 6u);
  EXPECT_EQ(nu_count(uq("x^24 - 1")), 8u);
  EXPECT_EQ(nu_count(uq("(x - 1/2)^3 * (3*x^2 + 1)")), 4u);

  const auto fm = factor_uni(uq("-6*x^2 + 6"));
  EXPECT_EQ(fm.unit, Rational(-6));
  EXPECT_EQ(shown(fm), (Shown{{"-1 + x", 1}, {"1 + x", 1}}));
}

TEST(UniFactor, KnownFactorizationsOverFp) {
  EXPECT_EQ(nu_count(up("x^8 + x", 2)), 4u);  // x and the three irreducibles of degree 1, 3, 3
  EXPECT_EQ(nu_count(up("x^9 - x", 3)), 6u);  // three linear and three quadratic
  EXPECT_EQ(nu_count(up("x^6 + 1", 2)), 4u);  // (x + 1)^2 (x^2 + x + 1)^2
  EXPECT_EQ(nu_count(up("x^4 + 1", 3)), 2u);
  EXPECT_EQ(nu_count(up("x^3 + 2", 5)), 2u);  // (x - 2)(x^2 + 2x + 4)
  const auto big = FieldDescriptor::prime(2147483647);
  const auto f = parse_unipoly<Fp>("(x^2 + 7)*(x + 3)^2*(x^3 + x + 1)", big);
  expect_well_formed(f, factor_uni(f));
}

TEST(UniFactor, Errors) {
  try {
    factor_uni(UniPoly<Rational>(kQ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
  }
  try {
    factor_uni(uq("x^25 + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeCapExceeded);
  }
  try {
    smallest_irreducible_degree(uq("7"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantInput);
  }
}

TEST(UniFactorProperty, RandomProductsOverQ) {
  std::mt19937_64 rng(201);
  std::uniform_int_distribution<int> parts(1, 4), deg(1, 3);
  for (int t = 0; t < 80; ++t) {
    UniPoly<Rational> a = UniPoly<Rational>::one(kQ), b = UniPoly<Rational>::one(kQ);
    const int k = parts(rng);
    for (int i = 0; i < k; ++i) (i % 2 ? a : b) *= random_uni<Rational>(rng, kQ, deg(rng), 4);
    const auto f = a * b;
    const auto fm = factor_uni(f);
    expect_well_formed(f, fm);
    for (const auto& [g, m] : fm.factors) EXPECT_TRUE(irreducible_q_slow(g)) << format_poly(g);
    EXPECT_EQ(fm.count(), nu_count(a) + nu_count(b));
  }
}

TEST(UniFactorProperty, RandomPolynomialsOverFp) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> deg(1, 8);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto fd = FieldDescriptor::prime(p);
    for (int t = 0; t < 60; ++t) {
      const auto a = random_uni<Fp>(rng, fd, deg(rng), p);
      const auto b = random_uni<Fp>(rng, fd, deg(rng) / 2, p);
      const auto f = a * b;
      const auto fm = factor_uni(f);
      expect_well_formed(f, fm);
      for (const auto& [g, m] : fm.factors) EXPECT_TRUE(irreducible_fp_slow(g)) << format_poly(g);
      EXPECT_EQ(fm.count(), trial_division_count(f)) << format_poly(f);
      EXPECT_EQ(fm.count(), nu_count(a) + nu_count(b));
    }
  }
}

TEST(UniFactorProperty, PerfectPowersInCharacteristicP) {
  std::mt19937_64 rng(203);
  for (std::uint32_t p : {2u, 3u}) {
    const auto fd = FieldDescriptor::prime(p);
    for (int t = 0; t < 30; ++t) {
      const auto g = random_uni<Fp>(rng, fd, 1 + t % 3, p);
      const auto h = random_uni<Fp>(rng, fd, 1, p);
      const auto f = pow(g, p) * pow(h, 2 * p) * g;
      const auto fm = factor_uni(f);
      expect_well_formed(f, fm);
      EXPECT_EQ(fm.count(), (p + 1) * nu_count(g) + 2 * p * nu_count(h));
    }
  }
}
