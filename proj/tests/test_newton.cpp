#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace pbtest;

using Slopes = std::map<Rational, std::int64_t>;

TEST(NewtonPolygon, Examples) {
  const auto np = build_polygon(bq("1 + x*y + y^3"));
  EXPECT_EQ(np.vertices, (std::vector<NewtonPoint>{{0, 0}, {1, -1}, {3, 0}}));
  EXPECT_EQ(np.edges, (std::vector<NewtonEdge>{{1, Rational(-1)}, {2, Rational(1, 2)}}));
  EXPECT_EQ(slope_multiset(np), (Slopes{{Rational(-1), 1}, {Rational(1, 2), 2}}));

  const auto flat = build_polygon(bq("1 + y^2"));
  EXPECT_EQ(flat.edges, (std::vector<NewtonEdge>{{2, Rational(0)}}));
  EXPECT_EQ(slope_multiset(flat), (Slopes{{Rational(0), 2}}));

  const auto f1 = build_polygon(f1_expanded(2, 3, 1));
  EXPECT_EQ(f1.points, (std::vector<NewtonPoint>{{0, -2}, {1, -1}, {2, 0}}));
  EXPECT_EQ(f1.vertices, (std::vector<NewtonPoint>{{0, -2}, {2, 0}}));
  EXPECT_EQ(f1.edges, (std::vector<NewtonEdge>{{2, Rational(1)}}));
}

TEST(NewtonPolygon, RootLocationExamples) {
  EXPECT_EQ(root_location(bq("1 + x*y + y^3")), (RootLocation{1, 0, 2}));
  EXPECT_EQ(root_location(bq("x^2 + x*y + y^2 + y^3")), (RootLocation{0, 0, 3}));
  EXPECT_EQ(root_location(bq("1 + y^2")), (RootLocation{0, 2, 0}));
}

TEST(NewtonPolygon, ProductSlopesAreUnion) {
  const auto f = bq("1 + y"), g = bq("x + y");
  EXPECT_EQ(slope_multiset(build_polygon(f * g)),
            merge_slopes(slope_multiset(build_polygon(f)), slope_multiset(build_polygon(g))));
  EXPECT_EQ(slope_multiset(build_polygon(f * g)), (Slopes{{Rational(0), 1}, {Rational(1), 1}}));
}

TEST(NewtonPolygon, Errors) {
  try {
    build_polygon(bq("y + x*y^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroConstantTerm);
  }
  try {
    build_polygon(bq("1 + x"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantInY);
  }
}

TEST(NewtonPolygon, SvgIsDeterministic) {
  const auto np = build_polygon(bq("1 + x*y + y^3"));
  const std::string a = render_svg(np), b = render_svg(build_polygon(bq("y^3 + x*y + 1")));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
  EXPECT_NE(a.find(">-1</text>"), std::string::npos);
  EXPECT_NE(a.find(">1/2</text>"), std::string::npos);
  EXPECT_NE(a.find("points=\"40,40 100,100 220,40\""), std::string::npos) << a;
  EXPECT_TRUE(a.ends_with("</svg>\n"));
}

TEST(NewtonProperty, StructuralInvariants) {
  std::mt19937_64 rng(301);
  const auto f5 = FieldDescriptor::prime(5);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_bi_fp(rng, f5, 1 + t % 6, 5);
    const auto np = build_polygon(f);
    ASSERT_FALSE(np.vertices.empty());
    EXPECT_EQ(np.vertices.front().i, 0);
    EXPECT_EQ(np.vertices.back().i, f.deg_y().value());
    std::int64_t widths = 0;
    for (std::size_t k = 0; k < np.edges.size(); ++k) {
      widths += np.edges[k].width;
      EXPECT_GT(np.edges[k].width, 0);
      if (k) EXPECT_LT(np.edges[k - 1].slope, np.edges[k].slope);
    }
    EXPECT_EQ(widths, f.deg_y().value());
    // Every point lies on or above the hull.
    for (const auto& p : np.points)
      for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k];
        const auto& b = np.vertices[k + 1];
        if (p.i < a.i || p.i > b.i) continue;
        EXPECT_GE(Rational(p.v), Rational(a.v) + np.edges[k].slope * Rational(p.i - a.i));
      }
    const auto r = root_location(f);
    EXPECT_EQ(r.inside + r.boundary + r.outside, f.deg_y().value());
  }
}

TEST(NewtonProperty, DominantCoefficientSplitsRoots) {
  std::mt19937_64 rng(302);
  const auto f3 = FieldDescriptor::prime(3);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto f = random_bi_fp(rng, f3, 1 + t % 6, 4);
    const auto n = f.deg_y().value();
    std::optional<std::int64_t> j;
    Degree best = Degree::neg_inf();
    bool tie = false;
    for (std::int64_t i = 0; i <= n; ++i) {
      const Degree d = f.coeff(static_cast<std::size_t>(i)).degree();
      if (d > best) {
        best = d;
        j = i;
        tie = false;
      } else if (d == best) {
        tie = true;
      }
    }
    if (tie) continue;
    ++checked;
    EXPECT_EQ(root_location(f), (RootLocation{*j, 0, n - *j})) << format_poly(f);
  }
  EXPECT_GT(checked, 300);
}

TEST(NewtonProperty, ProductMergesSlopes) {
  std::mt19937_64 rng(303);
  const auto f3 = FieldDescriptor::prime(3);
  for (int t = 0; t < 300; ++t) {
    const auto f = random_content_free(rng, f3, 4, 3);
    const auto g = random_content_free(rng, f3, 3, 3);
    EXPECT_EQ(slope_multiset(build_polygon(f * g)),
              merge_slopes(slope_multiset(build_polygon(f)), slope_multiset(build_polygon(g))))
        << format_poly(f) << " | " << format_poly(g);
  }
}
