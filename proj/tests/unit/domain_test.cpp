#include <gtest/gtest.h>

#include <cmath>

#include "chernkit/domain.hpp"
#include "chernkit/random.hpp"

namespace chernkit {
namespace {

double norm(const Point& p) {
  double s = 0.0;
  for (const Complex& z : p) s += std::norm(z);
  return std::sqrt(s);
}

TEST(Domain, Contains) {
  const Point p{{0.3, 0.4}, {0.0, 0.0}};  // |p| = 0.5
  EXPECT_TRUE(Domain::ball(0.5).contains(p));
  EXPECT_FALSE(Domain::ball(0.49).contains(p));
  EXPECT_TRUE(Domain::annulus(0.5, 2.0).contains(p));
  EXPECT_FALSE(Domain::annulus(0.6, 2.0).contains(p));
  EXPECT_TRUE(Domain::polydisc(0.5).contains(p));
  const Domain product = Domain::product({Domain::ball(0.4), Domain::ball(2.0)});
  EXPECT_FALSE(product.contains(p));
  EXPECT_TRUE(product.contains(Point{{0.3, 0.0}, {1.5, 1.0}}));
}

TEST(Domain, RejectsBadArguments) {
  EXPECT_THROW(Domain::ball(0.0), std::invalid_argument);
  EXPECT_THROW(Domain::annulus(2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Domain::product({}), std::invalid_argument);
  EXPECT_THROW(sample_domain(Domain::product({Domain::ball(1.0)}), 2, 3, 1), std::invalid_argument);
}

TEST(Domain, SamplesAreDeterministicAndInside) {
  const Domain domains[] = {Domain::ball(0.8), Domain::annulus(0.5, 2.0), Domain::polydisc(1.5),
                            Domain::product({Domain::ball(0.6), Domain::ball(2.0)})};
  for (const Domain& d : domains) {
    const auto a = sample_domain(d, 2, 200, 7);
    const auto b = sample_domain(d, 2, 200, 7);
    const auto c = sample_domain(d, 2, 200, 8);
    EXPECT_EQ(a, b) << d.to_string();
    EXPECT_NE(a, c) << d.to_string();
    for (const Point& p : a) EXPECT_TRUE(d.contains(p)) << d.to_string();
  }
  for (const Point& p : sample_domain(Domain::annulus(0.5, 2.0), 3, 200, 9)) {
    EXPECT_GE(norm(p), 0.5);
    EXPECT_LE(norm(p), 2.0);
  }
}

TEST(Random, UniformAndNormalMoments) {
  Rng rng(5);
  double su = 0.0;
  double sn = 0.0;
  double sn2 = 0.0;
  double sw2 = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double x = rng.normal();
    sn += x;
    sn2 += x * x;
    sw2 += std::norm(rng.complex_normal());
  }
  EXPECT_NEAR(su / N, 0.5, 0.005);
  EXPECT_NEAR(sn / N, 0.0, 0.01);
  EXPECT_NEAR(sn2 / N, 1.0, 0.01);
  EXPECT_NEAR(sw2 / N, 1.0, 0.01);
}

TEST(Random, SplitStreamsDiffer) {
  EXPECT_NE(Rng::split(1, 0), Rng::split(1, 1));
  EXPECT_NE(Rng::split(1, 0), Rng::split(2, 0));
  EXPECT_EQ(Rng::split(3, 4), Rng::split(3, 4));
  Rng a(Rng::split(1, 0));
  Rng b(Rng::split(1, 1));
  EXPECT_NE(a.uniform(), b.uniform());
}

}  // namespace
}  // namespace chernkit
