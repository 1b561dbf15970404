#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gtq/algebra.hpp"

using namespace gtq::algebra;

namespace {

std::mt19937_64 rng(12345);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

AlgebraElement random_element() {
  return {uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
}

GroupElement random_group(GroupVariant variant = GroupVariant::Base) {
  return make_group_element({uniform(-2, 2), uniform(-2, 2)},
                            uniform(-M_PI, M_PI), std::exp(uniform(-2, 2)),
                            variant);
}

// Composite Simpson quadrature, the independent oracle for the exponential's
// translation part u(1) = int_0^1 e^{-s r} A_{s theta} b ds.
Eigen::Vector2d exp_u_quadrature(const AlgebraElement& a, int panels) {
  const Eigen::Vector2d b{a.b1, a.b2};
  auto integrand = [&](double s) -> Eigen::Vector2d {
    return std::exp(-s * a.r) * (rotation_matrix(s * a.theta) * b);
  };
  Eigen::Vector2d sum = integrand(0.0) + integrand(1.0);
  const double h = 1.0 / panels;
  for (int i = 1; i < panels; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
  }
  return sum * (h / 3.0);
}

}  // namespace

TEST_CASE("rotation matrix basics") {
  CHECK(rotation_matrix(0.0).isIdentity(0.0));

  const Eigen::Matrix2d quarter = rotation_matrix(M_PI_2);
  CHECK(quarter(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(quarter(0, 1) == doctest::Approx(-1.0));
  CHECK(quarter(1, 0) == doctest::Approx(1.0));
  CHECK(quarter(1, 1) == doctest::Approx(0.0).epsilon(1e-15));

  // Angle addition.
  const Eigen::Matrix2d lhs = rotation_matrix(0.3) * rotation_matrix(0.4);
  CHECK((lhs - rotation_matrix(0.7)).cwiseAbs().maxCoeff() <= 1e-15);

  for (int i = 0; i < 100; ++i) {
    const Eigen::Matrix2d m = rotation_matrix(uniform(-10, 10));
    CHECK((m * m.transpose() - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-14));
  }

  CHECK_THROWS_AS(rotation_matrix(std::nan("")), std::invalid_argument);
}

TEST_CASE("group product") {
  const GroupElement g = make_group_element({3, -1}, 0.7, 2.0);
  CHECK(group_distance(product(identity(), g), g) == 0.0);
  CHECK(group_distance(product(g, identity()), g) == 0.0);

  // ((1,0), pi/2, 2) . ((0,1), 0, 1): u' rotates to (-1,0), scales by 1/2.
  const GroupElement a = make_group_element({1, 0}, M_PI_2, 2.0);
  const GroupElement b = make_group_element({0, 1}, 0.0, 1.0);
  const GroupElement ab = product(a, b);
  CHECK(ab.u.x() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ab.u.y() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ab.theta == doctest::Approx(M_PI_2));
  CHECK(ab.lambda == doctest::Approx(2.0));

  const GroupElement c = make_group_element({1, 2}, 1.1, 3.0);
  CHECK(group_distance(product(c, inverse(c)), identity()) <= 1e-15);
  CHECK(group_distance(product(inverse(c), c), identity()) <= 1e-15);

  GroupElement cover = c;
  cover.variant = GroupVariant::Cover;
  CHECK_THROWS_AS(product(c, cover), std::invalid_argument);
}

TEST_CASE("group inverse") {
  CHECK(group_distance(inverse(identity()), identity()) == 0.0);

  // Solve u + la^-1 A_th u' = 0 for ((1,0), pi/2, 2): u' = (0, 2).
  const GroupElement g = make_group_element({1, 0}, M_PI_2, 2.0);
  const GroupElement gi = inverse(g);
  CHECK(gi.u.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(gi.u.y() == doctest::Approx(2.0));
  CHECK(gi.theta == doctest::Approx(-M_PI_2));
  CHECK(gi.lambda == doctest::Approx(0.5));

  for (int i = 0; i < 200; ++i) {
    const GroupElement h = random_group();
    CHECK(group_distance(inverse(inverse(h)), h) <= 1e-13);
  }
}

TEST_CASE("group associativity") {
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = random_group();
    const GroupElement h = random_group();
    const GroupElement k = random_group();
    CHECK(group_distance(product(product(g, h), k), product(g, product(h, k))) <=
          1e-12);
  }
}

TEST_CASE("equality semantics per variant") {
  const GroupElement base = make_group_element({1, 1}, 0.4, 2.0);
  const GroupElement wrapped =
      make_group_element({1, 1}, 0.4 + 2.0 * M_PI, 2.0);
  CHECK(approx_equal(base, wrapped, 1e-12));

  const GroupElement cover = make_group_element({1, 1}, 0.4, 2.0, GroupVariant::Cover);
  const GroupElement cover_wrapped =
      make_group_element({1, 1}, 0.4 + 2.0 * M_PI, 2.0, GroupVariant::Cover);
  CHECK_FALSE(approx_equal(cover, cover_wrapped, 1e-12));
  CHECK_FALSE(approx_equal(base, cover, 1e-12));

  CHECK_THROWS_AS(make_group_element({0, 0}, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_group_element({0, 0}, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("lie bracket") {
  const AlgebraElement a{1, 2, 0.5, -0.3};
  const AlgebraElement aa = bracket(a, a);
  CHECK(aa.b1 == 0.0);
  CHECK(aa.b2 == 0.0);

  // [e_b1, e_theta] = -e_b2.
  const AlgebraElement r = bracket({1, 0, 0, 0}, {0, 0, 1, 0});
  CHECK(r.b1 == 0.0);
  CHECK(r.b2 == -1.0);
  CHECK(r.theta == 0.0);
  CHECK(r.r == 0.0);

  // Rotation and dilation generators commute.
  const AlgebraElement z = bracket({0, 0, 1, 0}, {0, 0, 0, 1});
  CHECK(z.b1 == 0.0);
  CHECK(z.b2 == 0.0);

  // Image always lies in the translation part.
  for (int i = 0; i < 100; ++i) {
    const AlgebraElement br = bracket(random_element(), random_element());
    CHECK(br.theta == 0.0);
    CHECK(br.r == 0.0);
  }
}

TEST_CASE("jacobi identity") {
  for (int i = 0; i < 1000; ++i) {
    const AlgebraElement a = random_element();
    const AlgebraElement b = random_element();
    const AlgebraElement c = random_element();
    const AlgebraElement sum = bracket(a, bracket(b, c)) +
                               bracket(b, bracket(c, a)) +
                               bracket(c, bracket(a, b));
    CHECK(std::abs(sum.b1) <= 1e-12);
    CHECK(std::abs(sum.b2) <= 1e-12);
  }
}

TEST_CASE("exponential basis cases are exact") {
  for (double c : {1.0, -0.75, 2.0, 0.125}) {
    const GroupElement e1 = exp({c, 0, 0, 0});
    CHECK(e1.u.x() == c);
    CHECK(e1.u.y() == 0.0);
    CHECK(e1.theta == 0.0);
    CHECK(e1.lambda == 1.0);

    const GroupElement e2 = exp({0, c, 0, 0});
    CHECK(e2.u.x() == 0.0);
    CHECK(e2.u.y() == c);

    const GroupElement e3 = exp({0, 0, c, 0});
    CHECK(e3.u.x() == 0.0);
    CHECK(e3.u.y() == 0.0);
    CHECK(e3.theta == c);
    CHECK(e3.lambda == 1.0);

    const GroupElement e4 = exp({0, 0, 0, c});
    CHECK(e4.u.x() == 0.0);
    CHECK(e4.theta == 0.0);
    CHECK(e4.lambda == std::exp(c));
  }
  CHECK(group_distance(exp({0, 0, 0, 0}), identity()) == 0.0);
}

TEST_CASE("exponential against the quadrature oracle") {
  // Closed form for (1, 0, pi/2, 0): u = (2/pi, 2/pi).
  const GroupElement g = exp({1, 0, M_PI_2, 0});
  CHECK(g.u.x() == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  CHECK(g.u.y() == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  CHECK(g.theta == doctest::Approx(M_PI_2));
  CHECK(g.lambda == doctest::Approx(1.0));

  for (int i = 0; i < 50; ++i) {
    const AlgebraElement a = random_element();
    const Eigen::Vector2d oracle = exp_u_quadrature(a, 2000);
    CHECK((exp(a).u - oracle).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("exponential one-parameter subgroup property") {
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement a = random_element();
    const double t = uniform(-2, 2);
    const double s = uniform(-2, 2);
    CHECK(group_distance(product(exp(t * a), exp(s * a)), exp((t + s) * a)) <=
          1e-10);
  }
}

TEST_CASE("exponential series branch is continuous at the switch") {
  // Straddle the ||M|| = 1e-4 branch point with a one-parameter family.
  const AlgebraElement dir{0.7, -0.4, 1.0, 0.8};
  for (double eps : {0.9e-4, 1.0e-4, 1.1e-4}) {
    const AlgebraElement small = eps * dir;
    const Eigen::Vector2d oracle = exp_u_quadrature(small, 2000);
    CHECK((exp(small).u - oracle).cwiseAbs().maxCoeff() <= 1e-16);
  }
}

TEST_CASE("bch commutator check") {
  const AlgebraElement a{1, 0, 0, 0};
  CHECK(bch_commutator_check(a, a, 0.5, 0.5) <= 1e-15);
  CHECK(bch_commutator_check(a, {0, 0, 1, 0}, 0.0, 0.5) <= 1e-15);

  // Generic pair: distances shrink eightfold per halving (cubic order).
  const AlgebraElement b{0, 0, 1, 0};
  std::vector<double> d;
  for (int k = 3; k <= 10; ++k) {
    d.push_back(bch_commutator_check(a, b, std::ldexp(1.0, -k), std::ldexp(1.0, -k)));
  }
  double st = 0, sd = 0, stt = 0, std_ = 0;
  for (int k = 0; k < 8; ++k) {
    const double lt = -(k + 3.0);
    const double ld = std::log2(d[k]);
    st += lt; sd += ld; stt += lt * lt; std_ += lt * ld;
  }
  const double slope = (8 * std_ - st * sd) / (8 * stt - st * st);
  CHECK(slope >= 2.9);
  for (int k = 0; k + 1 < 8; ++k) {
    CHECK(d[k] / d[k + 1] == doctest::Approx(8.0).epsilon(0.25));
  }

  CHECK_THROWS_AS(bch_commutator_check(a, b, 1.5, 0.5), std::invalid_argument);
}

TEST_CASE("covering projection commutes with product") {
  for (int i = 0; i < 200; ++i) {
    // Angles over several turns so the mod-2pi reduction has work to do.
    GroupElement g = random_group(GroupVariant::Cover);
    GroupElement h = random_group(GroupVariant::Cover);
    g.theta = uniform(-6.0 * M_PI, 6.0 * M_PI);
    h.theta = uniform(-6.0 * M_PI, 6.0 * M_PI);

    const GroupElement lhs = project_to_base(product(g, h));
    // Reduce first, then multiply in the base group.
    const GroupElement rhs =
        product(make_group_element(g.u, wrap_angle(g.theta), g.lambda),
                make_group_element(h.u, wrap_angle(h.theta), h.lambda));
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

TEST_CASE("heisenberg group product") {
  const HeisenbergGroupElement g{{1, -2}, {0.5, 3}, 0.25};
  const HeisenbergGroupElement e{};
  CHECK(heis_distance(heis_product(e, g), g) == 0.0);
  CHECK(heis_distance(heis_product(g, e), g) == 0.0);

  // ((1,0),(0,0),0) . ((0,0),(1,0),0) has central part -1/2.
  const HeisenbergGroupElement a{{1, 0}, {0, 0}, 0};
  const HeisenbergGroupElement b{{0, 0}, {1, 0}, 0};
  const HeisenbergGroupElement ab = heis_product(a, b);
  CHECK(ab.u.x() == 1.0);
  CHECK(ab.v.x() == 1.0);
  CHECK(ab.t == -0.5);

  for (int i = 0; i < 200; ++i) {
    const HeisenbergGroupElement x{{uniform(-2, 2), uniform(-2, 2)},
                                   {uniform(-2, 2), uniform(-2, 2)},
                                   uniform(-2, 2)};
    const HeisenbergGroupElement y{{uniform(-2, 2), uniform(-2, 2)},
                                   {uniform(-2, 2), uniform(-2, 2)},
                                   uniform(-2, 2)};
    const HeisenbergGroupElement z{{uniform(-2, 2), uniform(-2, 2)},
                                   {uniform(-2, 2), uniform(-2, 2)},
                                   uniform(-2, 2)};
    CHECK(heis_distance(heis_product(heis_product(x, y), z),
                        heis_product(x, heis_product(y, z))) <= 1e-12);
  }
}

TEST_CASE("heisenberg bracket") {
  const HeisenbergAlgebraElement a{{1, 2}, {3, -1}, 0.5};
  const HeisenbergAlgebraElement aa = heis_bracket(a, a);
  CHECK(aa.a.norm() == 0.0);
  CHECK(aa.b.norm() == 0.0);
  CHECK(aa.r == 0.0);

  const HeisenbergAlgebraElement x{{1, 0}, {0, 0}, 0};
  const HeisenbergAlgebraElement y{{0, 0}, {1, 0}, 0};
  CHECK(std::abs(heis_bracket(x, y).r) == 1.0);

  // Central elements commute with everything.
  const HeisenbergAlgebraElement central{{0, 0}, {0, 0}, 1.7};
  const HeisenbergAlgebraElement br = heis_bracket(central, a);
  CHECK(br.r == 0.0);
}
