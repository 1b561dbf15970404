#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gtq/phasespace.hpp"

using namespace gtq::phasespace;
namespace alg = gtq::algebra;

namespace {

std::mt19937_64 rng(9876);

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

alg::AlgebraElement random_element() {
  return {uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
}

alg::GroupElement random_group() {
  return alg::make_group_element({uniform(-2, 2), uniform(-2, 2)},
                                 uniform(-M_PI, M_PI),
                                 std::exp(uniform(-2, 2)));
}

PhasePoint random_point() {
  const double radius = std::exp(uniform(std::log(0.1), std::log(10.0)));
  const double angle = uniform(-M_PI, M_PI);
  return make_phase_point({radius * std::cos(angle), radius * std::sin(angle)},
                          {uniform(-2, 2), uniform(-2, 2)});
}

}  // namespace

TEST_CASE("phase point validation") {
  CHECK_THROWS_AS(make_phase_point({0, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_phase_point({0.4, 0}, {0, 0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(make_phase_point({std::nan(""), 1}, {0, 0}), std::invalid_argument);
  CHECK_NOTHROW(make_phase_point({1e-200, 0}, {0, 0}));
}

TEST_CASE("group action on phase space") {
  const PhasePoint pt = make_phase_point({1, 0}, {0, 1});
  const PhasePoint same = act(alg::identity(), pt);
  CHECK(same.x == pt.x);
  CHECK(same.p == pt.p);

  // ((0,0), pi/2, 2): x -> (0, 2), p -> (-1/2, 0).
  const PhasePoint moved = act(alg::make_group_element({0, 0}, M_PI_2, 2.0), pt);
  CHECK(moved.x.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(moved.x.y() == doctest::Approx(2.0));
  CHECK(moved.p.x() == doctest::Approx(-0.5));
  CHECK(moved.p.y() == doctest::Approx(0.0).epsilon(1e-15));

  for (int i = 0; i < 1000; ++i) {
    const alg::GroupElement g = random_group();
    const alg::GroupElement h = random_group();
    const PhasePoint p = random_point();
    const PhasePoint lhs = act(alg::product(g, h), p);
    const PhasePoint rhs = act(g, act(h, p));
    CHECK((lhs.x - rhs.x).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((lhs.p - rhs.p).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("symplectic form") {
  const TangentVector dx{1, 0, 0, 0};
  const TangentVector dy{0, 1, 0, 0};
  const TangentVector dpx{0, 0, 1, 0};
  const TangentVector dpy{0, 0, 0, 1};
  CHECK(symplectic_form(dx, dpx) == 1.0);
  CHECK(symplectic_form(dy, dpy) == 1.0);
  CHECK(symplectic_form(dx, dpy) == 0.0);
  CHECK(symplectic_form(dx, dy) == 0.0);

  for (int i = 0; i < 100; ++i) {
    const TangentVector v{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    const TangentVector w{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    CHECK(symplectic_form(v, v) == 0.0);
    CHECK(symplectic_form(v, w) == doctest::Approx(-symplectic_form(w, v)).epsilon(1e-14));
    // Matrix and bilinear-form views agree.
    const Eigen::Vector4d ev{v.dx, v.dy, v.dpx, v.dpy};
    const Eigen::Vector4d ew{w.dx, w.dy, w.dpx, w.dpy};
    CHECK(ev.dot(symplectic_matrix() * ew) ==
          doctest::Approx(symplectic_form(v, w)).epsilon(1e-14));
  }
}

TEST_CASE("action jacobian is symplectic") {
  CHECK(action_jacobian(alg::identity()).isIdentity(0.0));

  const Eigen::Matrix4d dil = action_jacobian(alg::make_group_element({0, 0}, 0.0, 3.0));
  CHECK(dil(0, 0) == doctest::Approx(3.0));
  CHECK(dil(1, 1) == doctest::Approx(3.0));
  CHECK(dil(2, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(dil(3, 3) == doctest::Approx(1.0 / 3.0));

  const Eigen::Matrix4d omega = symplectic_matrix();
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix4d m = action_jacobian(random_group());
    CHECK((m.transpose() * omega * m - omega).cwiseAbs().maxCoeff() <= 1e-12);
  }

  // Finite differences of the action recover the analytic Jacobian.
  for (int i = 0; i < 50; ++i) {
    const alg::GroupElement g = random_group();
    const PhasePoint pt = random_point();
    const Eigen::Matrix4d m = action_jacobian(g);
    const double h = 1e-5;
    for (int axis = 0; axis < 4; ++axis) {
      Eigen::Vector4d zp{pt.x.x(), pt.x.y(), pt.p.x(), pt.p.y()};
      Eigen::Vector4d zm = zp;
      zp(axis) += h;
      zm(axis) -= h;
      const PhasePoint fp = act(g, {{zp(0), zp(1)}, {zp(2), zp(3)}});
      const PhasePoint fm = act(g, {{zm(0), zm(1)}, {zm(2), zm(3)}});
      const Eigen::Vector4d col{(fp.x.x() - fm.x.x()) / (2 * h),
                                (fp.x.y() - fm.x.y()) / (2 * h),
                                (fp.p.x() - fm.p.x()) / (2 * h),
                                (fp.p.y() - fm.p.y()) / (2 * h)};
      CHECK((col - m.col(axis)).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("fundamental field formula and oracle") {
  const PhasePoint pt = make_phase_point({1, 0}, {0, 0});
  const TangentVector zero = fundamental_field({0, 0, 0, 0}, pt);
  CHECK(zero.dx == 0.0);
  CHECK(zero.dy == 0.0);
  CHECK(zero.dpx == 0.0);
  CHECK(zero.dpy == 0.0);

  // Pure rotation at (x, p) = ((1,0), (0,0)).
  const TangentVector rot = fundamental_field({0, 0, 1, 0}, pt);
  CHECK(rot.dx == 0.0);
  CHECK(rot.dy == -1.0);
  CHECK(rot.dpx == 0.0);
  CHECK(rot.dpy == 0.0);

  for (int i = 0; i < 500; ++i) {
    const alg::AlgebraElement a = random_element();
    const PhasePoint p = random_point();
    CHECK(tangent_distance(fundamental_field(a, p),
                           fundamental_field_fd(a, p, 1e-5)) <= 1e-6);
  }
}

TEST_CASE("finite-difference field converges at second order") {
  for (int i = 0; i < 20; ++i) {
    const alg::AlgebraElement a = random_element();
    const PhasePoint p = random_point();
    const TangentVector exact = fundamental_field(a, p);
    const double e1 = tangent_distance(exact, fundamental_field_fd(a, p, 1e-3));
    const double e2 = tangent_distance(exact, fundamental_field_fd(a, p, 5e-4));
    if (e1 > 1e-10) {
      CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.3));
    }
  }
}

TEST_CASE("finite-difference field detects puncture crossing") {
  const TangentVector v =
      fundamental_field_fd({0, 0, 0, 0}, make_phase_point({1, 0}, {0, 0}), 1e-5);
  CHECK(v.dx == 0.0);

  // A dilation flow immediately below the floor radius must refuse.
  const PhasePoint close = make_phase_point({0.5000001, 0}, {0, 0}, 0.5);
  CHECK_THROWS_AS(fundamental_field_fd({0, 0, 0, 1}, close, 1e-5, 0.5),
                  std::domain_error);
}

TEST_CASE("gamma is linear and respects brackets") {
  for (int i = 0; i < 500; ++i) {
    const alg::AlgebraElement a = random_element();
    const alg::AlgebraElement b = random_element();
    const PhasePoint p = random_point();

    CHECK(tangent_distance(fundamental_field(a + b, p),
                           fundamental_field(a, p) + fundamental_field(b, p)) <=
          1e-12);
    CHECK(tangent_distance(fundamental_field_bracket(a, b, p),
                           fundamental_field(alg::bracket(a, b), p)) <= 1e-12);
  }
}

TEST_CASE("momentum map values") {
  const PhasePoint pt = make_phase_point({3, 4}, {0.3, -0.7});
  CHECK(momentum_map({0, 0, 0, 0}, pt) == 0.0);
  CHECK(momentum_map({1, 2, 0, 0}, pt) == doctest::Approx(11.0));

  const PhasePoint ang = make_phase_point({1, 0}, {0, 1});
  CHECK(momentum_map({0, 0, 1, 0}, ang) == doctest::Approx(1.0));
}

TEST_CASE("observable gradients match finite differences") {
  for (int i = 0; i < 200; ++i) {
    const alg::AlgebraElement a = random_element();
    const PhasePoint p = random_point();
    const Observable with = momentum_observable(a, true);
    const Observable without = momentum_observable(a, false);
    CHECK((observable_gradient(with, p) - observable_gradient(without, p))
              .cwiseAbs()
              .maxCoeff() <= 1e-6);
  }
}

TEST_CASE("hamiltonian field") {
  const PhasePoint pt = make_phase_point({1, 0}, {0, 0});

  Observable constant;
  constant.value = [](const PhasePoint&) { return 42.0; };
  const TangentVector zero = hamiltonian_field(constant, pt);
  CHECK(std::abs(zero.dx) <= 1e-10);
  CHECK(std::abs(zero.dpy) <= 1e-10);

  // Angular momentum at ((1,0),(0,0)): xi = -gamma = (0, 1, 0, 0).
  const TangentVector xi = hamiltonian_field(momentum_observable({0, 0, 1, 0}), pt);
  CHECK(xi.dx == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(xi.dy == doctest::Approx(1.0));
  CHECK(xi.dpx == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(xi.dpy == doctest::Approx(0.0).epsilon(1e-14));

  for (int i = 0; i < 500; ++i) {
    const alg::AlgebraElement a = random_element();
    const PhasePoint p = random_point();
    const TangentVector field = hamiltonian_field(momentum_observable(a), p);

    // Defining property against a random probe vector.
    const TangentVector w{uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2)};
    const Eigen::Vector4d grad = observable_gradient(momentum_observable(a), p);
    const double df_w = grad(0) * w.dx + grad(1) * w.dy + grad(2) * w.dpx + grad(3) * w.dpy;
    CHECK(std::abs(symplectic_form(field, w) - df_w) <= 1e-10);

    CHECK(tangent_distance(field, -fundamental_field(a, p)) <= 1e-12);
    CHECK(tangent_distance(hamiltonian_field(momentum_observable(a, false), p),
                           -fundamental_field(a, p)) <= 1e-8);
  }
}

TEST_CASE("non-finite gradients are rejected") {
  Observable bad;
  bad.value = [](const PhasePoint&) { return 0.0; };
  bad.gradient = [](const PhasePoint&) {
    return Eigen::Vector4d{std::nan(""), 0, 0, 0};
  };
  const PhasePoint pt = make_phase_point({1, 0}, {0, 0});
  CHECK_THROWS_AS(hamiltonian_field(bad, pt), std::invalid_argument);
  CHECK_THROWS_AS(poisson(bad, bad, pt), std::invalid_argument);
}

TEST_CASE("poisson bracket") {
  const PhasePoint pt = make_phase_point({2, 5}, {0.4, 1.2});
  const Observable f = momentum_observable({1, 0, 0, 0});
  CHECK(poisson(f, f, pt) == 0.0);

  // {x, x p_y - y p_x} = -y.
  const Observable ang = momentum_observable({0, 0, 1, 0});
  CHECK(poisson(f, ang, pt) == doctest::Approx(-5.0));
  CHECK(poisson(f, ang, pt) ==
        doctest::Approx(momentum_map({0, -1, 0, 0}, pt)));

  Observable x_obs;
  x_obs.value = [](const PhasePoint& p) { return p.x.x(); };
  Observable px_obs;
  px_obs.value = [](const PhasePoint& p) { return p.p.x(); };
  CHECK(poisson(x_obs, px_obs, pt) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("momentum map is a poisson homomorphism") {
  for (int i = 0; i < 1000; ++i) {
    const alg::AlgebraElement a = random_element();
    const alg::AlgebraElement b = random_element();
    const PhasePoint p = random_point();
    const double lhs = poisson(momentum_observable(a), momentum_observable(b), p);
    CHECK(std::abs(lhs - momentum_map(alg::bracket(a, b), p)) <= 1e-12);
  }
}

TEST_CASE("effectiveness probe") {
  std::vector<PhasePoint> pts;
  for (int i = 0; i < 16; ++i) {
    pts.push_back(random_point());
  }
  pts.push_back(make_phase_point({1, 0}, {0, 0}));

  CHECK(effectiveness_probe(alg::identity(), pts));
  CHECK_FALSE(effectiveness_probe(alg::make_group_element({0, 0}, M_PI, 1.0), pts));

  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(effectiveness_probe(random_group(), pts));
  }
  CHECK_THROWS_AS(effectiveness_probe(alg::identity(), {}), std::invalid_argument);
}

TEST_CASE("plane case: cocycle and central extension") {
  for (int i = 0; i < 500; ++i) {
    alg::HeisenbergAlgebraElement a;
    a.a = {uniform(-2, 2), uniform(-2, 2)};
    a.b = {uniform(-2, 2), uniform(-2, 2)};
    a.r = uniform(-2, 2);
    alg::HeisenbergAlgebraElement b;
    b.a = {uniform(-2, 2), uniform(-2, 2)};
    b.b = {uniform(-2, 2), uniform(-2, 2)};
    b.r = uniform(-2, 2);
    const PhasePoint p = random_point();

    // The translation algebra is abelian, so the bracket image vanishes and
    // the unextended map misses by exactly the cocycle.
    const double pois = poisson(r2_momentum_observable(a), r2_momentum_observable(b), p);
    const double cocycle = a.b.dot(b.a) - b.b.dot(a.a);
    CHECK(std::abs(pois - cocycle) <= 1e-12);

    // The extended map absorbs it.
    CHECK(std::abs(pois - r2_momentum(alg::heis_bracket(a, b), p)) <= 1e-12);
  }

  // Worked case: a = (1,0) against b' = (1,0) gives |cocycle| = 1.
  alg::HeisenbergAlgebraElement x;
  x.a = {1, 0};
  alg::HeisenbergAlgebraElement y;
  y.b = {1, 0};
  const PhasePoint p = make_phase_point({2, 1}, {0.5, 0.5});
  CHECK(std::abs(poisson(r2_momentum_observable(x), r2_momentum_observable(y), p)) ==
        doctest::Approx(1.0));
}

TEST_CASE("plane case: constant fundamental fields") {
  alg::HeisenbergAlgebraElement a;
  a.a = {1.5, -0.5};
  a.b = {0.25, 2.0};
  const TangentVector gamma = r2_fundamental_field(a);
  CHECK(gamma.dx == -1.5);
  CHECK(gamma.dy == 0.5);
  CHECK(gamma.dpx == 0.25);
  CHECK(gamma.dpy == 2.0);

  // Flow of the translation action reproduces the field exactly.
  const PhasePoint pt = make_phase_point({1, 1}, {0, 0});
  const double h = 0.5;  // affine action: exact at any step
  const PhasePoint fwd = r2_act(-h * a.a, -h * a.b, pt);
  const PhasePoint bwd = r2_act(h * a.a, h * a.b, pt);
  CHECK((fwd.x.x() - bwd.x.x()) / (2 * h) == doctest::Approx(gamma.dx));
  CHECK((fwd.p.y() - bwd.p.y()) / (2 * h) == doctest::Approx(gamma.dpy));
}
