#include "gtq/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gtq::algebra {

namespace {

const Eigen::Matrix2d kJ = (Eigen::Matrix2d() << 0, -1, 1, 0).finished();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_finite(const AlgebraElement& a) {
  require_finite(a.b1, "b1");
  require_finite(a.b2, "b2");
  require_finite(a.theta, "theta");
  require_finite(a.r, "r");
}

// phi1(M) = M^-1 (e^M - I) = sum_k M^k / (k+1)!. M always has the
// rotation-scaling form a I + b J, so e^M = e^a (cos b I + sin b J) and
// M^-1 = (a I - b J) / (a^2 + b^2).
Eigen::Matrix2d phi1_rotation_scaling(double a, double b) {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d m = a * id + b * kJ;
  if (m.norm() < 1e-4) {
    Eigen::Matrix2d term = id;
    Eigen::Matrix2d sum = id;
    double factorial = 1.0;
    for (int k = 1; k < 12; ++k) {
      term = term * m;
      factorial *= static_cast<double>(k + 1);
      sum += term / factorial;
    }
    return sum;
  }
  const Eigen::Matrix2d exp_m = std::exp(a) * (std::cos(b) * id + std::sin(b) * kJ);
  const Eigen::Matrix2d m_inv = (a * id - b * kJ) / (a * a + b * b);
  return m_inv * (exp_m - id);
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.b1 + b.b1, a.b2 + b.b2, a.theta + b.theta, a.r + b.r};
}

AlgebraElement operator-(const AlgebraElement& a) {
  return {-a.b1, -a.b2, -a.theta, -a.r};
}

AlgebraElement operator*(double t, const AlgebraElement& a) {
  return {t * a.b1, t * a.b2, t * a.theta, t * a.r};
}

GroupElement make_group_element(const Eigen::Vector2d& u, double theta,
                                double lambda, GroupVariant variant) {
  require_finite(u.x(), "u[0]");
  require_finite(u.y(), "u[1]");
  require_finite(theta, "theta");
  require_finite(lambda, "lambda");
  if (lambda <= 0.0) {
    throw std::invalid_argument("lambda must be positive");
  }
  return {u, theta, lambda, variant};
}

GroupElement identity(GroupVariant variant) {
  return {Eigen::Vector2d::Zero(), 0.0, 1.0, variant};
}

Eigen::Matrix2d rotation_matrix(double theta) {
  require_finite(theta, "theta");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d m;
  m << c, -s, s, c;
  return m;
}

GroupElement product(const GroupElement& g, const GroupElement& h) {
  if (g.variant != h.variant) {
    throw std::invalid_argument("product: group variant mismatch");
  }
  GroupElement out;
  out.u = g.u + (1.0 / g.lambda) * (rotation_matrix(g.theta) * h.u);
  out.theta = g.theta + h.theta;
  out.lambda = g.lambda * h.lambda;
  out.variant = g.variant;
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out;
  out.u = -g.lambda * (rotation_matrix(-g.theta) * g.u);
  out.theta = -g.theta;
  out.lambda = 1.0 / g.lambda;
  out.variant = g.variant;
  return out;
}

double wrap_angle(double theta) {
  return std::remainder(theta, 2.0 * M_PI);
}

double group_distance(const GroupElement& g, const GroupElement& h) {
  const double du = (g.u - h.u).cwiseAbs().maxCoeff();
  const double dtheta = std::abs(g.theta - h.theta);
  const double dlambda = std::abs(g.lambda - h.lambda);
  return std::max({du, dtheta, dlambda});
}

bool approx_equal(const GroupElement& g, const GroupElement& h, double tol) {
  if (g.variant != h.variant) {
    return false;
  }
  const double dtheta = g.variant == GroupVariant::Base
                            ? std::abs(wrap_angle(g.theta - h.theta))
                            : std::abs(g.theta - h.theta);
  return (g.u - h.u).cwiseAbs().maxCoeff() <= tol && dtheta <= tol &&
         std::abs(g.lambda - h.lambda) <= tol;
}

GroupElement project_to_base(const GroupElement& g) {
  return {g.u, g.theta, g.lambda, GroupVariant::Base};
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  require_finite(a);
  require_finite(b);
  AlgebraElement out;
  out.b1 = b.theta * a.b2 - a.theta * b.b2 + b.r * a.b1 - a.r * b.b1;
  out.b2 = a.theta * b.b1 - b.theta * a.b1 + b.r * a.b2 - a.r * b.b2;
  out.theta = 0.0;
  out.r = 0.0;
  return out;
}

GroupElement exp(const AlgebraElement& a, GroupVariant variant) {
  require_finite(a);
  GroupElement out;
  out.u = phi1_rotation_scaling(-a.r, a.theta) * Eigen::Vector2d(a.b1, a.b2);
  out.theta = a.theta;
  out.lambda = std::exp(a.r);
  out.variant = variant;
  return out;
}

double bch_commutator_check(const AlgebraElement& a, const AlgebraElement& b,
                            double t, double s) {
  if (std::abs(t) > 1.0 || std::abs(s) > 1.0) {
    throw std::invalid_argument("bch_commutator_check: |t|, |s| must be <= 1");
  }
  const GroupElement lhs = product(product(exp(t * a), exp(s * b)),
                                   product(exp(-t * a), exp(-s * b)));
  const GroupElement rhs = exp((t * s) * bracket(a, b));
  return group_distance(lhs, rhs);
}

HeisenbergAlgebraElement heis_bracket(const HeisenbergAlgebraElement& a,
                                      const HeisenbergAlgebraElement& b) {
  HeisenbergAlgebraElement out;
  out.a = Eigen::Vector2d::Zero();
  out.b = Eigen::Vector2d::Zero();
  out.r = a.b.dot(b.a) - b.b.dot(a.a);
  return out;
}

HeisenbergGroupElement heis_product(const HeisenbergGroupElement& g,
                                    const HeisenbergGroupElement& h) {
  HeisenbergGroupElement out;
  out.u = g.u + h.u;
  out.v = g.v + h.v;
  out.t = g.t + h.t + 0.5 * (h.u.dot(g.v) - g.u.dot(h.v));
  return out;
}

double heis_distance(const HeisenbergGroupElement& g,
                     const HeisenbergGroupElement& h) {
  const double du = (g.u - h.u).cwiseAbs().maxCoeff();
  const double dv = (g.v - h.v).cwiseAbs().maxCoeff();
  return std::max({du, dv, std::abs(g.t - h.t)});
}

}  // namespace gtq::algebra
