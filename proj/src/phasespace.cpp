#include "gtq/phasespace.hpp"

#include <cmath>
#include <stdexcept>

namespace gtq::phasespace {

namespace {

// Linear part of gamma^A: diag(-r I - th J, r I - th J).
Eigen::Matrix4d field_linear_part(const algebra::AlgebraElement& a) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = -a.r;
  m(0, 1) = a.theta;
  m(1, 0) = -a.theta;
  m(1, 1) = -a.r;
  m(2, 2) = a.r;
  m(2, 3) = a.theta;
  m(3, 2) = -a.theta;
  m(3, 3) = a.r;
  return m;
}

Eigen::Vector4d field_constant_part(const algebra::AlgebraElement& a) {
  return {0.0, 0.0, a.b1, a.b2};
}

Eigen::Vector4d as_vector(const PhasePoint& pt) {
  return {pt.x.x(), pt.x.y(), pt.p.x(), pt.p.y()};
}

TangentVector as_tangent(const Eigen::Vector4d& v) {
  return {v(0), v(1), v(2), v(3)};
}

PhasePoint shifted(const PhasePoint& pt, int axis, double delta) {
  PhasePoint out = pt;
  switch (axis) {
    case 0: out.x.x() += delta; break;
    case 1: out.x.y() += delta; break;
    case 2: out.p.x() += delta; break;
    default: out.p.y() += delta; break;
  }
  return out;
}

}  // namespace

PhasePoint make_phase_point(const Eigen::Vector2d& x, const Eigen::Vector2d& p,
                            double floor) {
  if (!x.allFinite() || !p.allFinite()) {
    throw std::invalid_argument("phase point components must be finite");
  }
  // hypot instead of norm: the squared form underflows near the floor.
  if (std::hypot(x.x(), x.y()) <= floor) {
    throw std::invalid_argument("phase point sits on the puncture");
  }
  return {x, p};
}

TangentVector operator+(const TangentVector& v, const TangentVector& w) {
  return {v.dx + w.dx, v.dy + w.dy, v.dpx + w.dpx, v.dpy + w.dpy};
}

TangentVector operator-(const TangentVector& v, const TangentVector& w) {
  return {v.dx - w.dx, v.dy - w.dy, v.dpx - w.dpx, v.dpy - w.dpy};
}

TangentVector operator-(const TangentVector& v) {
  return {-v.dx, -v.dy, -v.dpx, -v.dpy};
}

TangentVector operator*(double t, const TangentVector& v) {
  return {t * v.dx, t * v.dy, t * v.dpx, t * v.dpy};
}

double tangent_distance(const TangentVector& v, const TangentVector& w) {
  return std::max({std::abs(v.dx - w.dx), std::abs(v.dy - w.dy),
                   std::abs(v.dpx - w.dpx), std::abs(v.dpy - w.dpy)});
}

Eigen::Vector4d observable_gradient(const Observable& f, const PhasePoint& pt,
                                    double h) {
  if (f.gradient) {
    return f.gradient(pt);
  }
  if (h <= 0.0) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  Eigen::Vector4d grad;
  for (int axis = 0; axis < 4; ++axis) {
    grad(axis) = (f.value(shifted(pt, axis, h)) - f.value(shifted(pt, axis, -h))) /
                 (2.0 * h);
  }
  return grad;
}

PhasePoint act(const algebra::GroupElement& g, const PhasePoint& pt) {
  const Eigen::Matrix2d rot = algebra::rotation_matrix(g.theta);
  PhasePoint out;
  out.x = g.lambda * (rot * pt.x);
  out.p = (1.0 / g.lambda) * (rot * pt.p) - g.u;
  return out;
}

double symplectic_form(const TangentVector& v, const TangentVector& w) {
  return v.dx * w.dpx - v.dpx * w.dx + v.dy * w.dpy - v.dpy * w.dy;
}

Eigen::Matrix4d symplectic_matrix() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 2) = 1.0;
  omega(1, 3) = 1.0;
  omega(2, 0) = -1.0;
  omega(3, 1) = -1.0;
  return omega;
}

Eigen::Matrix4d action_jacobian(const algebra::GroupElement& g) {
  const Eigen::Matrix2d rot = algebra::rotation_matrix(g.theta);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.topLeftCorner<2, 2>() = g.lambda * rot;
  m.bottomRightCorner<2, 2>() = (1.0 / g.lambda) * rot;
  return m;
}

TangentVector fundamental_field(const algebra::AlgebraElement& a,
                                const PhasePoint& pt) {
  return {a.theta * pt.x.y() - a.r * pt.x.x(),
          -a.theta * pt.x.x() - a.r * pt.x.y(),
          a.r * pt.p.x() + a.theta * pt.p.y() + a.b1,
          a.r * pt.p.y() - a.theta * pt.p.x() + a.b2};
}

TangentVector fundamental_field_fd(const algebra::AlgebraElement& a,
                                   const PhasePoint& pt, double h,
                                   double floor) {
  if (h <= 0.0) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  const PhasePoint fwd = act(algebra::exp(-h * a), pt);
  const PhasePoint bwd = act(algebra::exp(h * a), pt);
  if (std::hypot(fwd.x.x(), fwd.x.y()) <= floor ||
      std::hypot(bwd.x.x(), bwd.x.y()) <= floor) {
    throw std::domain_error("finite-difference flow crossed the puncture");
  }
  const double inv = 1.0 / (2.0 * h);
  return {(fwd.x.x() - bwd.x.x()) * inv, (fwd.x.y() - bwd.x.y()) * inv,
          (fwd.p.x() - bwd.p.x()) * inv, (fwd.p.y() - bwd.p.y()) * inv};
}

TangentVector fundamental_field_bracket(const algebra::AlgebraElement& a,
                                        const algebra::AlgebraElement& b,
                                        const PhasePoint& pt) {
  const Eigen::Matrix4d la = field_linear_part(a);
  const Eigen::Matrix4d lb = field_linear_part(b);
  const Eigen::Vector4d ca = field_constant_part(a);
  const Eigen::Vector4d cb = field_constant_part(b);
  const Eigen::Vector4d z = as_vector(pt);
  return as_tangent((lb * la - la * lb) * z + lb * ca - la * cb);
}

double momentum_map(const algebra::AlgebraElement& a, const PhasePoint& pt) {
  return a.r * pt.x.dot(pt.p) + a.b1 * pt.x.x() + a.b2 * pt.x.y() +
         a.theta * (pt.x.x() * pt.p.y() - pt.x.y() * pt.p.x());
}

Observable momentum_observable(const algebra::AlgebraElement& a,
                               bool with_gradient) {
  Observable f;
  f.value = [a](const PhasePoint& pt) { return momentum_map(a, pt); };
  if (with_gradient) {
    f.gradient = [a](const PhasePoint& pt) {
      return Eigen::Vector4d{a.r * pt.p.x() + a.b1 + a.theta * pt.p.y(),
                             a.r * pt.p.y() + a.b2 - a.theta * pt.p.x(),
                             a.r * pt.x.x() - a.theta * pt.x.y(),
                             a.r * pt.x.y() + a.theta * pt.x.x()};
    };
  }
  return f;
}

TangentVector hamiltonian_field(const Observable& f, const PhasePoint& pt,
                                double h) {
  const Eigen::Vector4d grad = observable_gradient(f, pt, h);
  if (!grad.allFinite()) {
    throw std::invalid_argument("observable gradient is not finite");
  }
  // omega(xi, X) = df(X) for all X  <=>  Omega^T xi = grad.
  const Eigen::Matrix4d omega_t = symplectic_matrix().transpose();
  return as_tangent(Eigen::PartialPivLU<Eigen::Matrix4d>(omega_t).solve(grad));
}

double poisson(const Observable& f, const Observable& g, const PhasePoint& pt,
               double h) {
  const Eigen::Vector4d df = observable_gradient(f, pt, h);
  const Eigen::Vector4d dg = observable_gradient(g, pt, h);
  if (!df.allFinite() || !dg.allFinite()) {
    throw std::invalid_argument("observable gradient is not finite");
  }
  return df(0) * dg(2) + df(1) * dg(3) - df(2) * dg(0) - df(3) * dg(1);
}

bool effectiveness_probe(const algebra::GroupElement& g,
                         std::span<const PhasePoint> pts, double tol) {
  if (pts.empty()) {
    throw std::invalid_argument("effectiveness probe needs sample points");
  }
  for (const PhasePoint& pt : pts) {
    const PhasePoint moved = act(g, pt);
    if ((moved.x - pt.x).cwiseAbs().maxCoeff() > tol ||
        (moved.p - pt.p).cwiseAbs().maxCoeff() > tol) {
      return false;
    }
  }
  return true;
}

PhasePoint r2_act(const Eigen::Vector2d& u, const Eigen::Vector2d& v,
                  const PhasePoint& pt) {
  return {pt.x + u, pt.p - v};
}

TangentVector r2_fundamental_field(const algebra::HeisenbergAlgebraElement& a) {
  return {-a.a.x(), -a.a.y(), a.b.x(), a.b.y()};
}

double r2_momentum(const algebra::HeisenbergAlgebraElement& a,
                   const PhasePoint& pt) {
  return a.a.dot(pt.p) + a.b.dot(pt.x) + a.r;
}

Observable r2_momentum_observable(const algebra::HeisenbergAlgebraElement& a,
                                  bool with_gradient) {
  Observable f;
  f.value = [a](const PhasePoint& pt) { return r2_momentum(a, pt); };
  if (with_gradient) {
    f.gradient = [a](const PhasePoint&) {
      return Eigen::Vector4d{a.b.x(), a.b.y(), a.a.x(), a.a.y()};
    };
  }
  return f;
}

}  // namespace gtq::phasespace
