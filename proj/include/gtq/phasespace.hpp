#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "gtq/algebra.hpp"

// The symplectic phase space M = (R^2 - {0}) x R^2 in the global Cartesian
// chart (x, y, p_x, p_y): group action, symplectic form, fundamental and
// Hamiltonian vector fields, Poisson brackets, and the momentum map. The
// same manifold is variously described as S^1 x R^3 or R^2 x (S^1 x R);
// these are diffeomorphic aliases of the chart used here. The plane case
// (no puncture, translation group) lives in the r2_* operations.

namespace gtq::phasespace {

inline constexpr double kDefaultPunctureFloor = 1e-300;

struct PhasePoint {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  Eigen::Vector2d p = Eigen::Vector2d::Zero();
};

// Validates finiteness and ||x|| > floor (the configuration space excludes
// the origin).
PhasePoint make_phase_point(const Eigen::Vector2d& x, const Eigen::Vector2d& p,
                            double floor = kDefaultPunctureFloor);

struct TangentVector {
  double dx = 0.0;
  double dy = 0.0;
  double dpx = 0.0;
  double dpy = 0.0;
};

TangentVector operator+(const TangentVector& v, const TangentVector& w);
TangentVector operator-(const TangentVector& v, const TangentVector& w);
TangentVector operator-(const TangentVector& v);
TangentVector operator*(double t, const TangentVector& v);
double tangent_distance(const TangentVector& v, const TangentVector& w);

// A classical observable: value everywhere, gradient optional. When the
// gradient is absent, consumers fall back to central finite differences.
struct Observable {
  std::function<double(const PhasePoint&)> value;
  std::function<Eigen::Vector4d(const PhasePoint&)> gradient;
};

Eigen::Vector4d observable_gradient(const Observable& f, const PhasePoint& pt,
                                    double h = 1e-5);

// (u, th, la) . (x, p) = (la A_th x, la^-1 A_th p - u). A left action.
PhasePoint act(const algebra::GroupElement& g, const PhasePoint& pt);

// omega = dx ^ dp_x + dy ^ dp_y evaluated on two tangent vectors.
double symplectic_form(const TangentVector& v, const TangentVector& w);

// Matrix of omega in the (x, y, p_x, p_y) basis.
Eigen::Matrix4d symplectic_matrix();

// Jacobian of the (affine) action: diag(la A_th, la^-1 A_th).
Eigen::Matrix4d action_jacobian(const algebra::GroupElement& g);

// gamma^A at pt: (th y - r x, -th x - r y, r p_x + th p_y + b1,
//                 r p_y - th p_x + b2).
TangentVector fundamental_field(const algebra::AlgebraElement& a,
                                const PhasePoint& pt);

// Central-difference oracle for fundamental_field from the defining flow
// t -> act(exp(-tA), pt). Throws std::domain_error if a probe point falls
// below the puncture floor.
TangentVector fundamental_field_fd(const algebra::AlgebraElement& a,
                                   const PhasePoint& pt, double h,
                                   double floor = kDefaultPunctureFloor);

// gamma^A is affine with constant linear part, so [gamma^A, gamma^B] is
// computed exactly from the Jacobians: (L_B L_A - L_A L_B) z + L_B c_A -
// L_A c_B.
TangentVector fundamental_field_bracket(const algebra::AlgebraElement& a,
                                        const algebra::AlgebraElement& b,
                                        const PhasePoint& pt);

// P_A = r x.p + b.x + theta x.Cp with C = [[0, 1], [-1, 0]].
double momentum_map(const algebra::AlgebraElement& a, const PhasePoint& pt);

// P_A as an Observable; with_gradient selects the analytic gradient or the
// finite-difference fallback path.
Observable momentum_observable(const algebra::AlgebraElement& a,
                               bool with_gradient = true);

// The unique xi with omega(xi, .) = df(.), from the 4x4 linear system.
TangentVector hamiltonian_field(const Observable& f, const PhasePoint& pt,
                                double h = 1e-5);

// {f, g} = f_x g_px + f_y g_py - f_px g_x - f_py g_y at pt.
double poisson(const Observable& f, const Observable& g, const PhasePoint& pt,
               double h = 1e-5);

// True iff g fixes every sample point to tolerance.
bool effectiveness_probe(const algebra::GroupElement& g,
                         std::span<const PhasePoint> pts,
                         double tol = 1e-12);

// ---- plane case: translation group R^4 acting on T*R^2 ----

// (u, v) . (x, p) = (x + u, p - v).
PhasePoint r2_act(const Eigen::Vector2d& u, const Eigen::Vector2d& v,
                  const PhasePoint& pt);

// gamma^(a,b) = (-a1, -a2, b1, b2), constant over M.
TangentVector r2_fundamental_field(const algebra::HeisenbergAlgebraElement& a);

// Extended momentum map P'_(a,b,r) = a.p + b.x + r; r = 0 gives the
// unextended P whose homomorphism defect is the cocycle.
double r2_momentum(const algebra::HeisenbergAlgebraElement& a,
                   const PhasePoint& pt);

Observable r2_momentum_observable(const algebra::HeisenbergAlgebraElement& a,
                                  bool with_gradient = true);

}  // namespace gtq::phasespace
