#pragma once

#include <Eigen/Dense>

// Exact group-law and Lie-algebra arithmetic for the canonical group
// R^2 x| (SO(2) x R+) of the punctured plane, its universal cover
// R^2 x| (R x R+), and the Heisenberg group H5 of the plane case.

namespace gtq::algebra {

inline constexpr double kComponentTol = 1e-12;

// Lie algebra element (b1, b2, theta, r): b generates momentum translations,
// theta rotations, r dilations.
struct AlgebraElement {
  double b1 = 0.0;
  double b2 = 0.0;
  double theta = 0.0;
  double r = 0.0;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a);
AlgebraElement operator*(double t, const AlgebraElement& a);

enum class GroupVariant { Base, Cover };

// Group element (u, theta, lambda) with lambda > 0. theta is stored
// unreduced; Base-variant equality reduces it mod 2pi, Cover equality
// compares it as a real number.
struct GroupElement {
  Eigen::Vector2d u = Eigen::Vector2d::Zero();
  double theta = 0.0;
  double lambda = 1.0;
  GroupVariant variant = GroupVariant::Base;
};

GroupElement make_group_element(const Eigen::Vector2d& u, double theta,
                                double lambda,
                                GroupVariant variant = GroupVariant::Base);
GroupElement identity(GroupVariant variant = GroupVariant::Base);

// Rotation by theta: [[cos, -sin], [sin, cos]].
Eigen::Matrix2d rotation_matrix(double theta);

// (u, th, la)(u', th', la') = (u + la^-1 A_th u', th + th', la la').
GroupElement product(const GroupElement& g, const GroupElement& h);

// (-la A_{-th} u, -th, 1/la); product(g, inverse(g)) is the identity.
GroupElement inverse(const GroupElement& g);

// Reduce an angle into (-pi, pi].
double wrap_angle(double theta);

// Componentwise max of |du|, |dtheta|, |dlambda|; theta taken unreduced.
double group_distance(const GroupElement& g, const GroupElement& h);

bool approx_equal(const GroupElement& g, const GroupElement& h,
                  double tol = kComponentTol);

// Covering projection: retag a Cover element as Base. Storage is unchanged;
// the angle reduction happens in Base equality only.
GroupElement project_to_base(const GroupElement& g);

// Lie bracket; the image lies in the translation part (theta = r = 0).
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

// exp(A) = (phi1(M) b, theta, e^r) with M = -r I + theta J, J the 90-degree
// rotation generator, and phi1(M) = M^-1 (e^M - I). A 12-term series takes
// over below ||M|| = 1e-4 where the inverse degenerates.
GroupElement exp(const AlgebraElement& a,
                 GroupVariant variant = GroupVariant::Base);

// Distance between exp(tA) exp(sB) exp(-tA) exp(-sB) and exp(ts [A,B]).
// Contract: O((|t|+|s|)^3) as t, s -> 0. Requires |t|, |s| <= 1.
double bch_commutator_check(const AlgebraElement& a, const AlgebraElement& b,
                            double t, double s);

// Heisenberg algebra R^4 (+) R with bracket (0, 0, b.a' - b'.a); the central
// component carries the cocycle that obstructs the plane-case momentum map.
struct HeisenbergAlgebraElement {
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  double r = 0.0;
};

struct HeisenbergGroupElement {
  Eigen::Vector2d u = Eigen::Vector2d::Zero();
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
  double t = 0.0;
};

HeisenbergAlgebraElement heis_bracket(const HeisenbergAlgebraElement& a,
                                      const HeisenbergAlgebraElement& b);

// (u+u', v+v', t+t' + (u'.v - u.v')/2).
HeisenbergGroupElement heis_product(const HeisenbergGroupElement& g,
                                    const HeisenbergGroupElement& h);

double heis_distance(const HeisenbergGroupElement& g,
                     const HeisenbergGroupElement& h);

}  // namespace gtq::algebra
