#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gtq/algebra.hpp"
#include "gtq/hilbert.hpp"

// Unitary representations of the canonical group on the log-polar grid and
// of the Heisenberg group on the box grid, together with their self-adjoint
// generators c, s, pi1, pi2 (and x, p, z for the plane case). Every
// operation is out-of-place and pure; concurrent calls are safe (the FFT
// plan cache serializes internally).

namespace gtq::operators {

enum class ShiftMode {
  ExactAligned,  // shifts must land on grid nodes; pure index permutations
  Spectral       // arbitrary shifts via transform-domain phase ramps
};

struct RepConfig {
  double hbar = 1.0;
  double alpha = 0.0;  // covering-group twist; U(theta, .) carries e^{-i alpha theta}
  ShiftMode shift_mode = ShiftMode::ExactAligned;
};

struct HeisenbergRepConfig {
  double mu = 1.0;  // representation label, nonzero
  hilbert::BoxGridSpec box{};
};

// (U psi)(phi, s) = e^{-i alpha theta} psi((phi - theta) mod 2pi, s - ln lambda).
// The s direction wraps periodically (torus compactification of the grid).
hilbert::Wavefunction apply_U(double theta, double lambda,
                              const hilbert::Wavefunction& psi,
                              const RepConfig& cfg);

// (V psi)(phi, s) = e^{-i (b1 cos phi + b2 sin phi) e^s / hbar} psi(phi, s).
hilbert::Wavefunction apply_V(const Eigen::Vector2d& b,
                              const hilbert::Wavefunction& psi,
                              const RepConfig& cfg);

// || U(th,la) V(b) psi - V(e^{-r} A_th b) U(th,la) psi || / ||psi||, r = ln la.
double weyl_residual(double theta, double lambda, const Eigen::Vector2d& b,
                     const hilbert::Wavefunction& psi, const RepConfig& cfg);

// Multiplication by rho cos(phi) and rho sin(phi).
hilbert::Wavefunction apply_c(const hilbert::Wavefunction& psi,
                              const RepConfig& cfg);
hilbert::Wavefunction apply_s(const hilbert::Wavefunction& psi,
                              const RepConfig& cfg);

// pi1 = -i hbar d/dphi + hbar alpha, pi2 = -i hbar rho d/drho = -i hbar d/ds,
// both by spectral differentiation with real mode multipliers.
hilbert::Wavefunction apply_pi1(const hilbert::Wavefunction& psi,
                                const RepConfig& cfg);
hilbert::Wavefunction apply_pi2(const hilbert::Wavefunction& psi,
                                const RepConfig& cfg);

// K_A = b1 c + b2 s + theta pi1 + r pi2, the image of the quantization map.
hilbert::Wavefunction apply_generator(const algebra::AlgebraElement& a,
                                      const hilbert::Wavefunction& psi,
                                      const RepConfig& cfg);

enum class CommutatorPair { SPi1, CPi1, SPi2, CPi2, Pi1Pi2, CS };

// ||[A, B] psi - rhs psi|| / ||psi|| with the hbar-consistent right-hand
// sides i hbar c, -i hbar s, i hbar s, i hbar c, 0, 0.
double commutator_residual(CommutatorPair pair,
                           const hilbert::Wavefunction& psi,
                           const RepConfig& cfg);

// Eigenvalues hbar (n + alpha) read off by applying pi1 to each angular
// exponential mode; returned as (n, eigenvalue) sorted by n.
std::vector<std::pair<int, double>> pi1_spectrum(const RepConfig& cfg,
                                                 const hilbert::GridSpec& grid);

// ---- plane case ----

// U(exp(a, b, r)) psi(x) = e^{-i b.x - i mu r} psi(x - mu a).
hilbert::BoxWavefunction r2_apply(const Eigen::Vector2d& a,
                                  const Eigen::Vector2d& b, double r,
                                  const hilbert::BoxWavefunction& psi,
                                  const HeisenbergRepConfig& cfg,
                                  ShiftMode mode);

// x_i psi = x_i . psi and p_i psi = -i mu d(psi)/dx_i; axis is 0 or 1.
hilbert::BoxWavefunction r2_apply_position(int axis,
                                           const hilbert::BoxWavefunction& psi,
                                           const HeisenbergRepConfig& cfg);
hilbert::BoxWavefunction r2_apply_momentum(int axis,
                                           const hilbert::BoxWavefunction& psi,
                                           const HeisenbergRepConfig& cfg);

// z psi = mu psi.
hilbert::BoxWavefunction r2_apply_z(const hilbert::BoxWavefunction& psi,
                                    const HeisenbergRepConfig& cfg);

}  // namespace gtq::operators
