#include "gtq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gtq/fft.hpp"

namespace gtq::operators {

namespace {

using std::complex;
using hilbert::BoxWavefunction;
using hilbert::GridSpec;
using hilbert::Wavefunction;

constexpr complex<double> kI{0.0, 1.0};

int wrap_index(long i, int n) {
  long m = i % n;
  if (m < 0) m += n;
  return static_cast<int>(m);
}

long aligned_steps(double shift, double step, const char* what) {
  const double ratio = shift / step;
  const long k = std::lround(ratio);
  if (std::abs(ratio - static_cast<double>(k)) > 1e-12) {
    throw std::invalid_argument(std::string(what) +
                                ": shift is not grid aligned in ExactAligned mode");
  }
  return k;
}

void require_rep(const RepConfig& cfg) {
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar) || !std::isfinite(cfg.alpha)) {
    throw std::invalid_argument("representation config: hbar must be positive and finite");
  }
}

void require_heis(const HeisenbergRepConfig& cfg) {
  if (cfg.mu == 0.0 || !std::isfinite(cfg.mu)) {
    throw std::invalid_argument("representation label mu must be nonzero");
  }
}

std::vector<double> radii(const GridSpec& g) {
  std::vector<double> rho(g.n_s);
  for (int k = 0; k < g.n_s; ++k) rho[k] = std::exp(g.s(k));
  return rho;
}

}  // namespace

Wavefunction apply_U(double theta, double lambda, const Wavefunction& psi,
                     const RepConfig& cfg) {
  require_rep(cfg);
  if (!(lambda > 0.0) || !std::isfinite(lambda) || !std::isfinite(theta)) {
    throw std::invalid_argument("apply_U: need finite theta and lambda > 0");
  }
  const GridSpec& g = psi.grid;
  const double r = std::log(lambda);
  const complex<double> twist = std::exp(-kI * cfg.alpha * theta);

  if (cfg.shift_mode == ShiftMode::ExactAligned) {
    const long ja = aligned_steps(theta, g.dphi(), "apply_U theta");
    const long kb = aligned_steps(r, g.ds(), "apply_U log lambda");
    Wavefunction out = hilbert::zero_state(g);
    for (int j = 0; j < g.n_phi; ++j) {
      const int js = wrap_index(j - ja, g.n_phi);
      for (int k = 0; k < g.n_s; ++k) {
        out.at(j, k) = twist * psi.at(js, wrap_index(k - kb, g.n_s));
      }
    }
    return out;
  }

  // The transform-domain ramp e^{-i(n theta + kappa r)} separates by axis.
  std::vector<complex<double>> row_phase(g.n_phi);
  for (int j = 0; j < g.n_phi; ++j) {
    row_phase[j] =
        twist * std::polar(1.0, -fft::mode_index(j, g.n_phi) * theta);
  }
  std::vector<complex<double>> col_phase(g.n_s);
  for (int k = 0; k < g.n_s; ++k) {
    const double kappa = 2.0 * M_PI * fft::mode_index(k, g.n_s) / g.s_length();
    col_phase[k] = std::polar(1.0, -kappa * r);
  }
  Wavefunction out = psi;
  fft::transform_2d(out.amps, g.n_phi, g.n_s, fft::Direction::Forward);
  for (int j = 0; j < g.n_phi; ++j) {
    for (int k = 0; k < g.n_s; ++k) {
      out.at(j, k) *= row_phase[j] * col_phase[k];
    }
  }
  fft::transform_2d(out.amps, g.n_phi, g.n_s, fft::Direction::Inverse);
  return out;
}

Wavefunction apply_V(const Eigen::Vector2d& b, const Wavefunction& psi,
                     const RepConfig& cfg) {
  require_rep(cfg);
  if (!b.allFinite()) {
    throw std::invalid_argument("apply_V: b must be finite");
  }
  const GridSpec& g = psi.grid;
  const std::vector<double> rho = radii(g);
  Wavefunction out = psi;
  for (int j = 0; j < g.n_phi; ++j) {
    const double w =
        (b.x() * std::cos(g.phi(j)) + b.y() * std::sin(g.phi(j))) / cfg.hbar;
    for (int k = 0; k < g.n_s; ++k) {
      out.at(j, k) *= std::polar(1.0, -w * rho[k]);
    }
  }
  return out;
}

double weyl_residual(double theta, double lambda, const Eigen::Vector2d& b,
                     const Wavefunction& psi, const RepConfig& cfg) {
  const double r = std::log(lambda);
  const Wavefunction lhs = apply_U(theta, lambda, apply_V(b, psi, cfg), cfg);
  const Eigen::Vector2d rotated =
      std::exp(-r) * (algebra::rotation_matrix(theta) * b);
  const Wavefunction rhs = apply_V(rotated, apply_U(theta, lambda, psi, cfg), cfg);
  return hilbert::norm(lhs - rhs) / hilbert::norm(psi);
}

Wavefunction apply_c(const Wavefunction& psi, const RepConfig& cfg) {
  require_rep(cfg);
  const GridSpec& g = psi.grid;
  const std::vector<double> rho = radii(g);
  Wavefunction out = psi;
  for (int j = 0; j < g.n_phi; ++j) {
    const double c = std::cos(g.phi(j));
    for (int k = 0; k < g.n_s; ++k) {
      out.at(j, k) *= rho[k] * c;
    }
  }
  return out;
}

Wavefunction apply_s(const Wavefunction& psi, const RepConfig& cfg) {
  require_rep(cfg);
  const GridSpec& g = psi.grid;
  const std::vector<double> rho = radii(g);
  Wavefunction out = psi;
  for (int j = 0; j < g.n_phi; ++j) {
    const double s = std::sin(g.phi(j));
    for (int k = 0; k < g.n_s; ++k) {
      out.at(j, k) *= rho[k] * s;
    }
  }
  return out;
}

Wavefunction apply_pi1(const Wavefunction& psi, const RepConfig& cfg) {
  require_rep(cfg);
  const GridSpec& g = psi.grid;
  Wavefunction out = psi;
  fft::transform_axis0(out.amps, g.n_phi, g.n_s, fft::Direction::Forward);
  for (int j = 0; j < g.n_phi; ++j) {
    const double mult = cfg.hbar * (fft::mode_index(j, g.n_phi) + cfg.alpha);
    for (int k = 0; k < g.n_s; ++k) {
      out.at(j, k) *= mult;
    }
  }
  fft::transform_axis0(out.amps, g.n_phi, g.n_s, fft::Direction::Inverse);
  return out;
}

Wavefunction apply_pi2(const Wavefunction& psi, const RepConfig& cfg) {
  require_rep(cfg);
  const GridSpec& g = psi.grid;
  Wavefunction out = psi;
  fft::transform_axis1(out.amps, g.n_phi, g.n_s, fft::Direction::Forward);
  for (int k = 0; k < g.n_s; ++k) {
    const double mult =
        cfg.hbar * 2.0 * M_PI * fft::mode_index(k, g.n_s) / g.s_length();
    for (int j = 0; j < g.n_phi; ++j) {
      out.at(j, k) *= mult;
    }
  }
  fft::transform_axis1(out.amps, g.n_phi, g.n_s, fft::Direction::Inverse);
  return out;
}

Wavefunction apply_generator(const algebra::AlgebraElement& a,
                             const Wavefunction& psi, const RepConfig& cfg) {
  Wavefunction out = hilbert::zero_state(psi.grid);
  if (a.b1 != 0.0) out = out + complex<double>(a.b1) * apply_c(psi, cfg);
  if (a.b2 != 0.0) out = out + complex<double>(a.b2) * apply_s(psi, cfg);
  if (a.theta != 0.0) out = out + complex<double>(a.theta) * apply_pi1(psi, cfg);
  if (a.r != 0.0) out = out + complex<double>(a.r) * apply_pi2(psi, cfg);
  return out;
}

double commutator_residual(CommutatorPair pair, const Wavefunction& psi,
                           const RepConfig& cfg) {
  using Op = Wavefunction (*)(const Wavefunction&, const RepConfig&);
  Op lhs_a = nullptr;
  Op lhs_b = nullptr;
  Op rhs_op = nullptr;
  complex<double> rhs_scale{0.0, 0.0};
  const complex<double> ih = kI * cfg.hbar;
  switch (pair) {
    case CommutatorPair::SPi1:
      lhs_a = apply_s; lhs_b = apply_pi1; rhs_op = apply_c; rhs_scale = ih;
      break;
    case CommutatorPair::CPi1:
      lhs_a = apply_c; lhs_b = apply_pi1; rhs_op = apply_s; rhs_scale = -ih;
      break;
    case CommutatorPair::SPi2:
      lhs_a = apply_s; lhs_b = apply_pi2; rhs_op = apply_s; rhs_scale = ih;
      break;
    case CommutatorPair::CPi2:
      lhs_a = apply_c; lhs_b = apply_pi2; rhs_op = apply_c; rhs_scale = ih;
      break;
    case CommutatorPair::Pi1Pi2:
      lhs_a = apply_pi1; lhs_b = apply_pi2;
      break;
    case CommutatorPair::CS:
      lhs_a = apply_c; lhs_b = apply_s;
      break;
  }
  Wavefunction comm = lhs_a(lhs_b(psi, cfg), cfg) - lhs_b(lhs_a(psi, cfg), cfg);
  if (rhs_op != nullptr) {
    comm = comm - rhs_scale * rhs_op(psi, cfg);
  }
  return hilbert::norm(comm) / hilbert::norm(psi);
}

std::vector<std::pair<int, double>> pi1_spectrum(const RepConfig& cfg,
                                                 const GridSpec& grid) {
  require_rep(cfg);
  std::vector<std::pair<int, double>> spectrum;
  spectrum.reserve(grid.n_phi);
  for (int j = 0; j < grid.n_phi; ++j) {
    const int n = fft::mode_index(j, grid.n_phi);
    const Wavefunction mode = hilbert::sample(
        [n](double phi, double) { return std::exp(kI * (n * phi)); }, grid);
    const Wavefunction image = apply_pi1(mode, cfg);
    const double eig = (inner(mode, image) / inner(mode, mode)).real();
    spectrum.emplace_back(n, eig);
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

BoxWavefunction r2_apply(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                         double r, const BoxWavefunction& psi,
                         const HeisenbergRepConfig& cfg, ShiftMode mode) {
  require_heis(cfg);
  if (!a.allFinite() || !b.allFinite() || !std::isfinite(r)) {
    throw std::invalid_argument("r2_apply: parameters must be finite");
  }
  const hilbert::BoxGridSpec& g = psi.grid;
  const Eigen::Vector2d shift = cfg.mu * a;
  const complex<double> central = std::exp(-kI * (cfg.mu * r));

  BoxWavefunction out = psi;
  if (mode == ShiftMode::ExactAligned) {
    const long kx = aligned_steps(shift.x(), g.dx(), "r2_apply a[0]");
    const long ky = aligned_steps(shift.y(), g.dx(), "r2_apply a[1]");
    // b must be commensurate with pi / L so the phase is periodic on the box.
    const double unit = M_PI / g.half_width;
    aligned_steps(b.x(), unit, "r2_apply b[0]");
    aligned_steps(b.y(), unit, "r2_apply b[1]");
    for (int ix = 0; ix < g.n; ++ix) {
      const int sx = wrap_index(ix - kx, g.n);
      for (int iy = 0; iy < g.n; ++iy) {
        out.at(ix, iy) = psi.at(sx, wrap_index(iy - ky, g.n));
      }
    }
  } else {
    const double kunit = M_PI / g.half_width;
    std::vector<complex<double>> row_ramp(g.n);
    std::vector<complex<double>> col_ramp(g.n);
    for (int i = 0; i < g.n; ++i) {
      const double kn = kunit * fft::mode_index(i, g.n);
      row_ramp[i] = std::polar(1.0, -kn * shift.x());
      col_ramp[i] = std::polar(1.0, -kn * shift.y());
    }
    fft::transform_2d(out.amps, g.n, g.n, fft::Direction::Forward);
    for (int ix = 0; ix < g.n; ++ix) {
      for (int iy = 0; iy < g.n; ++iy) {
        out.at(ix, iy) *= row_ramp[ix] * col_ramp[iy];
      }
    }
    fft::transform_2d(out.amps, g.n, g.n, fft::Direction::Inverse);
  }

  std::vector<complex<double>> row_phase(g.n);
  std::vector<complex<double>> col_phase(g.n);
  for (int i = 0; i < g.n; ++i) {
    row_phase[i] = central * std::polar(1.0, -b.x() * g.coord(i));
    col_phase[i] = std::polar(1.0, -b.y() * g.coord(i));
  }
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      out.at(ix, iy) *= row_phase[ix] * col_phase[iy];
    }
  }
  return out;
}

BoxWavefunction r2_apply_position(int axis, const BoxWavefunction& psi,
                                  const HeisenbergRepConfig& cfg) {
  require_heis(cfg);
  const hilbert::BoxGridSpec& g = psi.grid;
  BoxWavefunction out = psi;
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      out.at(ix, iy) *= g.coord(axis == 0 ? ix : iy);
    }
  }
  return out;
}

BoxWavefunction r2_apply_momentum(int axis, const BoxWavefunction& psi,
                                  const HeisenbergRepConfig& cfg) {
  require_heis(cfg);
  const hilbert::BoxGridSpec& g = psi.grid;
  BoxWavefunction out = psi;
  if (axis == 0) {
    fft::transform_axis0(out.amps, g.n, g.n, fft::Direction::Forward);
  } else {
    fft::transform_axis1(out.amps, g.n, g.n, fft::Direction::Forward);
  }
  const double kunit = M_PI / g.half_width;
  for (int ix = 0; ix < g.n; ++ix) {
    for (int iy = 0; iy < g.n; ++iy) {
      const int bin = axis == 0 ? ix : iy;
      out.at(ix, iy) *= cfg.mu * kunit * fft::mode_index(bin, g.n);
    }
  }
  if (axis == 0) {
    fft::transform_axis0(out.amps, g.n, g.n, fft::Direction::Inverse);
  } else {
    fft::transform_axis1(out.amps, g.n, g.n, fft::Direction::Inverse);
  }
  return out;
}

BoxWavefunction r2_apply_z(const BoxWavefunction& psi,
                           const HeisenbergRepConfig& cfg) {
  require_heis(cfg);
  return complex<double>(cfg.mu) * psi;
}

}  // namespace gtq::operators
