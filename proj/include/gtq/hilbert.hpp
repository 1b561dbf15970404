#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

// Discretized Hilbert spaces: L^2 of the punctured plane on a uniform
// (phi, s = ln rho) grid, where the measure d(mu) = dphi drho / (2 pi rho)
// becomes dphi ds / (2 pi), and the plane case L^2(R^2) on a periodic box.

namespace gtq::hilbert {

struct GridSpec {
  int n_phi = 256;
  int n_s = 256;
  double s_min = -4.0;
  double s_max = 4.0;

  double dphi() const;
  double ds() const;
  double phi(int j) const;
  double s(int k) const;
  double s_length() const { return s_max - s_min; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Sizes must be powers of two; s_max must exceed s_min.
GridSpec make_grid(int n_phi, int n_s, double s_min, double s_max);

struct Wavefunction {
  GridSpec grid;
  std::vector<std::complex<double>> amps;  // row-major, amps[j * n_s + k]

  std::complex<double>& at(int j, int k) { return amps[static_cast<std::size_t>(j) * grid.n_s + k]; }
  const std::complex<double>& at(int j, int k) const { return amps[static_cast<std::size_t>(j) * grid.n_s + k]; }
};

Wavefunction zero_state(const GridSpec& grid);

// sum conj(psi) chi dphi ds / (2 pi); throws on grid mismatch.
std::complex<double> inner(const Wavefunction& psi, const Wavefunction& chi);
double norm(const Wavefunction& psi);

Wavefunction operator+(const Wavefunction& psi, const Wavefunction& chi);
Wavefunction operator-(const Wavefunction& psi, const Wavefunction& chi);
Wavefunction operator*(const std::complex<double>& c, const Wavefunction& psi);

// Deterministic band-limited test state: random Fourier modes inside the
// cutoff, a Gaussian envelope in s centered mid-grid (standard deviation
// s_envelope_width / 3, chosen so a width of an eighth of the s-range puts
// the boundary rows below 1e-14), a final projection back inside the
// cutoff, and unit normalization. The random s-modes stay far enough below
// the cutoff that the envelope's spectral leakage dies inside it.
Wavefunction random_state(std::uint64_t seed, const GridSpec& grid,
                          int mode_cutoff, double s_envelope_width);

// Pointwise evaluation of f(phi, rho) with rho = e^s.
Wavefunction sample(
    const std::function<std::complex<double>(double, double)>& f,
    const GridSpec& grid);

// Columns (j, k, phi, s, re, im); the header row names the grid parameters.
void dump_csv(const Wavefunction& psi, std::ostream& out);
void dump_csv(const Wavefunction& psi, const std::string& path);

// ---- plane case: periodic box [-L, L)^2 with the Lebesgue measure ----

struct BoxGridSpec {
  int n = 256;
  double half_width = 8.0;

  double dx() const { return 2.0 * half_width / n; }
  double coord(int i) const { return -half_width + i * dx(); }

  friend bool operator==(const BoxGridSpec&, const BoxGridSpec&) = default;
};

BoxGridSpec make_box_grid(int n, double half_width);

struct BoxWavefunction {
  BoxGridSpec grid;
  std::vector<std::complex<double>> amps;  // row-major, amps[ix * n + iy]

  std::complex<double>& at(int ix, int iy) { return amps[static_cast<std::size_t>(ix) * grid.n + iy]; }
  const std::complex<double>& at(int ix, int iy) const { return amps[static_cast<std::size_t>(ix) * grid.n + iy]; }
};

BoxWavefunction box_zero_state(const BoxGridSpec& grid);
std::complex<double> inner(const BoxWavefunction& psi, const BoxWavefunction& chi);
double norm(const BoxWavefunction& psi);

BoxWavefunction operator+(const BoxWavefunction& psi, const BoxWavefunction& chi);
BoxWavefunction operator-(const BoxWavefunction& psi, const BoxWavefunction& chi);
BoxWavefunction operator*(const std::complex<double>& c, const BoxWavefunction& psi);

// Same construction as random_state with the Gaussian envelope applied in
// both directions.
BoxWavefunction box_random_state(std::uint64_t seed, const BoxGridSpec& grid,
                                 int mode_cutoff, double envelope_width);

BoxWavefunction box_sample(
    const std::function<std::complex<double>(double, double)>& f,
    const BoxGridSpec& grid);

}  // namespace gtq::hilbert
