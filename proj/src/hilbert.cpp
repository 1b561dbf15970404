#include "gtq/hilbert.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "gtq/fft.hpp"

namespace gtq::hilbert {

namespace {

bool power_of_two(int n) {
  return n > 0 && (n & (n - 1)) == 0;
}

// Modes the envelope can smear a coefficient across before its Gaussian
// spectrum drops below 1e-18 of the peak.
int envelope_mode_guard(double sigma, double period) {
  const double k_reach = std::sqrt(2.0 * 18.0 * std::log(10.0)) / sigma;
  return static_cast<int>(std::ceil(k_reach * period / (2.0 * M_PI)));
}

std::complex<double> gauss_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

// Neumaier-compensated accumulator; grid inner products sum O(10^5) terms
// and plain summation would cost ~N*eps of relative accuracy.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

void check_compatible(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid == b.grid)) {
    throw std::invalid_argument("wavefunction grid mismatch");
  }
  const auto expected =
      static_cast<std::size_t>(a.grid.n_phi) * static_cast<std::size_t>(a.grid.n_s);
  if (a.amps.size() != expected || b.amps.size() != expected) {
    throw std::invalid_argument("wavefunction shape does not match its grid");
  }
}

void check_compatible(const BoxWavefunction& a, const BoxWavefunction& b) {
  if (!(a.grid == b.grid)) {
    throw std::invalid_argument("box wavefunction grid mismatch");
  }
  const auto expected =
      static_cast<std::size_t>(a.grid.n) * static_cast<std::size_t>(a.grid.n);
  if (a.amps.size() != expected || b.amps.size() != expected) {
    throw std::invalid_argument("box wavefunction shape does not match its grid");
  }
}

}  // namespace

double GridSpec::dphi() const { return 2.0 * M_PI / n_phi; }
double GridSpec::ds() const { return (s_max - s_min) / n_s; }
double GridSpec::phi(int j) const { return j * dphi(); }
double GridSpec::s(int k) const { return s_min + k * ds(); }

GridSpec make_grid(int n_phi, int n_s, double s_min, double s_max) {
  if (!power_of_two(n_phi) || !power_of_two(n_s)) {
    throw std::invalid_argument("grid sizes must be powers of two");
  }
  if (!(s_min < s_max)) {
    throw std::invalid_argument("grid needs s_min < s_max");
  }
  return {n_phi, n_s, s_min, s_max};
}

Wavefunction zero_state(const GridSpec& grid) {
  Wavefunction psi;
  psi.grid = grid;
  psi.amps.assign(static_cast<std::size_t>(grid.n_phi) * grid.n_s, {0.0, 0.0});
  return psi;
}

std::complex<double> inner(const Wavefunction& psi, const Wavefunction& chi) {
  check_compatible(psi, chi);
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < psi.amps.size(); ++i) {
    const std::complex<double> term = std::conj(psi.amps[i]) * chi.amps[i];
    re.add(term.real());
    im.add(term.imag());
  }
  const double weight = psi.grid.dphi() * psi.grid.ds() / (2.0 * M_PI);
  return std::complex<double>{re.value(), im.value()} * weight;
}

double norm(const Wavefunction& psi) {
  return std::sqrt(std::abs(inner(psi, psi).real()));
}

Wavefunction operator+(const Wavefunction& psi, const Wavefunction& chi) {
  check_compatible(psi, chi);
  Wavefunction out = psi;
  for (std::size_t i = 0; i < out.amps.size(); ++i) {
    out.amps[i] += chi.amps[i];
  }
  return out;
}

Wavefunction operator-(const Wavefunction& psi, const Wavefunction& chi) {
  check_compatible(psi, chi);
  Wavefunction out = psi;
  for (std::size_t i = 0; i < out.amps.size(); ++i) {
    out.amps[i] -= chi.amps[i];
  }
  return out;
}

Wavefunction operator*(const std::complex<double>& c, const Wavefunction& psi) {
  Wavefunction out = psi;
  for (auto& a : out.amps) {
    a *= c;
  }
  return out;
}

Wavefunction random_state(std::uint64_t seed, const GridSpec& grid,
                          int mode_cutoff, double s_envelope_width) {
  if (mode_cutoff < 1 || mode_cutoff > grid.n_phi / 4 ||
      mode_cutoff > grid.n_s / 4) {
    throw std::invalid_argument("mode cutoff must lie in [1, n/4]");
  }
  if (!(s_envelope_width > 0.0)) {
    throw std::invalid_argument("envelope width must be positive");
  }
  const double sigma = s_envelope_width / 3.0;
  const int guard = envelope_mode_guard(sigma, grid.s_length());
  const int m_rand = std::max(0, mode_cutoff - guard);

  std::mt19937_64 rng(seed);
  Wavefunction psi = zero_state(grid);
  for (int j = 0; j < grid.n_phi; ++j) {
    const int n = fft::mode_index(j, grid.n_phi);
    if (std::abs(n) > mode_cutoff) continue;
    for (int k = 0; k < grid.n_s; ++k) {
      const int m = fft::mode_index(k, grid.n_s);
      if (std::abs(m) > m_rand) continue;
      psi.at(j, k) = gauss_complex(rng);
    }
  }
  fft::transform_2d(psi.amps, grid.n_phi, grid.n_s, fft::Direction::Inverse);

  const double s_mid = 0.5 * (grid.s_min + grid.s_max);
  std::vector<double> envelope(grid.n_s);
  for (int k = 0; k < grid.n_s; ++k) {
    const double d = grid.s(k) - s_mid;
    envelope[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  for (int j = 0; j < grid.n_phi; ++j) {
    for (int k = 0; k < grid.n_s; ++k) {
      psi.at(j, k) *= envelope[k];
    }
  }

  // Project back inside the cutoff so the band limit is exact.
  fft::transform_2d(psi.amps, grid.n_phi, grid.n_s, fft::Direction::Forward);
  for (int j = 0; j < grid.n_phi; ++j) {
    const int n = fft::mode_index(j, grid.n_phi);
    for (int k = 0; k < grid.n_s; ++k) {
      const int m = fft::mode_index(k, grid.n_s);
      if (std::abs(n) > mode_cutoff || std::abs(m) > mode_cutoff) {
        psi.at(j, k) = {0.0, 0.0};
      }
    }
  }
  fft::transform_2d(psi.amps, grid.n_phi, grid.n_s, fft::Direction::Inverse);

  const double scale = 1.0 / norm(psi);
  for (auto& a : psi.amps) {
    a *= scale;
  }
  return psi;
}

Wavefunction sample(
    const std::function<std::complex<double>(double, double)>& f,
    const GridSpec& grid) {
  Wavefunction psi = zero_state(grid);
  for (int j = 0; j < grid.n_phi; ++j) {
    for (int k = 0; k < grid.n_s; ++k) {
      const std::complex<double> v = f(grid.phi(j), std::exp(grid.s(k)));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("sample: function value is not finite");
      }
      psi.at(j, k) = v;
    }
  }
  return psi;
}

void dump_csv(const Wavefunction& psi, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "# n_phi=%d n_s=%d s_min=%.17g s_max=%.17g\n",
                psi.grid.n_phi, psi.grid.n_s, psi.grid.s_min, psi.grid.s_max);
  out << line << "j,k,phi,s,re,im\n";
  for (int j = 0; j < psi.grid.n_phi; ++j) {
    for (int k = 0; k < psi.grid.n_s; ++k) {
      const std::complex<double> v = psi.at(j, k);
      std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g,%.17g,%.17g\n", j, k,
                    psi.grid.phi(j), psi.grid.s(k), v.real(), v.imag());
      out << line;
    }
  }
}

void dump_csv(const Wavefunction& psi, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path);
  }
  dump_csv(psi, out);
}

BoxGridSpec make_box_grid(int n, double half_width) {
  if (!power_of_two(n)) {
    throw std::invalid_argument("box grid size must be a power of two");
  }
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("box half-width must be positive");
  }
  return {n, half_width};
}

BoxWavefunction box_zero_state(const BoxGridSpec& grid) {
  BoxWavefunction psi;
  psi.grid = grid;
  psi.amps.assign(static_cast<std::size_t>(grid.n) * grid.n, {0.0, 0.0});
  return psi;
}

std::complex<double> inner(const BoxWavefunction& psi,
                           const BoxWavefunction& chi) {
  check_compatible(psi, chi);
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < psi.amps.size(); ++i) {
    const std::complex<double> term = std::conj(psi.amps[i]) * chi.amps[i];
    re.add(term.real());
    im.add(term.imag());
  }
  return std::complex<double>{re.value(), im.value()} *
         (psi.grid.dx() * psi.grid.dx());
}

double norm(const BoxWavefunction& psi) {
  return std::sqrt(std::abs(inner(psi, psi).real()));
}

BoxWavefunction operator+(const BoxWavefunction& psi, const BoxWavefunction& chi) {
  check_compatible(psi, chi);
  BoxWavefunction out = psi;
  for (std::size_t i = 0; i < out.amps.size(); ++i) {
    out.amps[i] += chi.amps[i];
  }
  return out;
}

BoxWavefunction operator-(const BoxWavefunction& psi, const BoxWavefunction& chi) {
  check_compatible(psi, chi);
  BoxWavefunction out = psi;
  for (std::size_t i = 0; i < out.amps.size(); ++i) {
    out.amps[i] -= chi.amps[i];
  }
  return out;
}

BoxWavefunction operator*(const std::complex<double>& c,
                          const BoxWavefunction& psi) {
  BoxWavefunction out = psi;
  for (auto& a : out.amps) {
    a *= c;
  }
  return out;
}

BoxWavefunction box_random_state(std::uint64_t seed, const BoxGridSpec& grid,
                                 int mode_cutoff, double envelope_width) {
  if (mode_cutoff < 1 || mode_cutoff > grid.n / 4) {
    throw std::invalid_argument("mode cutoff must lie in [1, n/4]");
  }
  if (!(envelope_width > 0.0)) {
    throw std::invalid_argument("envelope width must be positive");
  }
  const double sigma = envelope_width / 3.0;
  const int guard = envelope_mode_guard(sigma, 2.0 * grid.half_width);
  const int m_rand = std::max(0, mode_cutoff - guard);

  std::mt19937_64 rng(seed);
  BoxWavefunction psi = box_zero_state(grid);
  for (int ix = 0; ix < grid.n; ++ix) {
    const int nx = fft::mode_index(ix, grid.n);
    if (std::abs(nx) > m_rand) continue;
    for (int iy = 0; iy < grid.n; ++iy) {
      const int ny = fft::mode_index(iy, grid.n);
      if (std::abs(ny) > m_rand) continue;
      psi.at(ix, iy) = gauss_complex(rng);
    }
  }
  fft::transform_2d(psi.amps, grid.n, grid.n, fft::Direction::Inverse);

  std::vector<double> envelope(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    envelope[i] =
        std::exp(-grid.coord(i) * grid.coord(i) / (2.0 * sigma * sigma));
  }
  for (int ix = 0; ix < grid.n; ++ix) {
    for (int iy = 0; iy < grid.n; ++iy) {
      psi.at(ix, iy) *= envelope[ix] * envelope[iy];
    }
  }

  fft::transform_2d(psi.amps, grid.n, grid.n, fft::Direction::Forward);
  for (int ix = 0; ix < grid.n; ++ix) {
    const int nx = fft::mode_index(ix, grid.n);
    for (int iy = 0; iy < grid.n; ++iy) {
      const int ny = fft::mode_index(iy, grid.n);
      if (std::abs(nx) > mode_cutoff || std::abs(ny) > mode_cutoff) {
        psi.at(ix, iy) = {0.0, 0.0};
      }
    }
  }
  fft::transform_2d(psi.amps, grid.n, grid.n, fft::Direction::Inverse);

  const double scale = 1.0 / norm(psi);
  for (auto& a : psi.amps) {
    a *= scale;
  }
  return psi;
}

BoxWavefunction box_sample(
    const std::function<std::complex<double>(double, double)>& f,
    const BoxGridSpec& grid) {
  BoxWavefunction psi = box_zero_state(grid);
  for (int ix = 0; ix < grid.n; ++ix) {
    for (int iy = 0; iy < grid.n; ++iy) {
      const std::complex<double> v = f(grid.coord(ix), grid.coord(iy));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("box_sample: function value is not finite");
      }
      psi.at(ix, iy) = v;
    }
  }
  return psi;
}

}  // namespace gtq::hilbert
