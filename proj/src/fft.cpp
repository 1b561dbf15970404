#include "gtq/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace gtq::fft {

namespace {

struct Plan {
  fftw_plan plan = nullptr;
  std::complex<double>* buf = nullptr;
  int n = 0;
};

// FFTW planning is not thread-safe and the cached plans share scratch
// buffers, so all transforms are serialized here.
std::mutex g_fft_mutex;

Plan& cached_plan(int n, int sign) {
  static std::map<std::pair<int, int>, Plan> cache;
  const auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Plan p;
    p.n = n;
    p.buf = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n));
    p.plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(p.buf),
                              reinterpret_cast<fftw_complex*>(p.buf), sign,
                              FFTW_ESTIMATE);
    it = cache.emplace(key, p).first;
  }
  return it->second;
}

void run_lines(std::complex<double>* data, int nline, int count, long stride,
               long dist, Direction dir) {
  std::lock_guard<std::mutex> lock(g_fft_mutex);
  const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
  Plan& p = cached_plan(nline, sign);
  const double scale = dir == Direction::Inverse ? 1.0 / nline : 1.0;
  for (int c = 0; c < count; ++c) {
    std::complex<double>* line = data + static_cast<long>(c) * dist;
    for (int i = 0; i < nline; ++i) {
      p.buf[i] = line[i * stride];
    }
    fftw_execute(p.plan);
    for (int i = 0; i < nline; ++i) {
      line[i * stride] = dir == Direction::Inverse ? p.buf[i] * scale : p.buf[i];
    }
  }
}

void check_shape(const std::vector<std::complex<double>>& a, int n0, int n1) {
  if (n0 <= 0 || n1 <= 0 ||
      a.size() != static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1)) {
    throw std::invalid_argument("transform: array shape mismatch");
  }
}

}  // namespace

void transform_axis0(std::vector<std::complex<double>>& a, int n0, int n1,
                     Direction dir) {
  check_shape(a, n0, n1);
  run_lines(a.data(), n0, n1, n1, 1, dir);
}

void transform_axis1(std::vector<std::complex<double>>& a, int n0, int n1,
                     Direction dir) {
  check_shape(a, n0, n1);
  run_lines(a.data(), n1, n0, 1, n1, dir);
}

void transform_2d(std::vector<std::complex<double>>& a, int n0, int n1,
                  Direction dir) {
  transform_axis0(a, n0, n1, dir);
  transform_axis1(a, n0, n1, dir);
}

int mode_index(int i, int n) {
  return i <= n / 2 ? i : i - n;
}

}  // namespace gtq::fft
