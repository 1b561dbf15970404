#pragma once

#include <complex>
#include <vector>

namespace gtq::fft {

enum class Direction { Forward, Inverse };

// In-place DFT along one axis of a row-major (n0, n1) array. Forward is
// unnormalized; Inverse divides by the transformed axis length. Plans use
// FFTW_ESTIMATE so results are reproducible run to run.
void transform_axis0(std::vector<std::complex<double>>& a, int n0, int n1,
                     Direction dir);
void transform_axis1(std::vector<std::complex<double>>& a, int n0, int n1,
                     Direction dir);
void transform_2d(std::vector<std::complex<double>>& a, int n0, int n1,
                  Direction dir);

// Signed mode for DFT bin i of an n-point transform: i for i <= n/2,
// otherwise i - n.
int mode_index(int i, int n);

}  // namespace gtq::fft
