#pragma once

#include <complex>
#include <span>
#include <vector>

namespace kdd::fft {

using cd = std::complex<double>;

/// In-place c2c DFT over a row-major multidimensional array.
/// Convention: forward carries no scale, inverse carries 1/N.
/// Plan creation is serialized internally; execution is thread-safe, so
/// concurrent transforms on distinct buffers are fine.
void forward(std::span<const int> dims, cd* data);
void inverse(std::span<const int> dims, cd* data);

void forward(std::span<const int> dims, std::vector<cd>& data);
void inverse(std::span<const int> dims, std::vector<cd>& data);

}  // namespace kdd::fft
