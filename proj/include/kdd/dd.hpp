#pragma once

#include <complex>
#include <vector>

#include "kdd/grid.hpp"
#include "kdd/pattern.hpp"

namespace kdd {

using cd = std::complex<double>;

/// Inverse DFT of each frame's count function. PSF(0,t) = N_t / N.
/// Layout: values[t * N + r].
struct PointSpreadFunction {
    GridShape shape;
    std::vector<cd> values;

    cd at(long r, int t) const {
        return values[static_cast<size_t>(t) * static_cast<size_t>(shape.n_space()) +
                      static_cast<size_t>(r)];
    }
};

/// Histogram of ordered inter-sample differences p(dk, t, t'):
/// the cross-correlation of sampling patterns. Entries are counts, so
/// nonnegative integers for integer-count patterns.
/// Layout: values[((t * T) + t') * N + dk].
class DifferentialDistribution {
public:
    DifferentialDistribution() = default;
    explicit DifferentialDistribution(GridShape shape)
        : shape_(std::move(shape)),
          values_(static_cast<size_t>(shape_.n_space()) * shape_.frames * shape_.frames, 0.0) {}

    const GridShape& shape() const { return shape_; }
    long n_space() const { return shape_.n_space(); }
    int frames() const { return shape_.frames; }

    double at(long dk, int t, int tp) const { return values_[idx(dk, t, tp)]; }
    double& at(long dk, int t, int tp) { return values_[idx(dk, t, tp)]; }

    /// Contiguous slice over dk for fixed (t, t').
    const double* slice(int t, int tp) const { return values_.data() + idx(0, t, tp); }
    double* slice(int t, int tp) { return values_.data() + idx(0, t, tp); }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    bool operator==(const DifferentialDistribution&) const = default;

private:
    size_t idx(long dk, int t, int tp) const {
        return (static_cast<size_t>(t) * shape_.frames + static_cast<size_t>(tp)) *
                   static_cast<size_t>(shape_.n_space()) +
               static_cast<size_t>(dk);
    }

    GridShape shape_;
    std::vector<double> values_;
};

PointSpreadFunction psf(const SamplingPattern& pattern);

/// O(S^2) pairwise reference.
DifferentialDistribution dd_direct(const SamplingPattern& pattern);

/// FFT cross-correlation of the count functions; rounds to the nearest
/// integer (the exact result is integral). OpenMP-parallel over frame pairs.
DifferentialDistribution dd_fft(const SamplingPattern& pattern);

}  // namespace kdd
