#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdd {

/// Periodic Cartesian k-space grid: 1-2 phase-encode dimensions times T frames.
/// All index arithmetic is modular per dimension.
struct GridShape {
    std::vector<int> phase_dims;  // e.g. {N} or {Ny, Nz}
    int frames = 1;

    GridShape() = default;
    GridShape(std::vector<int> dims, int T) : phase_dims(std::move(dims)), frames(T) {
        validate();
    }

    void validate() const {
        if (phase_dims.empty())
            throw std::invalid_argument("GridShape: no phase-encode dimensions");
        for (int d : phase_dims)
            if (d < 1) throw std::invalid_argument("GridShape: dimensions must be positive");
        if (frames < 1) throw std::invalid_argument("GridShape: frames must be positive");
    }

    /// Number of grid points N (product of phase-encode dims).
    long n_space() const {
        long n = 1;
        for (int d : phase_dims) n *= d;
        return n;
    }
    long n_total() const { return n_space() * frames; }
    int ndim() const { return static_cast<int>(phase_dims.size()); }

    bool operator==(const GridShape&) const = default;
};

/// Row-major flatten of a multi-index.
inline long flatten(std::span<const int> idx, std::span<const int> dims) {
    long flat = 0;
    for (size_t d = 0; d < dims.size(); ++d) flat = flat * dims[d] + idx[d];
    return flat;
}

inline std::vector<int> unflatten(long flat, std::span<const int> dims) {
    std::vector<int> idx(dims.size());
    for (size_t d = dims.size(); d-- > 0;) {
        idx[d] = static_cast<int>(flat % dims[d]);
        flat /= dims[d];
    }
    return idx;
}

/// (a - b) mod n, result in [0, n).
inline int wrap_diff(int a, int b, int n) {
    int d = (a - b) % n;
    return d < 0 ? d + n : d;
}

inline int wrap(int a, int n) {
    int d = a % n;
    return d < 0 ? d + n : d;
}

/// Circular distance |a - b| on a ring of size n, in [0, n/2].
inline int ring_dist(int a, int b, int n) {
    int d = wrap_diff(a, b, n);
    return std::min(d, n - d);
}

/// Flat index of the elementwise difference (a - b) mod dims.
inline long wrap_diff_flat(long a, long b, std::span<const int> dims) {
    long flat = 0;
    // walk dims from the last (fastest) to the first, then recombine row-major
    long stride = 1;
    for (size_t d = dims.size(); d-- > 0;) {
        int n = dims[d];
        int ia = static_cast<int>((a / stride) % n);
        int ib = static_cast<int>((b / stride) % n);
        flat += static_cast<long>(wrap_diff(ia, ib, n)) * stride;
        stride *= n;
    }
    return flat;
}

/// Flat index of the elementwise negation (-a) mod dims.
inline long wrap_neg_flat(long a, std::span<const int> dims) {
    return wrap_diff_flat(0, a, dims);
}

inline std::string dims_to_string(std::span<const int> dims) {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(dims[i]);
    }
    return s;
}

}  // namespace kdd
