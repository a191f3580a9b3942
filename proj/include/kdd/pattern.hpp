#pragma once

#include <cstdint>
#include <vector>

#include "kdd/grid.hpp"

namespace kdd {

/// Integer-count sampling pattern s(k,t) on a periodic grid. Counts may
/// exceed one; repeated samples contribute multiplicity everywhere.
/// Layout: counts[t * N + k], k row-major over phase_dims.
class SamplingPattern {
public:
    SamplingPattern() = default;
    explicit SamplingPattern(GridShape shape)
        : shape_(std::move(shape)),
          counts_(static_cast<size_t>(shape_.n_total()), 0),
          totals_(static_cast<size_t>(shape_.frames), 0) {}

    const GridShape& shape() const { return shape_; }
    long n_space() const { return shape_.n_space(); }
    int frames() const { return shape_.frames; }

    int count(long k, int t) const { return counts_[idx(k, t)]; }
    long total(int t) const { return totals_[static_cast<size_t>(t)]; }
    long total() const {
        long s = 0;
        for (long v : totals_) s += v;
        return s;
    }

    void add(long k, int t, int n = 1) {
        counts_[idx(k, t)] += n;
        totals_[static_cast<size_t>(t)] += n;
    }
    void remove(long k, int t) {
        auto& c = counts_[idx(k, t)];
        if (c <= 0) throw std::invalid_argument("SamplingPattern: removing absent sample");
        --c;
        --totals_[static_cast<size_t>(t)];
    }

    const std::vector<int>& counts() const { return counts_; }

    /// Sample list view: (flat k, t) repeated per multiplicity.
    std::vector<std::pair<long, int>> samples() const {
        std::vector<std::pair<long, int>> out;
        out.reserve(static_cast<size_t>(total()));
        const long n = n_space();
        for (int t = 0; t < shape_.frames; ++t)
            for (long k = 0; k < n; ++k)
                for (int rep = 0; rep < count(k, t); ++rep) out.emplace_back(k, t);
        return out;
    }

    /// Acceleration factor N*T / total samples.
    double acceleration() const {
        long s = total();
        if (s == 0) return 0.0;
        return static_cast<double>(shape_.n_total()) / static_cast<double>(s);
    }

    bool operator==(const SamplingPattern&) const = default;

private:
    size_t idx(long k, int t) const {
        return static_cast<size_t>(t) * static_cast<size_t>(shape_.n_space()) +
               static_cast<size_t>(k);
    }

    GridShape shape_;
    std::vector<int> counts_;
    std::vector<long> totals_;
};

}  // namespace kdd
