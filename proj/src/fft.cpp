#include "kdd/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace kdd::fft {

namespace {

// One cached plan per (dims, direction). Plans are created with
// FFTW_UNALIGNED so they can be executed on any caller buffer via the
// new-array interface.
struct PlanCache {
    std::mutex mtx;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

    fftw_plan get(std::span<const int> dims, int sign) {
        std::vector<int> key_dims(dims.begin(), dims.end());
        std::lock_guard lock(mtx);
        auto key = std::make_pair(key_dims, sign);
        auto it = plans.find(key);
        if (it != plans.end()) return it->second;

        long n = 1;
        for (int d : dims) n *= d;
        fftw_complex* scratch = fftw_alloc_complex(static_cast<size_t>(n));
        if (!scratch) throw std::bad_alloc();
        fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), key_dims.data(),
                                    scratch, scratch, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(scratch);
        if (!p) throw std::runtime_error("fftw_plan_dft failed");
        plans.emplace(std::move(key), p);
        return p;
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void execute(std::span<const int> dims, cd* data, int sign) {
    for (int d : dims)
        if (d < 1) throw std::invalid_argument("fft: dimensions must be positive");
    fftw_plan p = cache().get(dims, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, raw, raw);
}

}  // namespace

void forward(std::span<const int> dims, cd* data) {
    execute(dims, data, FFTW_FORWARD);
}

void inverse(std::span<const int> dims, cd* data) {
    execute(dims, data, FFTW_BACKWARD);
    long n = 1;
    for (int d : dims) n *= d;
    const double scale = 1.0 / static_cast<double>(n);
    for (long i = 0; i < n; ++i) data[i] *= scale;
}

void forward(std::span<const int> dims, std::vector<cd>& data) { forward(dims, data.data()); }
void inverse(std::span<const int> dims, std::vector<cd>& data) { inverse(dims, data.data()); }

}  // namespace kdd::fft
