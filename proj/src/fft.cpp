#include "sobwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <tuple>

namespace sobwave {
namespace {

// One cached FFTW plan per (dim, size, direction), with persistent aligned
// buffers; execution copies in and out so callers keep plain std::vector.
struct PlanSlot {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t total = 0;

    ~PlanSlot() {
        if (plan) fftw_destroy_plan(plan);
        if (in) fftw_free(in);
        if (out) fftw_free(out);
    }
};

PlanSlot& plan_for(const GridSpec& grid, int sign) {
    static std::map<std::tuple<int, int, int>, PlanSlot> pool;
    auto key = std::make_tuple(grid.dim, grid.size, sign);
    auto it = pool.find(key);
    if (it != pool.end()) return it->second;

    PlanSlot& slot = pool[key];
    slot.total = grid.total();
    slot.in = fftw_alloc_complex(slot.total);
    slot.out = fftw_alloc_complex(slot.total);
    int n[4] = {grid.size, grid.size, grid.size, grid.size};
    slot.plan = fftw_plan_dft(grid.dim, n, slot.in, slot.out, sign, FFTW_ESTIMATE);
    return slot;
}

std::vector<cplx> run(const GridSpec& grid, const std::vector<cplx>& data, int sign, double scale) {
    grid.validate();
    PlanSlot& slot = plan_for(grid, sign);
    for (std::size_t i = 0; i < slot.total; ++i) {
        slot.in[i][0] = data[i].real();
        slot.in[i][1] = data[i].imag();
    }
    fftw_execute(slot.plan);
    std::vector<cplx> result(slot.total);
    for (std::size_t i = 0; i < slot.total; ++i)
        result[i] = cplx(slot.out[i][0] * scale, slot.out[i][1] * scale);
    return result;
}

}  // namespace

std::vector<cplx> fft_forward(const GridSpec& grid, const std::vector<cplx>& samples) {
    return run(grid, samples, FFTW_FORWARD, 1.0 / static_cast<double>(grid.total()));
}

std::vector<cplx> fft_backward(const GridSpec& grid, const std::vector<cplx>& coeffs) {
    return run(grid, coeffs, FFTW_BACKWARD, 1.0);
}

}  // namespace sobwave
