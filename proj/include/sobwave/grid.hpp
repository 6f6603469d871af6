#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sobwave/errors.hpp"

namespace sobwave {

// Periodic grid on the torus [0,1)^dim with N samples per axis and the
// integer frequency lattice k in {-N/2, ..., N/2-1} per axis.  Coefficient
// arrays are stored row-major in natural FFT order (index i maps to frequency
// i for i < N/2 and i - N otherwise, last axis fastest).
struct GridSpec {
    int dim = 1;
    int size = 0;  // N, power of two, >= 16

    void validate() const {
        if (dim < 1 || dim > 4)
            throw_error(ErrorCode::DimensionOverflow,
                        "grid dim must be in [1,4], got " + std::to_string(dim));
        if (size < 16 || (size & (size - 1)) != 0)
            throw_error(ErrorCode::UnsupportedSpec,
                        "grid size must be a power of two >= 16, got " + std::to_string(size));
    }

    std::size_t total() const {
        std::size_t t = 1;
        for (int d = 0; d < dim; ++d) t *= static_cast<std::size_t>(size);
        return t;
    }

    int freq_of_index(int i) const { return i < size / 2 ? i : i - size; }
    int index_of_freq(int k) const { return k >= 0 ? k : k + size; }
    int min_freq() const { return -size / 2; }
    int max_freq() const { return size / 2 - 1; }

    // Per-axis frequencies of a flat row-major index.
    std::array<int, 4> freqs_of_flat(std::size_t flat) const {
        std::array<int, 4> k{0, 0, 0, 0};
        for (int d = dim - 1; d >= 0; --d) {
            k[d] = freq_of_index(static_cast<int>(flat % size));
            flat /= size;
        }
        return k;
    }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.dim == b.dim && a.size == b.size;
    }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b))
        throw_error(ErrorCode::GridMismatch,
                    "grids differ: dim " + std::to_string(a.dim) + "/" + std::to_string(b.dim) +
                        ", size " + std::to_string(a.size) + "/" + std::to_string(b.size));
}

// Japanese bracket squared, <k>^2 = 1 + |k|^2, from the integer norm square.
inline double bracket_sq(std::int64_t norm_sq) { return 1.0 + static_cast<double>(norm_sq); }

// <k>^{2s} with the overflow guard |s| <= 8 enforced by callers.
inline double bracket_weight(std::int64_t norm_sq, double two_s) {
    return std::pow(bracket_sq(norm_sq), 0.5 * two_s);
}

inline void require_weight_order(double s) {
    if (!(std::abs(s) <= 8.0))
        throw_error(ErrorCode::WeightOverflow,
                    "Sobolev order out of guarded range |s| <= 8: " + std::to_string(s));
}

// Dyadic shell index j with 2^j <= |k| < 2^{j+1}, decided exactly from the
// integer norm square; norm_sq must be >= 1.
inline int shell_of_norm_sq(std::int64_t norm_sq) {
    int j = 0;
    // 4^{j+1} <= norm_sq means |k| >= 2^{j+1}.
    while ((norm_sq >> (2 * (j + 1))) > 0) ++j;
    return j;
}

}  // namespace sobwave
