#include "sobwave/indices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sobwave {
namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

TensorIndexBudget tensor_indices(const IndexHypotheses& h) {
    h.validate();
    TensorIndexBudget b;
    b.s_max = std::min(h.r_prime + std::min(0.0, h.r_second),
                       h.r_second + std::min(0.0, h.r_prime));
    b.r_max = std::min(h.r1 + std::min(0.0, h.r_second), h.r2 + std::min(0.0, h.r_prime));
    return b;
}

ProductIndexBudget product_indices(const IndexHypotheses& h, double strictness_margin) {
    h.validate();
    const double half_m = 0.5 * h.m;
    ProductIndexBudget b;
    b.r = tensor_indices(h).r_max;
    if (!(b.r > half_m))
        throw GateError(ErrorCode::IndexInadmissible, "r <= m/2",
                        "index gate: r = min{r1+min{0,r''}, r2+min{0,r'}} = " + fmt(b.r) +
                            " must exceed m/2 = " + fmt(half_m));
    if (h.r_prime + h.r_second < 0.0)
        throw GateError(ErrorCode::IndexInadmissible, "r' + r'' < 0",
                        "index gate: r' + r'' = " + fmt(h.r_prime + h.r_second) +
                            " must be nonnegative");
    b.r_max = b.r - half_m;
    const double cap = h.r_prime + h.r_second - half_m;
    b.s_max = std::min(std::min(h.r_prime, h.r_second), cap);
    if (b.s_max == cap &&
        (h.r_prime == half_m || h.r_second == half_m || -b.s_max == half_m)) {
        b.s_max -= strictness_margin;
        b.strictness_notes = "s_* cap r'+r''-m/2 is strict at an m/2 coincidence; "
                             "decremented by " + fmt(strictness_margin);
    }
    return b;
}

DisjointIndexBudget disjoint_support_indices(const IndexHypotheses& h,
                                             double strictness_margin) {
    h.validate();
    const double half_m = 0.5 * h.m;
    if (h.r1 + h.r2 < 0.0)
        throw GateError(ErrorCode::IndexInadmissible, "r1 + r2 < 0",
                        "disjoint-support gate: r1 + r2 = " + fmt(h.r1 + h.r2) +
                            " must be nonnegative");
    if (h.r_prime + h.r_second < 0.0)
        throw GateError(ErrorCode::IndexInadmissible, "r' + r'' < 0",
                        "disjoint-support gate: r' + r'' = " + fmt(h.r_prime + h.r_second) +
                            " must be nonnegative");
    DisjointIndexBudget b;
    std::string notes;

    const double s_cap = h.r_prime + h.r_second - half_m;
    b.s_max = std::min(std::min(h.r_prime, h.r_second), s_cap);
    if (b.s_max == s_cap &&
        (h.r_prime == half_m || h.r_second == half_m || -b.s_max == half_m)) {
        b.s_max -= strictness_margin;
        notes += "s_* cap strict at an m/2 coincidence; ";
    }
    const double r_cap = h.r1 + h.r2 - half_m;
    b.r_max = std::min(std::min(h.r1, h.r2), r_cap);
    if (b.r_max == r_cap && (h.r1 == half_m || h.r2 == half_m || -b.r_max == half_m)) {
        b.r_max -= strictness_margin;
        notes += "r_* cap strict at an m/2 coincidence; ";
    }
    b.strictness_notes = notes;
    return b;
}

bool n_delta_contains(const std::array<double, 2>& x, const std::array<double, 2>& y,
                      const std::array<double, 2>& xi, const std::array<double, 2>& eta, int m) {
    for (int d = 0; d < m; ++d) {
        if (x[d] != y[d]) return false;
        if (eta[d] != -xi[d]) return false;
    }
    return true;
}

}  // namespace sobwave
