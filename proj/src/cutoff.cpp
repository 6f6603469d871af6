#include "sobwave/cutoff.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sobwave {
namespace {

double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    auto sigma = [](double x) { return std::exp(-1.0 / x); };
    const double a = sigma(t);
    const double b = sigma(1.0 - t);
    return a / (a + b);
}

// Angular distance (radians) from `bin` to the nearest member of `set`;
// infinity when the set is empty.
double distance_to(const DirectionSet& set, int bin) {
    if (set.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (int b = 0; b < set.nbins(); ++b)
        if (set.test(b)) best = std::min(best, bin_angular_distance(bin, b, set.nbins()));
    return best;
}

}  // namespace

HomogeneousCutoff::HomogeneousCutoff(int dim, std::vector<double> values,
                                     double transition_halfwidth)
    : dim_(dim), values_(std::move(values)), transition_halfwidth_(transition_halfwidth) {
    for (double v : values_)
        if (!(v >= 0.0 && v <= 1.0))
            throw_error(ErrorCode::UnsupportedSpec, "cutoff values must lie in [0,1]");
}

double HomogeneousCutoff::mask_1d(long long k) const {
    if (k == 0) return 0.0;
    return values_[static_cast<std::size_t>(direction_bin_1d(k))];
}

double HomogeneousCutoff::mask_2d(double kx, double ky) const {
    if (kx == 0.0 && ky == 0.0) return 0.0;
    return values_[static_cast<std::size_t>(direction_bin_2d(kx, ky, nbins()))];
}

DirectionSet HomogeneousCutoff::support() const {
    DirectionSet s(dim_, nbins());
    for (int b = 0; b < nbins(); ++b) s.set(b, values_[b] > 0.0);
    return s;
}

DirectionSet HomogeneousCutoff::core() const {
    DirectionSet s(dim_, nbins());
    for (int b = 0; b < nbins(); ++b) s.set(b, values_[b] == 1.0);
    return s;
}

DirectionSet HomogeneousCutoff::complement_support() const {
    DirectionSet s(dim_, nbins());
    for (int b = 0; b < nbins(); ++b) s.set(b, values_[b] < 1.0);
    return s;
}

HomogeneousCutoff homogeneous_cutoff(const DirectionSet& core, const DirectionSet& fattened) {
    if (core.dim() != fattened.dim() || core.nbins() != fattened.nbins())
        throw_error(ErrorCode::DimMismatch, "core/fattened cones use different discretizations");
    if (core.empty())
        throw_error(ErrorCode::UnsupportedSpec, "cutoff core must be nonempty");
    if (!core.subset_of(fattened))
        throw GateError(ErrorCode::NoTransitionRoom, "core not inside fattened",
                        "cutoff core is not contained in the fattened cone");
    const int dim = core.dim();
    const int n = core.nbins();

    if (dim == 1) {
        // Two isolated rays: any 0/1 assignment is a smooth degree-0 function.
        std::vector<double> v(2, 0.0);
        for (int b = 0; b < 2; ++b)
            if (core.test(b)) v[b] = 1.0;
        return HomogeneousCutoff(1, std::move(v), std::numbers::pi);
    }

    if (!core.subset_of(fattened.interior()))
        throw GateError(ErrorCode::NoTransitionRoom, "core touches the boundary of fattened",
                        "no angular room between the core and the cutoff boundary");

    const DirectionSet outside = fattened.complement();
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    double theta_t = std::numbers::pi;
    for (int b = 0; b < n; ++b) {
        if (core.test(b)) {
            v[b] = 1.0;
            continue;
        }
        if (outside.test(b)) {
            v[b] = 0.0;
            continue;
        }
        const double d_core = distance_to(core, b);
        const double d_out = distance_to(outside, b);
        if (std::isinf(d_out)) {
            v[b] = 1.0;  // fattened is the full sphere: no boundary to reach
            continue;
        }
        v[b] = smoothstep(d_out / (d_out + d_core));
        theta_t = std::min(theta_t, d_out + d_core);
    }
    return HomogeneousCutoff(2, std::move(v), theta_t);
}

}  // namespace sobwave
