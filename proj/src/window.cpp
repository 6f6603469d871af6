#include "sobwave/window.hpp"

#include <cmath>

namespace sobwave {
namespace {

// Standard bump, peak-normalized: b(0) = 1, support (-1,1).
double bump_profile(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

// C^infinity monotone step: 0 for t<=0, 1 for t>=1.
double smoothstep(double t) {
    auto sigma = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    const double a = sigma(t);
    const double b = sigma(1.0 - t);
    return a / (a + b);
}

// Periodic offset of x into [-0.5, 0.5) relative to `center`.
double torus_offset(double x, double center) {
    double d = x - center;
    d -= std::floor(d + 0.5);
    return d;
}

double axis_bump(double x, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    return bump_profile(torus_offset(x, center) / half);
}

double axis_plateau(double x, double lo, double hi, double ramp) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double d = std::abs(torus_offset(x, center));
    if (d >= half) return 0.0;
    if (d <= half - ramp) return 1.0;
    return smoothstep((half - d) / ramp);
}

}  // namespace

WindowFunction::WindowFunction(GridSpec grid, std::vector<double> samples, SpatialRegion support,
                               bool nonnegative)
    : grid_(grid),
      samples_(std::move(samples)),
      support_(std::move(support)),
      nonnegative_(nonnegative) {
    std::vector<cplx> c(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) c[i] = cplx(samples_[i], 0.0);
    spectrum_ = fft_forward(grid_, c);
}

WindowFunction WindowFunction::bump(const GridSpec& grid, const Box& box) {
    grid.validate();
    if (box.dim != grid.dim)
        throw_error(ErrorCode::DimMismatch, "window box dim does not match grid");
    std::vector<double> s(grid.total());
    const int n = grid.size;
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i) s[i] = axis_bump(double(i) / n, box.lo[0], box.hi[0]);
    } else {
        for (int i = 0; i < n; ++i) {
            const double vx = axis_bump(double(i) / n, box.lo[0], box.hi[0]);
            for (int j = 0; j < n; ++j)
                s[std::size_t(i) * n + j] =
                    vx * axis_bump(double(j) / n, box.lo[1], box.hi[1]);
        }
    }
    return WindowFunction(grid, std::move(s), SpatialRegion(grid.dim, {box}), true);
}

WindowFunction WindowFunction::plateau(const GridSpec& grid, const Box& box, double ramp) {
    grid.validate();
    if (box.dim != grid.dim)
        throw_error(ErrorCode::DimMismatch, "window box dim does not match grid");
    for (int d = 0; d < grid.dim; ++d)
        if (!(ramp > 0.0 && 2.0 * ramp < box.hi[d] - box.lo[d]))
            throw_error(ErrorCode::UnsupportedSpec, "plateau ramp must fit inside the box");
    std::vector<double> s(grid.total());
    const int n = grid.size;
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i)
            s[i] = axis_plateau(double(i) / n, box.lo[0], box.hi[0], ramp);
    } else {
        for (int i = 0; i < n; ++i) {
            const double vx = axis_plateau(double(i) / n, box.lo[0], box.hi[0], ramp);
            for (int j = 0; j < n; ++j)
                s[std::size_t(i) * n + j] =
                    vx * axis_plateau(double(j) / n, box.lo[1], box.hi[1], ramp);
        }
    }
    return WindowFunction(grid, std::move(s), SpatialRegion(grid.dim, {box}), true);
}

WindowFunction WindowFunction::flat(const GridSpec& grid) {
    grid.validate();
    return WindowFunction(grid, std::vector<double>(grid.total(), 1.0),
                          SpatialRegion::whole(grid.dim), true);
}

double WindowFunction::value_at(const std::array<double, 2>& x) const {
    const int n = grid_.size;
    std::size_t flat = 0;
    for (int d = 0; d < grid_.dim; ++d) {
        double xd = x[d] - std::floor(x[d]);
        int i = static_cast<int>(std::lround(xd * n)) % n;
        flat = flat * n + static_cast<std::size_t>(i);
    }
    return samples_[flat];
}

WindowFunction WindowFunction::multiply(const WindowFunction& other) const {
    require_same_grid(grid_, other.grid_);
    std::vector<double> s(samples_.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = samples_[i] * other.samples_[i];
    return WindowFunction(grid_, std::move(s), support_.intersect(other.support_),
                          nonnegative_ && other.nonnegative_);
}

bool WindowFunction::covers(const WindowFunction& other, double tol) const {
    require_same_grid(grid_, other.grid_);
    const int n = grid_.size;
    const std::size_t total = samples_.size();
    for (std::size_t i = 0; i < total; ++i) {
        if (other.samples_[i] == 0.0) continue;
        // require 1 on the sample and its axis neighbours (one-cell margin)
        std::size_t idx[5];
        int count = 0;
        idx[count++] = i;
        if (grid_.dim == 1) {
            idx[count++] = (i + 1) % total;
            idx[count++] = (i + total - 1) % total;
        } else {
            const std::size_t row = i / n, col = i % n;
            idx[count++] = ((row + 1) % n) * n + col;
            idx[count++] = ((row + n - 1) % n) * n + col;
            idx[count++] = row * n + (col + 1) % n;
            idx[count++] = row * n + (col + n - 1) % n;
        }
        for (int j = 0; j < count; ++j)
            if (std::abs(samples_[idx[j]] - 1.0) > tol) return false;
    }
    return true;
}

SpectralDistribution window_multiply(const SpectralDistribution& u, const WindowFunction& w) {
    require_same_grid(u.grid(), w.grid());
    std::vector<cplx> c = dealiased_product(u.grid(), u.coeffs(), w.spectrum());
    std::optional<SpatialRegion> hint = u.support_hint()
                                            ? u.support_hint()->intersect(w.support())
                                            : w.support();
    return SpectralDistribution(u.grid(), std::move(c), hint, u.provenance());
}

}  // namespace sobwave
