#pragma once

#include <vector>

#include "sobwave/spectral.hpp"

namespace sobwave {

// Smooth compactly supported test function sampled on the grid.  The fixed
// construction is the standard bump b(t) = exp(-1/(1-t^2)) on |t|<1 (peak
// normalized to 1), affinely mapped to the requested box and tensorized per
// axis; plateau windows use the C^infinity two-sided smoothstep ramp so they
// are exactly 1 on an inner box.  Boxes wrap periodically on the torus.
class WindowFunction {
public:
    // Bump profile on `box`, value 1 at the box center.
    static WindowFunction bump(const GridSpec& grid, const Box& box);
    // Plateau: 0 outside `box`, exactly 1 on `box` shrunk by `ramp` per side.
    static WindowFunction plateau(const GridSpec& grid, const Box& box, double ramp);
    // Constant-one window (whole torus); the identity for window_multiply.
    static WindowFunction flat(const GridSpec& grid);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const SpatialRegion& support() const { return support_; }
    bool nonnegative() const { return nonnegative_; }
    const std::vector<cplx>& spectrum() const { return spectrum_; }

    double value_at(const std::array<double, 2>& x) const;  // sampled-grid lookup

    // Pointwise product of windows (supports intersect).
    WindowFunction multiply(const WindowFunction& other) const;

    // True iff this window equals 1 (to tol) wherever `other` is nonzero,
    // with one grid cell of margin: the "= 1 on a neighborhood" premise.
    bool covers(const WindowFunction& other, double tol = 1e-9) const;

private:
    WindowFunction(GridSpec grid, std::vector<double> samples, SpatialRegion support,
                   bool nonnegative);

    GridSpec grid_;
    std::vector<double> samples_;
    SpatialRegion support_;
    bool nonnegative_ = true;
    std::vector<cplx> spectrum_;  // forward transform of samples, cached
};

// Spectral representation of w*u via the dealiased product; exact bilinear.
SpectralDistribution window_multiply(const SpectralDistribution& u, const WindowFunction& w);

}  // namespace sobwave
