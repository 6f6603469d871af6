#include "sobwave/wavefront.hpp"

#include <cmath>
#include <numbers>

namespace sobwave {
namespace {

// The unpaired -N/2 lattice mode aliases +-N/2 and has no direction; its
// content is a band-edge artifact that cell windows would smear into real
// shells, so the estimator drops it up front.
SpectralDistribution strip_nyquist(const SpectralDistribution& u) {
    const GridSpec& grid = u.grid();
    std::vector<cplx> coeffs = u.coeffs();
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        auto k = grid.freqs_of_flat(flat);
        for (int d = 0; d < grid.dim; ++d)
            if (k[d] == grid.min_freq()) {
                coeffs[flat] = cplx(0.0, 0.0);
                break;
            }
    }
    return SpectralDistribution(grid, std::move(coeffs), u.support_hint(), u.provenance());
}

Box window_box(const GridSpec& grid, const WavefrontParams& params, int cell) {
    const int c = params.cells_per_axis;
    const double w = 1.0 / c;
    Box b;
    b.dim = grid.dim;
    int rest = cell;
    for (int d = grid.dim - 1; d >= 0; --d) {
        const int idx = rest % c;
        rest /= c;
        b.lo[d] = (idx - params.cell_overlap) * w;
        b.hi[d] = (idx + 1 + params.cell_overlap) * w;
    }
    return b;
}

// Window boxes may stick out of [0,1); they wrap on the torus, which the
// window sampler handles, so no clipping here.
WindowFunction cell_window(const GridSpec& grid, const WavefrontParams& params, int cell) {
    return WindowFunction::bump(grid, window_box(grid, params, cell));
}

}  // namespace

OrderFit fit_order(const AnnulusProfile& profile, int j_lo, int j_hi, double floor,
                   const AnnulusProfile* reference, double rel_floor) {
    OrderFit fit;
    j_lo = std::max(j_lo, profile.j_min);
    j_hi = std::min(j_hi, profile.j_max);
    double peak = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) peak = std::max(peak, profile.energy(j));
    std::vector<double> xs, ys;
    int top_usable = j_lo - 1;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double e = profile.energy(j);
        // Shells below the dynamic range of the profile itself or of the
        // whole-distribution reference carry window leakage, not signal.
        double shell_floor = std::max(floor, rel_floor * peak);
        if (reference && j >= reference->j_min && j <= reference->j_max)
            shell_floor = std::max(shell_floor, rel_floor * reference->energy(j));
        if (e > shell_floor) {
            xs.push_back(j);
            ys.push_back(std::log2(e));
            top_usable = j;
        }
    }
    if (xs.empty() || top_usable < j_hi) {
        // The spectrum fell under the floor before the band edge: treat as
        // smooth rather than fitting a truncated tail.
        fit.smooth = true;
        fit.shells_used = static_cast<int>(xs.size());
        return fit;
    }
    if (xs.size() < 3) {
        fit.degenerate = true;
        fit.shells_used = static_cast<int>(xs.size());
        return fit;
    }
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.slope = sxy / sxx;
    const double intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (intercept + fit.slope * xs[i]);
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / double(n));
    fit.order = -0.5 * fit.slope;
    fit.shells_used = static_cast<int>(n);
    return fit;
}

OrderField::OrderField(GridSpec grid, WavefrontParams params, std::vector<OrderFit> fits)
    : grid_(grid), params_(params), fits_(std::move(fits)) {}

int OrderField::cell_count() const {
    int c = params_.cells_per_axis;
    return grid_.dim == 1 ? c : c * c;
}

int OrderField::dir_count() const { return grid_.dim == 1 ? 2 : params_.direction_cells; }

const OrderFit& OrderField::fit(int cell, int dir) const {
    return fits_[static_cast<std::size_t>(cell) * dir_count() + dir];
}

Box OrderField::cell_box(int cell) const {
    const int c = params_.cells_per_axis;
    const double w = 1.0 / c;
    Box b;
    b.dim = grid_.dim;
    int rest = cell;
    for (int d = grid_.dim - 1; d >= 0; --d) {
        const int idx = rest % c;
        rest /= c;
        b.lo[d] = idx * w;
        b.hi[d] = (idx + 1) * w;
    }
    return b;
}

std::array<double, 2> OrderField::cell_center(int cell) const {
    Box b = cell_box(cell);
    return {0.5 * (b.lo[0] + b.hi[0]), grid_.dim == 2 ? 0.5 * (b.lo[1] + b.hi[1]) : 0.0};
}

double OrderField::dir_center_angle(int dir) const {
    return 2.0 * std::numbers::pi * dir / params_.direction_cells;
}

DirectionSet OrderField::dir_cell_arc(int dir) const {
    DirectionSet arc = DirectionSet::empty_set(grid_.dim, params_.mask_bins);
    if (grid_.dim == 1) {
        arc.set(dir);
        return arc;
    }
    // Tile the mask circle by direction cells; each owns mask_bins/cells bins.
    const int per_cell = params_.mask_bins / params_.direction_cells;
    const int center = dir * per_cell;
    for (int s = -(per_cell / 2); s <= per_cell - 1 - per_cell / 2; ++s)
        arc.set(((center + s) % params_.mask_bins + params_.mask_bins) % params_.mask_bins);
    return arc;
}

OrderField estimate_order_field(const SpectralDistribution& u_raw,
                                const WavefrontParams& params) {
    const SpectralDistribution u = strip_nyquist(u_raw);
    const GridSpec& grid = u.grid();
    if (grid.dim > 2)
        throw_error(ErrorCode::DimensionOverflow, "order fields are computed for dim 1 or 2");
    if (grid.dim == 2 && params.mask_bins % params.direction_cells != 0)
        throw_error(ErrorCode::UnsupportedSpec,
                    "mask_bins must be a multiple of direction_cells");
    const int cells = grid.dim == 1 ? params.cells_per_axis
                                    : params.cells_per_axis * params.cells_per_axis;
    const int dirs = grid.dim == 1 ? 2 : params.direction_cells;
    const int j_lo = params.fit_j_min.value_or(default_fit_j_min(grid));
    const int j_hi = params.fit_j_max.value_or(default_fit_j_max(grid));
    const int j_top = shell_of_norm_sq(std::int64_t(grid.size / 2) * (grid.size / 2) * grid.dim);

    // Reference profile of the whole distribution: cone/cell energies are
    // only trusted within the estimator's dynamic range of it.
    const AnnulusProfile reference = annulus_profile_of_coeffs(
        grid, window_multiply(u, central_analysis_window(grid)).coeffs(), std::nullopt);

    std::vector<OrderFit> fits(static_cast<std::size_t>(cells) * dirs);
    for (int cell = 0; cell < cells; ++cell) {
        const SpectralDistribution wu = window_multiply(u, cell_window(grid, params, cell));
        // Cells carrying less than the dynamic-range fraction of the whole
        // distribution's off-origin energy hold window leakage only.
        if (annulus_profile_of_coeffs(grid, wu.coeffs(), std::nullopt).total() <
            params.relative_floor * reference.total()) {
            for (int dir = 0; dir < dirs; ++dir) {
                OrderFit smooth_fit;
                smooth_fit.smooth = true;
                fits[std::size_t(cell) * dirs + dir] = smooth_fit;
            }
            continue;
        }
        if (grid.dim == 1) {
            for (int dir = 0; dir < 2; ++dir) {
                DirectionSet ray = DirectionSet::empty_set(1);
                ray.set(dir);
                AnnulusProfile prof = annulus_profile_of_coeffs(grid, wu.coeffs(), ray);
                fits[std::size_t(cell) * 2 + dir] = fit_order(
                    prof, j_lo, j_hi, params.smooth_floor, &reference, params.relative_floor);
            }
            continue;
        }
        // One pass over the lattice fills a (mask bin) x (shell) histogram;
        // every directional cone sum is then a bin-range accumulation.
        const int nb = params.mask_bins;
        std::vector<double> hist(static_cast<std::size_t>(nb) * (j_top + 1), 0.0);
        const auto& coeffs = wu.coeffs();
        for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
            const double p = std::norm(coeffs[flat]);
            if (p == 0.0) continue;
            auto k = grid.freqs_of_flat(flat);
            const std::int64_t nsq = std::int64_t(k[0]) * k[0] + std::int64_t(k[1]) * k[1];
            if (nsq == 0) continue;
            const int bin = direction_bin_2d(k[0], k[1], nb);
            hist[std::size_t(bin) * (j_top + 1) + shell_of_norm_sq(nsq)] += p;
        }
        const int reach = static_cast<int>(
            std::lround(params.cone_half_angle / (2.0 * std::numbers::pi / nb)));
        for (int dir = 0; dir < dirs; ++dir) {
            const int center = dir * (nb / dirs);
            AnnulusProfile prof;
            prof.j_min = 0;
            prof.j_max = j_top;
            prof.energies.assign(static_cast<std::size_t>(j_top + 1), 0.0);
            for (int s = -reach; s <= reach; ++s) {
                const int bin = ((center + s) % nb + nb) % nb;
                for (int j = 0; j <= j_top; ++j)
                    prof.energies[j] += hist[std::size_t(bin) * (j_top + 1) + j];
            }
            fits[std::size_t(cell) * dirs + dir] = fit_order(
                prof, j_lo, j_hi, params.smooth_floor, &reference, params.relative_floor);
        }
    }
    return OrderField(grid, params, std::move(fits));
}

OrderFit estimate_order_directional(const SpectralDistribution& u_raw, int cell, int dir,
                                    const WavefrontParams& params) {
    const SpectralDistribution u = strip_nyquist(u_raw);
    const GridSpec& grid = u.grid();
    const SpectralDistribution wu = window_multiply(u, cell_window(grid, params, cell));
    std::optional<DirectionSet> cone;
    if (grid.dim == 1) {
        DirectionSet ray = DirectionSet::empty_set(1);
        ray.set(dir);
        cone = ray;
    } else {
        const double center = 2.0 * std::numbers::pi * dir / params.direction_cells;
        cone = cone_from_caps(2, {center}, params.cone_half_angle, params.mask_bins);
    }
    const AnnulusProfile reference = annulus_profile_of_coeffs(
        grid, window_multiply(u, central_analysis_window(grid)).coeffs(), std::nullopt);
    AnnulusProfile prof = annulus_profile_of_coeffs(grid, wu.coeffs(), cone);
    OrderFit fit = fit_order(prof, params.fit_j_min.value_or(default_fit_j_min(grid)),
                             params.fit_j_max.value_or(default_fit_j_max(grid)),
                             params.smooth_floor, &reference, params.relative_floor);
    if (fit.degenerate)
        throw_error(ErrorCode::DegenerateFit, "fewer than three usable shells in the fit range");
    return fit;
}

OrderFit estimate_global_order(const SpectralDistribution& u_raw,
                               const WavefrontParams& params) {
    const SpectralDistribution u = strip_nyquist(u_raw);
    const SpectralDistribution wu = window_multiply(u, central_analysis_window(u.grid()));
    AnnulusProfile prof = annulus_profile_of_coeffs(u.grid(), wu.coeffs(), std::nullopt);
    return fit_order(prof, params.fit_j_min.value_or(default_fit_j_min(u.grid())),
                     params.fit_j_max.value_or(default_fit_j_max(u.grid())),
                     params.smooth_floor, nullptr, params.relative_floor);
}

WavefrontSet estimate_wavefront(const OrderField& field, double r) {
    WavefrontSet wf;
    wf.order = r;
    wf.grid = field.grid();
    wf.params = field.params();
    wf.carrier = ConicRegionSet(field.grid().dim, field.params().mask_bins);
    for (int cell = 0; cell < field.cell_count(); ++cell) {
        bool undecided = false;
        for (int dir = 0; dir < field.dir_count(); ++dir) {
            const OrderFit& fit = field.fit(cell, dir);
            if (fit.degenerate) {
                undecided = true;
                continue;
            }
            if (fit.smooth) continue;
            if (fit.order < r - field.params().threshold_margin) {
                wf.entries.push_back({cell, dir});
                wf.carrier.add(SpatialRegion(field.grid().dim, {field.cell_box(cell)}),
                               field.dir_cell_arc(dir));
            }
        }
        if (undecided) wf.undecided_cells.push_back(cell);
    }
    return wf;
}

WavefrontSet estimate_wavefront(const SpectralDistribution& u, double r,
                                const WavefrontParams& params) {
    return estimate_wavefront(estimate_order_field(u, params), r);
}

ContainmentReport wf_contained(const WavefrontSet& wf, const ConicRegionSet& l) {
    const int want_bins = wf.grid.dim == 1 ? 2 : wf.params.mask_bins;
    if (l.dim() != wf.grid.dim || l.nbins() != want_bins)
        throw_error(ErrorCode::DimMismatch, "wavefront and carrier discretizations differ");
    ContainmentReport report;
    OrderField geometry(wf.grid, wf.params, {});
    for (const WavefrontEntry& e : wf.entries) {
        const std::array<double, 2> x = geometry.cell_center(e.cell);
        const int bin = wf.grid.dim == 1 ? e.dir
                                         : e.dir * (wf.params.mask_bins / wf.params.direction_cells);
        if (!l.contains(x, bin)) {
            report.contained = false;
            report.violations.push_back(e);
        }
    }
    return report;
}

SpatialRegion sing_supp(const SpectralDistribution& u, double r, const WavefrontParams& params) {
    WavefrontSet wf = estimate_wavefront(u, r, params);
    return wf.carrier.spatial_projection();
}

}  // namespace sobwave
