#include "sobwave/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace sobwave {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_central(const DistributionSpec& spec, int dim) {
    for (int d = 0; d < dim; ++d)
        if (spec.center[d] < 0.25 || spec.center[d] > 0.75)
            throw_error(ErrorCode::UnsupportedSpec,
                        "distribution center must lie in the central half of the torus");
}

cplx phase(double k_dot_x0) { return std::polar(1.0, -kTwoPi * k_dot_x0); }

SpectralDistribution from_law(
    const GridSpec& grid,
    const std::function<cplx(const GridSpec&, const std::array<int, 4>&)>& law,
    std::optional<SpatialRegion> hint, const std::string& provenance) {
    std::vector<cplx> c(grid.total());
    for (std::size_t flat = 0; flat < c.size(); ++flat)
        c[flat] = law(grid, grid.freqs_of_flat(flat));
    return SpectralDistribution(grid, std::move(c), std::move(hint), provenance);
}

SpectralDistribution from_samples(const GridSpec& grid,
                                  const std::function<double(const std::array<double, 2>&)>& f,
                                  std::optional<SpatialRegion> hint,
                                  const std::string& provenance) {
    std::vector<cplx> s(grid.total());
    const int n = grid.size;
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i) s[i] = cplx(f({double(i) / n, 0.0}), 0.0);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s[std::size_t(i) * n + j] = cplx(f({double(i) / n, double(j) / n}), 0.0);
    }
    return SpectralDistribution(grid, fft_forward(grid, s), std::move(hint), provenance);
}

double torus_dist(double x, double c) {
    double d = x - c;
    d -= std::floor(d + 0.5);
    return d;
}

SpectralDistribution synth_delta(const DistributionSpec& spec, const GridSpec& grid) {
    auto law = [&spec](const GridSpec& g, const std::array<int, 4>& k) {
        double dot = 0.0;
        for (int d = 0; d < g.dim; ++d) dot += k[d] * spec.center[d];
        return spec.amplitude * phase(dot);
    };
    std::array<double, 2> c = spec.center;
    SpatialRegion hint = grid.dim == 1 ? SpatialRegion::interval(c[0] - 1e-3, c[0] + 1e-3)
                                       : SpatialRegion::box2(c[0] - 1e-3, c[0] + 1e-3,
                                                             c[1] - 1e-3, c[1] + 1e-3);
    return from_law(grid, law, hint, "delta");
}

// Exact coefficients of the raw periodic step, before windowing.
cplx step_coeff(int k, double x0, int orientation) {
    if (k == 0) return cplx(orientation > 0 ? 1.0 - x0 : x0, 0.0);
    const cplx e = phase(k * x0);
    const cplx denom(0.0, kTwoPi * k);
    return orientation > 0 ? (e - 1.0) / denom : (1.0 - e) / denom;
}

SpectralDistribution synth_heaviside(const DistributionSpec& spec, const GridSpec& grid) {
    if (grid.dim != 1)
        throw_error(ErrorCode::UnsupportedSpec, "heaviside is one-dimensional");
    std::vector<cplx> c(grid.total());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int k = grid.freq_of_index(int(i));
        c[i] = spec.amplitude * step_coeff(k, spec.center[0], spec.orientation);
        // unpaired Nyquist mode of a real field: keep the symmetric branch
        if (k == grid.min_freq()) c[i] = cplx(c[i].real(), 0.0);
    }
    SpectralDistribution raw(grid, std::move(c), SpatialRegion::whole(1), "heaviside");
    // The synthesis window removes the seam jump and confines the support.
    return window_multiply(raw, central_synthesis_window(grid));
}

SpectralDistribution synth_one_sided_power(const DistributionSpec& spec, const GridSpec& grid) {
    if (grid.dim != 1)
        throw_error(ErrorCode::UnsupportedSpec, "one_sided_power is one-dimensional");
    if (!(spec.exponent > 0.0 && spec.exponent < 2.0))
        throw_error(ErrorCode::UnsupportedSpec, "one_sided_power exponent must be in (0,2)");
    auto law = [&spec](const GridSpec&, const std::array<int, 4>& k) {
        if (k[0] <= 0) return cplx(0.0, 0.0);
        return spec.amplitude * std::pow(1.0 + k[0], -spec.exponent) * phase(k[0] * spec.center[0]);
    };
    return from_law(grid, law, SpatialRegion::whole(1), "one_sided_power");
}

SpectralDistribution synth_power_singularity(const DistributionSpec& spec, const GridSpec& grid) {
    if (grid.dim != 1)
        throw_error(ErrorCode::UnsupportedSpec, "power_singularity is one-dimensional");
    const double a = spec.exponent;
    if (!(a > 0.0 && a < 1.0))
        throw_error(ErrorCode::UnsupportedSpec,
                    "power_singularity exponent must be in (0,1) for the exact transform");
    // F(|x|^{-a})(k) = 2 Gamma(1-a) sin(pi a / 2) (2 pi |k|)^{a-1}
    const double c_a = 2.0 * std::tgamma(1.0 - a) * std::sin(0.5 * std::numbers::pi * a);
    auto law = [&spec, c_a, a](const GridSpec& g, const std::array<int, 4>& k) {
        if (k[0] == 0) return cplx(0.0, 0.0);
        cplx v = spec.amplitude * c_a * std::pow(kTwoPi * std::abs(k[0]), a - 1.0) *
                 phase(k[0] * spec.center[0]);
        if (k[0] == g.min_freq()) v = cplx(v.real(), 0.0);
        return v;
    };
    SpectralDistribution raw = from_law(grid, law, SpatialRegion::whole(1), "power_singularity");
    return window_multiply(raw, central_synthesis_window(grid));
}

SpectralDistribution synth_gaussian(const DistributionSpec& spec, const GridSpec& grid) {
    const double sigma = spec.width;
    if (!(sigma > 0.0 && sigma <= 0.1))
        throw_error(ErrorCode::UnsupportedSpec, "gaussian width must be in (0, 0.1]");
    auto f = [&spec, sigma, &grid](const std::array<double, 2>& x) {
        double q = 0.0;
        for (int d = 0; d < grid.dim; ++d) {
            const double dd = torus_dist(x[d], spec.center[d]);
            q += dd * dd;
        }
        return spec.amplitude * std::exp(-0.5 * q / (sigma * sigma));
    };
    const double pad = 6.0 * sigma;
    SpatialRegion hint =
        grid.dim == 1
            ? SpatialRegion::interval(spec.center[0] - pad, spec.center[0] + pad)
            : SpatialRegion::box2(spec.center[0] - pad, spec.center[0] + pad,
                                  spec.center[1] - pad, spec.center[1] + pad);
    return from_samples(grid, f, hint, "gaussian_bump");
}

SpectralDistribution synth_chirp(const DistributionSpec& spec, const GridSpec& grid) {
    auto f = [&spec, &grid](const std::array<double, 2>& x) {
        double t = 0.0;
        for (int d = 0; d < grid.dim; ++d)
            t += spec.direction[d] * torus_dist(x[d], spec.center[d]);
        return spec.amplitude * std::cos(kTwoPi * spec.rate * t * t);
    };
    SpectralDistribution raw = from_samples(grid, f, SpatialRegion::whole(grid.dim), "plane_chirp");
    return window_multiply(raw, central_synthesis_window(grid));
}

}  // namespace

SpectralDistribution synthesize(const DistributionSpec& spec, const GridSpec& grid) {
    grid.validate();
    if (grid.dim > 2)
        throw_error(ErrorCode::UnsupportedSpec, "base distributions live in dim 1 or 2");
    require_central(spec, grid.dim);
    switch (spec.kind) {
        case DistributionKind::Delta: return synth_delta(spec, grid);
        case DistributionKind::Heaviside: return synth_heaviside(spec, grid);
        case DistributionKind::OneSidedPower: return synth_one_sided_power(spec, grid);
        case DistributionKind::PowerSingularity: return synth_power_singularity(spec, grid);
        case DistributionKind::GaussianBump: return synth_gaussian(spec, grid);
        case DistributionKind::PlaneChirp: return synth_chirp(spec, grid);
        case DistributionKind::CustomSpectral: {
            if (!spec.law)
                throw_error(ErrorCode::UnsupportedSpec, "custom_spectral requires a law");
            return from_law(grid, spec.law, SpatialRegion::whole(grid.dim), "custom_spectral");
        }
    }
    throw_error(ErrorCode::UnsupportedSpec, "unknown distribution kind");
}

WindowFunction central_synthesis_window(const GridSpec& grid) {
    Box b;
    b.dim = grid.dim;
    for (int d = 0; d < grid.dim; ++d) {
        b.lo[d] = 0.25;
        b.hi[d] = 0.75;
    }
    return WindowFunction::plateau(grid, b, 0.08);
}

WindowFunction central_analysis_window(const GridSpec& grid) {
    Box b;
    b.dim = grid.dim;
    for (int d = 0; d < grid.dim; ++d) {
        b.lo[d] = 0.10;
        b.hi[d] = 0.90;
    }
    return WindowFunction::plateau(grid, b, 0.08);
}

DistributionSpec make_random_powerlaw_spec(double p, std::uint64_t seed) {
    DistributionSpec spec;
    spec.kind = DistributionKind::CustomSpectral;
    spec.exponent = p;
    spec.law = [p, seed](const GridSpec& g, const std::array<int, 4>& k) -> cplx {
        // Phase depends only on |k| pattern via a per-frequency seeded draw so
        // the law is deterministic and Hermitian: theta(-k) = -theta(k).
        std::int64_t key = 0;
        for (int d = 0; d < g.dim; ++d) key = key * 131071 + k[d];
        const bool flip = key < 0;
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(flip ? -key : key));
        std::uniform_real_distribution<double> unif(0.0, kTwoPi);
        double theta = unif(rng);
        if (flip) theta = -theta;
        std::int64_t nsq = 0;
        bool nyquist = false;
        for (int d = 0; d < g.dim; ++d) {
            nsq += std::int64_t(k[d]) * k[d];
            nyquist = nyquist || k[d] == g.min_freq();
        }
        if (nsq == 0) return cplx(0.0, 0.0);
        if (nyquist) theta = 0.0;  // unpaired modes of a real field are real
        return std::polar(std::pow(bracket_sq(nsq), -0.5 * p), theta);
    };
    return spec;
}

DistributionSpec make_random_smooth_spec(double cutoff, std::uint64_t seed) {
    DistributionSpec spec;
    spec.kind = DistributionKind::CustomSpectral;
    spec.law = [cutoff, seed](const GridSpec& g, const std::array<int, 4>& k) -> cplx {
        std::int64_t key = 0;
        for (int d = 0; d < g.dim; ++d) key = key * 131071 + k[d];
        const bool flip = key < 0;
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(flip ? -key : key));
        std::uniform_real_distribution<double> unif(0.0, kTwoPi);
        double theta = unif(rng);
        if (flip) theta = -theta;
        std::int64_t nsq = 0;
        bool nyquist = false;
        for (int d = 0; d < g.dim; ++d) {
            nsq += std::int64_t(k[d]) * k[d];
            nyquist = nyquist || k[d] == g.min_freq();
        }
        if (nyquist) theta = 0.0;
        return std::polar(std::exp(-double(nsq) / (cutoff * cutoff)), theta);
    };
    return spec;
}

}  // namespace sobwave
