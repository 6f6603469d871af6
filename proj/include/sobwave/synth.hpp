#pragma once

#include <cstdint>
#include <functional>

#include "sobwave/spectral.hpp"
#include "sobwave/window.hpp"

namespace sobwave {

enum class DistributionKind {
    Delta,            // point mass at x0
    Heaviside,        // unit step at x0 (orientation +1 up / -1 down), windowed
    OneSidedPower,    // u^(k) = 1_{k>0} (1+k)^{-a} e^{-2 pi i k x0}
    PowerSingularity, // |x-x0|^{-a} singularity via its exact transform, windowed
    GaussianBump,     // smooth gaussian of width sigma at x0
    PlaneChirp,       // smooth cos(2 pi q (d.(x-x0))^2), windowed
    CustomSpectral,   // arbitrary coefficient law
};

// Everything synthesize() needs; unused fields are ignored per kind.
struct DistributionSpec {
    DistributionKind kind = DistributionKind::Delta;
    std::array<double, 2> center{0.5, 0.5};     // x0, in the central half
    double exponent = 0.75;                     // a (powers) or p (power laws)
    int orientation = +1;                       // Heaviside direction of the jump
    double width = 0.05;                        // gaussian sigma
    double rate = 30.0;                         // chirp quadratic rate
    std::array<double, 2> direction{1.0, 0.0};  // chirp modulation direction
    double amplitude = 1.0;
    std::function<cplx(const GridSpec&, const std::array<int, 4>&)> law;  // CustomSpectral
};

// Band-limited spectral representative of `spec` on `grid`.  Kinds with a
// closed-form transform are filled in exactly at lattice points; smooth
// real-space kinds are sampled and transformed; jump/power kinds combine
// their exact torus coefficients with the dealiased synthesis window.
SpectralDistribution synthesize(const DistributionSpec& spec, const GridSpec& grid);

// Smooth cutoffs shared by synthesis and analysis: synthesis support stays in
// the central half of the torus, the analysis window is 1 on all of it.
WindowFunction central_synthesis_window(const GridSpec& grid);
WindowFunction central_analysis_window(const GridSpec& grid);

// Hermitian random-phase power law <k>^{-p} (real-valued distribution of
// global order p - dim/2) and a smooth random field with gaussian spectral
// roll-off at the absolute frequency `cutoff`.
DistributionSpec make_random_powerlaw_spec(double p, std::uint64_t seed);
DistributionSpec make_random_smooth_spec(double cutoff, std::uint64_t seed);

}  // namespace sobwave
