#pragma once

#include <optional>

#include "sobwave/conic.hpp"
#include "sobwave/synth.hpp"

namespace sobwave {

// Dyadic shell energies E_j = sum_{2^j <= |k| < 2^{j+1}} |F(phi u)(k)|^2,
// optionally restricted to a direction cone.  The decay exponent of E_j
// carries the Sobolev order.
struct AnnulusProfile {
    int j_min = 0;
    int j_max = 0;
    std::vector<double> energies;  // energies[j - j_min]

    double energy(int j) const { return energies[static_cast<std::size_t>(j - j_min)]; }
    double total() const;
};

// Default least-squares fit range [3, log2(N/2) - 2]; the lowest shells carry
// window leakage and the top shell carries band truncation.
int default_fit_j_min(const GridSpec& grid);
int default_fit_j_max(const GridSpec& grid);

// q_{s;psi}(u) = (sum_k <k>^{2s} |F(psi u)(k)|^2)^{1/2}, k = 0 included.
double q_seminorm(const SpectralDistribution& u, const WindowFunction& psi, double s);

// p_{r;phi,V}(u) = (sum_{k != 0, dir(k) in V} <k>^{2r} |F(phi u)(k)|^2)^{1/2}.
double p_seminorm(const SpectralDistribution& u, const WindowFunction& phi,
                  const DirectionSet& v, double r);

// Same weighted sums evaluated directly on a coefficient array (no window).
double q_weighted_norm(const GridSpec& grid, const std::vector<cplx>& coeffs, double s);
double p_weighted_norm(const GridSpec& grid, const std::vector<cplx>& coeffs,
                       const DirectionSet& v, double r);

AnnulusProfile annulus_profile(const SpectralDistribution& u, const WindowFunction& phi,
                               const std::optional<DirectionSet>& cone = std::nullopt);
AnnulusProfile annulus_profile_of_coeffs(const GridSpec& grid, const std::vector<cplx>& coeffs,
                                         const std::optional<DirectionSet>& cone = std::nullopt);

struct TensorRatio {
    double lhs = 0.0;    // q_{s; phi (x) psi}(u (x) v)
    double rhs = 0.0;    // q_{r'; phi}(u) * q_{r''; psi}(v)
    double ratio = 0.0;  // 0 when both vanish
};

// The tensor seminorm inequality, evaluated without materializing u (x) v:
// F((phi u) (x) (psi v)) factorizes, so the left side is an on-the-fly double
// sum over the factor lattices.  Requires the admissibility
// s <= r' + min{0,r''} and s <= r'' + min{0,r'}.
TensorRatio tensor_seminorm_ratio(const SpectralDistribution& u, const SpectralDistribution& v,
                                  const WindowFunction& phi, const WindowFunction& psi, double s,
                                  double r1, double r2);

// On-the-fly q over the product lattice of two coefficient arrays.
double tensor_q_weighted_norm(const GridSpec& grid_a, const std::vector<cplx>& a,
                              const GridSpec& grid_b, const std::vector<cplx>& b, double s);

}  // namespace sobwave
