#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sobwave/fft.hpp"
#include "sobwave/grid.hpp"
#include "sobwave/region.hpp"

namespace sobwave {

// A compactly supported distribution represented by its Fourier coefficients
// on the integer lattice of `grid`.  This is the universal carrier for u, v,
// u (x) v and uv; negative-order members (point masses) exist only here and
// never through trusted real-space samples.
class SpectralDistribution {
public:
    SpectralDistribution() = default;
    SpectralDistribution(GridSpec grid, std::vector<cplx> coeffs,
                         std::optional<SpatialRegion> support_hint = std::nullopt,
                         std::string provenance = "custom");

    static SpectralDistribution zero(const GridSpec& grid);

    const GridSpec& grid() const { return grid_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    std::vector<cplx>& coeffs() { return coeffs_; }
    const std::optional<SpatialRegion>& support_hint() const { return support_hint_; }
    void set_support_hint(SpatialRegion r) { support_hint_ = std::move(r); }
    const std::string& provenance() const { return provenance_; }

    cplx coeff_at(const std::array<int, 4>& k) const;

    // Real-space samples of the band-limited representative (synthesis).
    std::vector<cplx> samples() const { return fft_backward(grid_, coeffs_); }

    double l2_norm() const;  // sqrt(sum |c_k|^2), Parseval mass

    // Max |c(-k) - conj(c(k))|; zero (to rounding) for real-valued members.
    double hermitian_defect() const;

private:
    GridSpec grid_;
    std::vector<cplx> coeffs_;
    std::optional<SpatialRegion> support_hint_;
    std::string provenance_;
};

// a*u + b*v, exact on coefficients.
SpectralDistribution linear_combine(cplx a, const SpectralDistribution& u, cplx b,
                                    const SpectralDistribution& v);

// Tensor product: coeffs(k,l) = u(k) * v(l); dims add (<= 4) and the result
// is materialized, so total size is guarded.
SpectralDistribution tensor_product(const SpectralDistribution& u, const SpectralDistribution& v);

// Band-truncated true product of the band-limited representatives, computed
// by zero-padded (2N per axis) transform so the retained band carries the
// exact linear convolution of the coefficient arrays.
std::vector<cplx> dealiased_product(const GridSpec& grid, const std::vector<cplx>& a,
                                    const std::vector<cplx>& b);

double relative_l2_error(const std::vector<cplx>& got, const std::vector<cplx>& want);

}  // namespace sobwave
