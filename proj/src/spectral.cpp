#include "sobwave/spectral.hpp"

#include <cmath>

namespace sobwave {

SpectralDistribution::SpectralDistribution(GridSpec grid, std::vector<cplx> coeffs,
                                           std::optional<SpatialRegion> support_hint,
                                           std::string provenance)
    : grid_(grid),
      coeffs_(std::move(coeffs)),
      support_hint_(std::move(support_hint)),
      provenance_(std::move(provenance)) {
    grid_.validate();
    if (coeffs_.size() != grid_.total())
        throw_error(ErrorCode::GridMismatch, "coefficient array does not match grid size");
}

SpectralDistribution SpectralDistribution::zero(const GridSpec& grid) {
    return SpectralDistribution(grid, std::vector<cplx>(grid.total(), cplx(0.0, 0.0)),
                                std::nullopt, "zero");
}

cplx SpectralDistribution::coeff_at(const std::array<int, 4>& k) const {
    std::size_t flat = 0;
    for (int d = 0; d < grid_.dim; ++d)
        flat = flat * grid_.size + static_cast<std::size_t>(grid_.index_of_freq(k[d]));
    return coeffs_[flat];
}

double SpectralDistribution::l2_norm() const {
    double s = 0.0;
    for (const cplx& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double SpectralDistribution::hermitian_defect() const {
    double worst = 0.0;
    const std::size_t total = coeffs_.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        auto k = grid_.freqs_of_flat(flat);
        bool reflectable = true;
        std::size_t rflat = 0;
        for (int d = 0; d < grid_.dim; ++d) {
            if (-k[d] < grid_.min_freq() || -k[d] > grid_.max_freq()) {
                reflectable = false;  // -N/2 has no mirror on the lattice
                break;
            }
            rflat = rflat * grid_.size + static_cast<std::size_t>(grid_.index_of_freq(-k[d]));
        }
        if (!reflectable) continue;
        worst = std::max(worst, std::abs(coeffs_[rflat] - std::conj(coeffs_[flat])));
    }
    return worst;
}

SpectralDistribution linear_combine(cplx a, const SpectralDistribution& u, cplx b,
                                    const SpectralDistribution& v) {
    require_same_grid(u.grid(), v.grid());
    std::vector<cplx> c(u.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * u.coeffs()[i] + b * v.coeffs()[i];
    std::optional<SpatialRegion> hint;
    if (u.support_hint() && v.support_hint()) hint = u.support_hint()->unite(*v.support_hint());
    return SpectralDistribution(u.grid(), std::move(c), hint, "combine");
}

SpectralDistribution tensor_product(const SpectralDistribution& u, const SpectralDistribution& v) {
    if (u.grid().size != v.grid().size)
        throw_error(ErrorCode::GridMismatch, "tensor factors must share N");
    const int dim = u.grid().dim + v.grid().dim;
    if (dim > 4)
        throw_error(ErrorCode::DimensionOverflow, "tensor result exceeds dim 4");
    GridSpec grid{dim, u.grid().size};
    // Materialization guard; higher-dimensional seminorms go through the
    // on-the-fly accumulators instead.
    constexpr std::size_t kMaxCoeffs = std::size_t(1) << 24;
    if (grid.total() > kMaxCoeffs)
        throw_error(ErrorCode::DimensionOverflow,
                    "tensor result too large to materialize; use factorized accumulation");
    std::vector<cplx> c(grid.total());
    const std::size_t nv = v.coeffs().size();
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        const cplx a = u.coeffs()[i];
        const std::size_t base = i * nv;
        for (std::size_t j = 0; j < nv; ++j) c[base + j] = a * v.coeffs()[j];
    }
    std::optional<SpatialRegion> hint;
    if (u.support_hint() && v.support_hint() && dim <= 2)
        hint = u.support_hint()->product(*v.support_hint());
    return SpectralDistribution(grid, std::move(c), hint,
                                u.provenance() + "(x)" + v.provenance());
}

std::vector<cplx> dealiased_product(const GridSpec& grid, const std::vector<cplx>& a,
                                    const std::vector<cplx>& b) {
    // The -N/2 mode has no +N/2 partner on the coarse lattice; splitting it
    // across +-N/2 on the padded grid (and folding back on truncation) keeps
    // real inputs real, which slowly decaying spectra otherwise lose.
    const GridSpec fine{grid.dim, grid.size * 2};
    const std::size_t fine_total = fine.total();
    const int nyquist = -grid.size / 2;

    auto embed = [&](const std::vector<cplx>& coeffs) {
        std::vector<cplx> out(fine_total, cplx(0.0, 0.0));
        std::array<int, 4> mirrored{};
        for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
            auto k = grid.freqs_of_flat(flat);
            int splits = 0;
            for (int d = 0; d < grid.dim; ++d) splits += k[d] == nyquist;
            const double weight = std::pow(0.5, splits);
            // distribute over every +-N/2 combination of the split axes
            const int combos = 1 << splits;
            for (int mask = 0; mask < combos; ++mask) {
                int bit = 0;
                for (int d = 0; d < grid.dim; ++d) {
                    mirrored[d] = k[d];
                    if (k[d] == nyquist && ((mask >> bit++) & 1)) mirrored[d] = -nyquist;
                }
                std::size_t fflat = 0;
                for (int d = 0; d < grid.dim; ++d)
                    fflat = fflat * fine.size +
                            static_cast<std::size_t>(fine.index_of_freq(mirrored[d]));
                out[fflat] += weight * coeffs[flat];
            }
        }
        return out;
    };

    std::vector<cplx> fa = fft_backward(fine, embed(a));
    std::vector<cplx> fb = fft_backward(fine, embed(b));
    for (std::size_t i = 0; i < fine_total; ++i) fa[i] *= fb[i];
    std::vector<cplx> fc = fft_forward(fine, fa);

    std::vector<cplx> result(grid.total());
    std::array<int, 4> mirrored{};
    for (std::size_t flat = 0; flat < result.size(); ++flat) {
        auto k = grid.freqs_of_flat(flat);
        int splits = 0;
        for (int d = 0; d < grid.dim; ++d) splits += k[d] == nyquist;
        cplx acc(0.0, 0.0);
        const int combos = 1 << splits;
        for (int mask = 0; mask < combos; ++mask) {
            int bit = 0;
            for (int d = 0; d < grid.dim; ++d) {
                mirrored[d] = k[d];
                if (k[d] == nyquist && ((mask >> bit++) & 1)) mirrored[d] = -nyquist;
            }
            std::size_t fflat = 0;
            for (int d = 0; d < grid.dim; ++d)
                fflat = fflat * fine.size +
                        static_cast<std::size_t>(fine.index_of_freq(mirrored[d]));
            acc += fc[fflat];
        }
        result[flat] = acc;
    }
    return result;
}

double relative_l2_error(const std::vector<cplx>& got, const std::vector<cplx>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : std::sqrt(num);
    return std::sqrt(num / den);
}

}  // namespace sobwave
