#include "sobwave/seminorm.hpp"

#include <cmath>

namespace sobwave {
namespace {

// Flattened (norm_sq, |coeff|^2, direction bin) view of a coefficient array;
// bin is -1 for the zero frequency.
struct LatticeView {
    std::vector<std::int64_t> norm_sq;
    std::vector<double> power;
    std::vector<int> bin;
};

LatticeView lattice_view(const GridSpec& grid, const std::vector<cplx>& coeffs, int nbins) {
    LatticeView view;
    const std::size_t total = coeffs.size();
    view.norm_sq.resize(total);
    view.power.resize(total);
    view.bin.resize(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        auto k = grid.freqs_of_flat(flat);
        std::int64_t nsq = 0;
        for (int d = 0; d < grid.dim; ++d) nsq += std::int64_t(k[d]) * k[d];
        view.norm_sq[flat] = nsq;
        view.power[flat] = std::norm(coeffs[flat]);
        if (nsq == 0)
            view.bin[flat] = -1;
        else
            view.bin[flat] = grid.dim == 1 ? direction_bin_1d(k[0])
                                           : direction_bin_2d(k[0], k[1], nbins);
    }
    return view;
}

}  // namespace

double AnnulusProfile::total() const {
    double t = 0.0;
    for (double e : energies) t += e;
    return t;
}

int default_fit_j_min(const GridSpec&) { return 3; }

int default_fit_j_max(const GridSpec& grid) {
    return static_cast<int>(std::lround(std::log2(grid.size / 2))) - 2;
}

double q_weighted_norm(const GridSpec& grid, const std::vector<cplx>& coeffs, double s) {
    require_weight_order(s);
    double acc = 0.0;
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        const double p = std::norm(coeffs[flat]);
        if (p == 0.0) continue;
        auto k = grid.freqs_of_flat(flat);
        std::int64_t nsq = 0;
        for (int d = 0; d < grid.dim; ++d) nsq += std::int64_t(k[d]) * k[d];
        acc += bracket_weight(nsq, 2.0 * s) * p;
    }
    return std::sqrt(acc);
}

double p_weighted_norm(const GridSpec& grid, const std::vector<cplx>& coeffs,
                       const DirectionSet& v, double r) {
    require_weight_order(r);
    if (v.dim() != grid.dim)
        throw_error(ErrorCode::DimMismatch, "cone dim does not match grid dim");
    if (v.empty()) return 0.0;
    double acc = 0.0;
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        const double p = std::norm(coeffs[flat]);
        if (p == 0.0) continue;
        auto k = grid.freqs_of_flat(flat);
        std::int64_t nsq = 0;
        bool directionless = false;
        for (int d = 0; d < grid.dim; ++d) {
            nsq += std::int64_t(k[d]) * k[d];
            directionless = directionless || k[d] == grid.min_freq();
        }
        // cones live away from the origin, and the unpaired -N/2 modes alias
        // +-N/2 so they carry no direction either
        if (nsq == 0 || directionless) continue;
        const int bin = grid.dim == 1 ? direction_bin_1d(k[0])
                                      : direction_bin_2d(k[0], k[1], v.nbins());
        if (!v.test(bin)) continue;
        acc += bracket_weight(nsq, 2.0 * r) * p;
    }
    return std::sqrt(acc);
}

double q_seminorm(const SpectralDistribution& u, const WindowFunction& psi, double s) {
    require_same_grid(u.grid(), psi.grid());
    return q_weighted_norm(u.grid(), window_multiply(u, psi).coeffs(), s);
}

double p_seminorm(const SpectralDistribution& u, const WindowFunction& phi,
                  const DirectionSet& v, double r) {
    require_same_grid(u.grid(), phi.grid());
    return p_weighted_norm(u.grid(), window_multiply(u, phi).coeffs(), v, r);
}

AnnulusProfile annulus_profile_of_coeffs(const GridSpec& grid, const std::vector<cplx>& coeffs,
                                         const std::optional<DirectionSet>& cone) {
    AnnulusProfile profile;
    profile.j_min = 0;
    profile.j_max = shell_of_norm_sq(std::int64_t(grid.size / 2) * (grid.size / 2) * grid.dim);
    profile.energies.assign(static_cast<std::size_t>(profile.j_max - profile.j_min + 1), 0.0);
    const int nbins = cone ? cone->nbins() : DirectionSet::default_bins(grid.dim);
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        const double p = std::norm(coeffs[flat]);
        if (p == 0.0) continue;
        auto k = grid.freqs_of_flat(flat);
        std::int64_t nsq = 0;
        bool directionless = false;
        for (int d = 0; d < grid.dim; ++d) {
            nsq += std::int64_t(k[d]) * k[d];
            directionless = directionless || k[d] == grid.min_freq();
        }
        if (nsq == 0) continue;
        if (cone) {
            if (directionless) continue;  // unpaired modes have no direction
            const int bin = grid.dim == 1 ? direction_bin_1d(k[0])
                                          : direction_bin_2d(k[0], k[1], nbins);
            if (!cone->test(bin)) continue;
        }
        profile.energies[static_cast<std::size_t>(shell_of_norm_sq(nsq))] += p;
    }
    return profile;
}

AnnulusProfile annulus_profile(const SpectralDistribution& u, const WindowFunction& phi,
                               const std::optional<DirectionSet>& cone) {
    require_same_grid(u.grid(), phi.grid());
    return annulus_profile_of_coeffs(u.grid(), window_multiply(u, phi).coeffs(), cone);
}

double tensor_q_weighted_norm(const GridSpec& grid_a, const std::vector<cplx>& a,
                              const GridSpec& grid_b, const std::vector<cplx>& b, double s) {
    require_weight_order(s);
    const LatticeView va = lattice_view(grid_a, a, 2);
    const LatticeView vb = lattice_view(grid_b, b, 2);
    double acc = 0.0;
    for (std::size_t i = 0; i < va.power.size(); ++i) {
        const double pa = va.power[i];
        if (pa == 0.0) continue;
        const std::int64_t na = va.norm_sq[i];
        for (std::size_t j = 0; j < vb.power.size(); ++j) {
            const double pb = vb.power[j];
            if (pb == 0.0) continue;
            acc += bracket_weight(na + vb.norm_sq[j], 2.0 * s) * pa * pb;
        }
    }
    return std::sqrt(acc);
}

TensorRatio tensor_seminorm_ratio(const SpectralDistribution& u, const SpectralDistribution& v,
                                  const WindowFunction& phi, const WindowFunction& psi, double s,
                                  double r1, double r2) {
    const double s_max = std::min(r1 + std::min(0.0, r2), r2 + std::min(0.0, r1));
    if (!(s <= s_max + 1e-12))
        throw GateError(ErrorCode::IndexInadmissible,
                        "s > min{r' + min{0,r''}, r'' + min{0,r'}}",
                        "tensor seminorm order s exceeds the admissible maximum");
    const SpectralDistribution wu = window_multiply(u, phi);
    const SpectralDistribution wv = window_multiply(v, psi);
    TensorRatio out;
    out.lhs = tensor_q_weighted_norm(wu.grid(), wu.coeffs(), wv.grid(), wv.coeffs(), s);
    out.rhs = q_weighted_norm(wu.grid(), wu.coeffs(), r1) *
              q_weighted_norm(wv.grid(), wv.coeffs(), r2);
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

}  // namespace sobwave
