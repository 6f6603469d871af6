#include "sobwave/product.hpp"

#include <cmath>

namespace sobwave {

ProductResult multiply(const SpectralDistribution& u, const SpectralDistribution& v,
                       const ConicRegionSet& l1, const ConicRegionSet& l2,
                       const IndexHypotheses& h, MultiplyMode mode) {
    require_same_grid(u.grid(), v.grid());
    if (h.m != u.grid().dim)
        throw_error(ErrorCode::DimMismatch, "hypothesis dimension differs from the grid");

    ProductCertificate cert;
    cert.hypotheses = h;
    cert.mode = mode;
    if (mode == MultiplyMode::General) {
        const ProductIndexBudget budget = product_indices(h);
        cert.r = budget.r;
        cert.s_max = budget.s_max;
        cert.r_max = budget.r_max;
        cert.strictness_notes = budget.strictness_notes;
        cert.index_gate = true;
        if (!transversal(l1, l2))
            throw GateError(ErrorCode::TransversalityViolated,
                            "exists (x,xi) in L1 with (x,-xi) in L2",
                            "product gate: the carriers contain an antipodal pair over a "
                            "common point");
        cert.geometry_gate = true;
    } else {
        const DisjointIndexBudget budget = disjoint_support_indices(h);
        cert.r = tensor_indices(h).r_max;
        cert.s_max = budget.s_max;
        cert.r_max = budget.r_max;
        cert.strictness_notes = budget.strictness_notes;
        cert.index_gate = true;
        if (l1.spatial_projection().intersects(l2.spatial_projection()))
            throw GateError(ErrorCode::TransversalityViolated, "F1 and F2 not disjoint",
                            "disjoint-support gate: the singular regions intersect");
        cert.geometry_gate = true;
    }

    const SpatialRegion supp1 =
        u.support_hint() ? *u.support_hint() : SpatialRegion::whole(u.grid().dim);
    const SpatialRegion supp2 =
        v.support_hint() ? *v.support_hint() : SpatialRegion::whole(v.grid().dim);
    cert.l_out = diagonal_pullback(product_conic_set(l1, l2, supp1, supp2));

    std::vector<cplx> coeffs = dealiased_product(u.grid(), u.coeffs(), v.coeffs());
    std::optional<SpatialRegion> hint;
    if (u.support_hint() && v.support_hint()) hint = u.support_hint()->intersect(*v.support_hint());
    SpectralDistribution product(u.grid(), std::move(coeffs), hint,
                                 u.provenance() + "*" + v.provenance());
    return ProductResult{std::move(product), std::move(cert)};
}

double consistency_check(const SpectralDistribution& u, const SpectralDistribution& v) {
    require_same_grid(u.grid(), v.grid());
    const GridSpec& grid = u.grid();
    const std::size_t total = grid.total();
    if (total * total > (std::size_t(1) << 28))
        throw_error(ErrorCode::DimensionOverflow,
                    "direct convolution oracle too large for this grid");

    // Route (a): padded real-space pointwise multiplication.
    const std::vector<cplx> via_padding = dealiased_product(grid, u.coeffs(), v.coeffs());

    // Route (b): direct truncated convolution sum over the lattice, with the
    // same symmetric treatment of the -N/2 mode: each Nyquist coefficient is
    // split across +-N/2 and output at +N/2 folds back onto -N/2.
    const int dim = grid.dim;
    const int n = grid.size;
    struct Entry {
        std::array<int, 4> k;
        cplx c;
    };
    auto expand = [&](const std::vector<cplx>& coeffs) {
        std::vector<Entry> entries;
        entries.reserve(coeffs.size());
        const int nyquist = grid.min_freq();
        std::array<int, 4> mirrored{};
        for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
            if (coeffs[flat] == cplx(0.0, 0.0)) continue;
            auto k = grid.freqs_of_flat(flat);
            int splits = 0;
            for (int d = 0; d < dim; ++d) splits += k[d] == nyquist;
            const double weight = std::pow(0.5, splits);
            const int combos = 1 << splits;
            for (int mask = 0; mask < combos; ++mask) {
                int bit = 0;
                for (int d = 0; d < dim; ++d) {
                    mirrored[d] = k[d];
                    if (k[d] == nyquist && ((mask >> bit++) & 1)) mirrored[d] = -nyquist;
                }
                entries.push_back({mirrored, weight * coeffs[flat]});
            }
        }
        return entries;
    };
    const std::vector<Entry> ea = expand(u.coeffs());
    const std::vector<Entry> eb = expand(v.coeffs());
    std::vector<cplx> via_convolution(total, cplx(0.0, 0.0));
    for (const Entry& a : ea)
        for (const Entry& b : eb) {
            std::size_t out = 0;
            bool in_band = true;
            for (int d = 0; d < dim; ++d) {
                int k = a.k[d] + b.k[d];
                if (k == -grid.min_freq()) k = grid.min_freq();  // fold +N/2
                if (k < grid.min_freq() || k > grid.max_freq()) {
                    in_band = false;
                    break;
                }
                out = out * n + static_cast<std::size_t>(grid.index_of_freq(k));
            }
            if (in_band) via_convolution[out] += a.c * b.c;
        }

    double sup = 0.0;
    for (const cplx& c : via_convolution) sup = std::max(sup, std::abs(c));
    if (sup == 0.0) {
        double worst = 0.0;
        for (const cplx& c : via_padding) worst = std::max(worst, std::abs(c));
        return worst;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < total; ++i)
        worst = std::max(worst, std::abs(via_padding[i] - via_convolution[i]));
    return worst / sup;
}

BoundRatio sobolev_bound_ratio(const SpectralDistribution& u, const SpectralDistribution& v,
                               const WindowFunction& phi, const WindowFunction& phi1,
                               double s_star, double r_prime, double r_second) {
    require_same_grid(u.grid(), v.grid());
    const int m = u.grid().dim;
    if (r_prime + r_second < 0.0)
        throw GateError(ErrorCode::IndexInadmissible, "r' + r'' < 0",
                        "multiplication bound requires r' + r'' >= 0");
    if (!(s_star <= std::min(r_prime, r_second)))
        throw GateError(ErrorCode::IndexInadmissible, "s_* > min{r', r''}",
                        "multiplication bound requires s_* <= min{r', r''}");
    const double half_m = 0.5 * m;
    const double cap = r_prime + r_second - half_m;
    const bool strict = (r_prime == half_m || r_second == half_m || -s_star == half_m);
    if (strict ? !(s_star < cap) : !(s_star <= cap))
        throw GateError(ErrorCode::IndexInadmissible, "s_* > r' + r'' - m/2",
                        "multiplication bound requires s_* <= r' + r'' - m/2, strict at m/2 "
                        "coincidences");
    if (!phi1.covers(phi))
        throw_error(ErrorCode::UnsupportedSpec,
                    "phi1 must equal 1 on a neighborhood of supp(phi)");

    SpectralDistribution uv(u.grid(), dealiased_product(u.grid(), u.coeffs(), v.coeffs()),
                            std::nullopt, "product");
    BoundRatio out;
    out.lhs = q_seminorm(uv, phi, s_star);
    out.rhs = q_seminorm(u, phi, r_prime) * q_seminorm(v, phi1, r_second);
    out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

}  // namespace sobwave
