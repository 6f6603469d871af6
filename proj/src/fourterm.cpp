#include "sobwave/fourterm.hpp"

#include <cmath>

namespace sobwave {
namespace {

// Sign pairs (sx, sy) whose open quadrant arc intersects the half-open
// angular interval of mask bin `bin`.  Lattice points on the axes carry a
// zero cutoff factor and cannot contribute to I1, so only open quadrants
// matter for the overlap check.
std::vector<std::pair<int, int>> quadrants_touching_bin(int bin, int nbins) {
    const double width = 360.0 / nbins;
    const double lo = bin * width - 0.5 * width;
    const double hi = bin * width + 0.5 * width;
    const std::array<std::pair<double, double>, 4> quadrant_arcs{
        std::pair<double, double>{0.0, 90.0},     // (+,+)
        std::pair<double, double>{90.0, 180.0},   // (-,+)
        std::pair<double, double>{180.0, 270.0},  // (-,-)
        std::pair<double, double>{270.0, 360.0},  // (+,-)
    };
    const std::array<std::pair<int, int>, 4> signs{
        std::pair<int, int>{+1, +1}, {-1, +1}, {-1, -1}, {+1, -1}};
    std::vector<std::pair<int, int>> touching;
    for (int q = 0; q < 4; ++q) {
        for (double shift : {-360.0, 0.0, 360.0}) {
            const double a = quadrant_arcs[q].first + shift;
            const double b = quadrant_arcs[q].second + shift;
            if (a < hi && lo < b) {
                touching.push_back(signs[q]);
                break;
            }
        }
    }
    return touching;
}

}  // namespace

FourTermReport four_term_decomposition(const SpectralDistribution& u,
                                       const SpectralDistribution& v,
                                       const WindowFunction& phi1, const WindowFunction& phi2,
                                       const HomogeneousCutoff& alpha,
                                       const HomogeneousCutoff& beta,
                                       const DirectionSet& vtilde, double r,
                                       const IndexHypotheses& h) {
    if (u.grid().dim != 1 || v.grid().dim != 1 || vtilde.dim() != 2 || alpha.dim() != 1 ||
        beta.dim() != 1)
        throw_error(ErrorCode::DimMismatch,
                    "four-term decomposition takes 1-d factors and a product-circle cone");
    if (u.grid().size != v.grid().size)
        throw_error(ErrorCode::GridMismatch, "factors must share N");
    require_weight_order(r);
    if (!(r <= h.r1 + std::min(0.0, h.r_second) + 1e-12 &&
          r <= h.r2 + std::min(0.0, h.r_prime) + 1e-12))
        throw GateError(ErrorCode::IndexInadmissible,
                        "r > min{r1 + min{0,r''}, r2 + min{0,r'}}",
                        "four-term order r exceeds the admissible tensor budget");

    // Mask-level I1 hygiene: no Vtilde bin may admit lattice points whose
    // sign pair lands in supp(alpha) x supp(beta).
    const DirectionSet supp_a = alpha.support();
    const DirectionSet supp_b = beta.support();
    for (int bin = 0; bin < vtilde.nbins(); ++bin) {
        if (!vtilde.test(bin)) continue;
        for (const auto& [sx, sy] : quadrants_touching_bin(bin, vtilde.nbins())) {
            if (supp_a.test(direction_bin_1d(sx)) && supp_b.test(direction_bin_1d(sy)))
                throw GateError(ErrorCode::MaskOverlap,
                                "(supp alpha x supp beta) meets Vtilde",
                                "cutoff supports overlap the target cone at mask level");
        }
    }

    const SpectralDistribution wu = window_multiply(u, phi1);
    const SpectralDistribution wv = window_multiply(v, phi2);
    const GridSpec& grid = wu.grid();
    const int n = grid.size;
    const int nbins = vtilde.nbins();

    std::vector<double> pu(n), pv(n), au(n), bv(n);
    for (int i = 0; i < n; ++i) {
        const int k = grid.freq_of_index(i);
        pu[i] = std::norm(wu.coeffs()[i]);
        pv[i] = std::norm(wv.coeffs()[i]);
        au[i] = k == 0 ? 0.0 : alpha.value_at_bin(direction_bin_1d(k));
        bv[i] = k == 0 ? 0.0 : beta.value_at_bin(direction_bin_1d(k));
    }

    double sq_terms[4] = {0.0, 0.0, 0.0, 0.0};
    double sq_total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (pu[i] == 0.0) continue;
        const int k = grid.freq_of_index(i);
        const double a = au[i];
        const double ca = 1.0 - a;
        if (k == grid.min_freq()) continue;  // unpaired mode: no direction
        for (int j = 0; j < n; ++j) {
            if (pv[j] == 0.0) continue;
            const int l = grid.freq_of_index(j);
            if (k == 0 && l == 0) continue;
            if (l == grid.min_freq()) continue;
            if (!vtilde.test(direction_bin_2d(k, l, nbins))) continue;
            const double w = bracket_weight(std::int64_t(k) * k + std::int64_t(l) * l, 2.0 * r);
            const double b = bv[j];
            const double cb = 1.0 - b;
            const double base = w * pu[i] * pv[j];
            sq_terms[0] += a * a * b * b * base;
            sq_terms[1] += a * a * cb * cb * base;
            sq_terms[2] += ca * ca * b * b * base;
            sq_terms[3] += ca * ca * cb * cb * base;
            sq_total += base;
        }
    }

    FourTermReport report;
    report.r = r;
    for (int t = 0; t < 4; ++t) report.terms[t] = std::sqrt(sq_terms[t]);
    report.lhs_total = std::sqrt(sq_total);
    report.cover_sum = report.terms[0] + report.terms[1] + report.terms[2] + report.terms[3];

    const DirectionSet c_alpha = alpha.complement_support();
    const DirectionSet c_beta = beta.complement_support();
    const double l2_u = std::sqrt([&] {
        double s = 0.0;
        for (double p : pu) s += p;
        return s;
    }());
    const double l2_v = std::sqrt([&] {
        double s = 0.0;
        for (double p : pv) s += p;
        return s;
    }());
    const double q_u = q_weighted_norm(grid, wu.coeffs(), h.r_prime);
    const double q_v = q_weighted_norm(grid, wv.coeffs(), h.r_second);
    const double p_u = p_weighted_norm(grid, wu.coeffs(), c_alpha, h.r1);
    const double p_v = p_weighted_norm(grid, wv.coeffs(), c_beta, h.r2);

    const bool neg1 = h.r_prime < 0.0;
    const bool neg2 = h.r_second < 0.0;
    report.case_label = neg1 ? (neg2 ? 'd' : 'b') : (neg2 ? 'c' : 'a');

    report.bounds[0] = 0.0;
    report.bounds[1] = (neg1 ? q_u : l2_u) * p_v;
    report.bounds[2] = p_u * (neg2 ? q_v : l2_v);
    report.bounds[3] = (neg1 ? q_u : l2_u) * p_v + p_u * (neg2 ? q_v : l2_v);
    for (int t = 0; t < 4; ++t)
        report.fitted[t] = report.bounds[t] > 0.0 ? report.terms[t] / report.bounds[t] : 0.0;
    return report;
}

}  // namespace sobwave
