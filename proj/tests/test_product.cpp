#include <doctest.h>

#include <cmath>

#include "sobwave/product.hpp"
#include "sobwave/wavefront.hpp"

using namespace sobwave;

namespace {

const ConicRegionSet kEmpty1 = ConicRegionSet::empty_set(1);

WindowFunction plateau_at(const GridSpec& g, double lo, double hi, double ramp) {
    Box b;
    b.dim = 1;
    b.lo[0] = lo;
    b.hi[0] = hi;
    return WindowFunction::plateau(g, b, ramp);
}

}  // namespace

TEST_CASE("smooth times smooth is the pointwise product") {
    GridSpec g{1, 1024};
    SpectralDistribution u = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss_narrow"), g);
    const ProductResult res = multiply(u, v, kEmpty1, kEmpty1, {4, 4, 8, 8, 1});
    CHECK(res.certificate.s_max == doctest::Approx(4.0));
    CHECK(res.certificate.r_max == doctest::Approx(7.5));

    std::vector<cplx> prod = u.samples();
    const std::vector<cplx> sv = v.samples();
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= sv[i];
    const std::vector<cplx> want = fft_forward(g, prod);
    CHECK(relative_l2_error(res.product.coeffs(), want) < 1e-10);
}

TEST_CASE("multiply commutes up to swapped certificates") {
    GridSpec g{1, 1024};
    const CatalogEntry& eu = catalog_entry("one_sided_a75");
    const CatalogEntry& ev = catalog_entry("gauss");
    SpectralDistribution u = synthesize_entry(eu, g);
    SpectralDistribution v = synthesize_entry(ev, g);
    const ProductResult uv = multiply(u, v, eu.wavefront, kEmpty1, {0.2, 4, 6, 6, 1});
    const ProductResult vu = multiply(v, u, kEmpty1, eu.wavefront, {4, 0.2, 6, 6, 1});
    double worst = 0.0;
    for (std::size_t i = 0; i < uv.product.coeffs().size(); ++i)
        worst = std::max(worst, std::abs(uv.product.coeffs()[i] - vu.product.coeffs()[i]));
    CHECK(worst < 1e-12);
    CHECK(uv.certificate.s_max == vu.certificate.s_max);
    CHECK(uv.certificate.r_max == vu.certificate.r_max);
}

TEST_CASE("multiply is bilinear across gated calls") {
    GridSpec g{1, 512};
    const CatalogEntry& eu = catalog_entry("one_sided_a75");
    SpectralDistribution u = synthesize_entry(eu, g);
    SpectralDistribution u2 = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss_narrow"), g);
    const IndexHypotheses h{0.2, 4, 6, 6, 1};
    const ConicRegionSet l1 = eu.wavefront;
    const SpectralDistribution combo = linear_combine(2.0, u, -0.5, u2);
    const ProductResult lhs = multiply(combo, v, l1, kEmpty1, h);
    const ProductResult t1 = multiply(u, v, l1, kEmpty1, h);
    const ProductResult t2 = multiply(u2, v, l1, kEmpty1, h);
    std::vector<cplx> want(t1.product.coeffs().size());
    for (std::size_t i = 0; i < want.size(); ++i)
        want[i] = 2.0 * t1.product.coeffs()[i] - 0.5 * t2.product.coeffs()[i];
    CHECK(relative_l2_error(lhs.product.coeffs(), want) < 1e-12);
}

TEST_CASE("antipodal carriers at a common point are rejected") {
    GridSpec g{1, 512};
    const CatalogEntry& de = catalog_entry("delta");
    const CatalogEntry& he = catalog_entry("heaviside");
    SpectralDistribution delta = synthesize_entry(de, g);
    SpectralDistribution heav = synthesize_entry(he, g);
    CHECK_THROWS_AS(
        (void)multiply(delta, heav, de.wavefront, he.wavefront, {-0.4, 0.4, 10, 10, 1}),
        GateError);
}

TEST_CASE("disjoint-support mode checks region disjointness instead") {
    GridSpec g{1, 512};
    const CatalogEntry& e1 = catalog_entry("heaviside_up_035");
    const CatalogEntry& e2 = catalog_entry("heaviside_down_065");
    SpectralDistribution u = synthesize_entry(e1, g);
    SpectralDistribution v = synthesize_entry(e2, g);
    const IndexHypotheses h{0.45, 0.45, 0.45, 0.45, 1};
    const ProductResult res =
        multiply(u, v, e1.wavefront, e2.wavefront, h, MultiplyMode::DisjointSupport);
    CHECK(res.certificate.r_max == doctest::Approx(0.4));
    // same-cell carriers are rejected in this mode
    const CatalogEntry& de = catalog_entry("delta");
    SpectralDistribution d = synthesize_entry(de, g);
    CHECK_THROWS_AS((void)multiply(d, d, de.wavefront, de.wavefront, {0.45, 0.45, 0.45, 0.45, 1},
                                   MultiplyMode::DisjointSupport),
                    GateError);
}

TEST_CASE("certified orders are honest against the measured product") {
    GridSpec g{1, 4096};
    const CatalogEntry& e = catalog_entry("one_sided_a75");
    SpectralDistribution u = synthesize_entry(e, g);
    const ProductResult res = multiply(u, u, e.wavefront, e.wavefront, {0.2, 0.2, 6, 6, 1});
    WavefrontParams top;
    top.fit_j_min = default_fit_j_max(g) - 2;
    top.fit_j_max = default_fit_j_max(g) + 1;
    const OrderFit global = estimate_global_order(res.product, top);
    CHECK(global.order >= res.certificate.s_max - 0.15);
    // outside the pullback carrier the product is microlocally quiet
    const OrderFit neg = estimate_order_directional(res.product, 4, 1, top);
    CHECK((neg.smooth || neg.order >= res.certificate.r_max - 0.15));
}

TEST_CASE("the two product routes agree") {
    GridSpec g{1, 1024};
    SpectralDistribution a = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution b = synthesize_entry(catalog_entry("gauss_narrow"), g);
    CHECK(consistency_check(a, b) < 1e-12);
    SpectralDistribution osp = synthesize_entry(catalog_entry("one_sided_a75"), g);
    CHECK(consistency_check(osp, osp) < 1e-10);
    SpectralDistribution delta = synthesize_entry(catalog_entry("delta"), g);
    CHECK(consistency_check(delta, a) < 1e-10);
}

TEST_CASE("multiplication bound gates and degenerate input") {
    GridSpec g{1, 512};
    SpectralDistribution u = synthesize_entry(catalog_entry("gauss"), g);
    SpectralDistribution v = synthesize_entry(catalog_entry("gauss_narrow"), g);
    const WindowFunction phi = plateau_at(g, 0.30, 0.72, 0.04);
    const WindowFunction phi1 = plateau_at(g, 0.26, 0.76, 0.015);

    CHECK_THROWS_AS((void)sobolev_bound_ratio(u, v, phi, phi1, 0.0, -1.0, 0.5), GateError);
    CHECK_THROWS_AS((void)sobolev_bound_ratio(u, v, phi, phi1, 2.0, 1.0, 1.5), GateError);
    // strictness: s_* = r' + r'' - 1/2 with r' = 1/2 must be strict
    CHECK_THROWS_AS((void)sobolev_bound_ratio(u, v, phi, phi1, 0.5, 0.5, 0.5), GateError);
    // phi1 must cover supp phi
    CHECK_THROWS_AS((void)sobolev_bound_ratio(u, v, phi1, phi, 0.5, 1.0, 1.0), SobwaveError);

    const BoundRatio ratio = sobolev_bound_ratio(u, v, phi, phi1, 0.5, 1.0, 1.0);
    CHECK(std::isfinite(ratio.ratio));
    CHECK(ratio.lhs > 0.0);

    const BoundRatio zero =
        sobolev_bound_ratio(SpectralDistribution::zero(g), v, phi, phi1, 0.5, 1.0, 1.0);
    CHECK(zero.lhs == 0.0);
    CHECK(zero.ratio == 0.0);
}
