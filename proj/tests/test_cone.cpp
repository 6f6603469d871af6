#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sobwave/conic.hpp"
#include "sobwave/cutoff.hpp"

using namespace sobwave;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

DirectionSet ray(int bin) {
    DirectionSet s = DirectionSet::empty_set(1);
    s.set(bin);
    return s;
}

ConicRegionSet at_point(double x, const DirectionSet& cone) {
    ConicRegionSet l(cone.dim(), cone.nbins());
    if (cone.dim() == 1)
        l.add(SpatialRegion::interval(x - 0.01, x + 0.01), cone);
    else
        l.add(SpatialRegion::box2(x - 0.01, x + 0.01, 0.45, 0.55), cone);
    return l;
}

SpatialRegion probe_region(int dim, double lo, double hi) {
    return dim == 1 ? SpatialRegion::interval(lo, hi) : SpatialRegion::box2(lo, hi, 0.4, 0.6);
}

}  // namespace

TEST_CASE("cone_from_caps on the two-point sphere") {
    DirectionSet pos = cone_from_caps(1, {+1.0}, 0.5);
    CHECK(pos.test(0));
    CHECK_FALSE(pos.test(1));
    DirectionSet all = cone_from_caps(1, {+1.0}, kPi);
    CHECK(all.full());
}

TEST_CASE("cone_from_caps covers the circle at half-angle pi") {
    CHECK(cone_from_caps(2, {0.0}, kPi).full());
}

TEST_CASE("cap membership count matches direct enumeration") {
    const double half = kPi / 8.0;
    DirectionSet cap = cone_from_caps(2, {0.0}, half);
    int oracle = 0;
    for (int b = 0; b < 360; ++b) {
        double d = std::abs(b * kDeg);
        d = std::min(d, 2.0 * kPi - d);
        if (d <= half + 1e-12) ++oracle;
    }
    CHECK(cap.count() == oracle);
    CHECK(oracle == 45);  // bins -22..22 at one-degree resolution
}

TEST_CASE("transversality gate") {
    CHECK(transversal(at_point(0.5, ray(0)), at_point(0.5, ray(0))));
    CHECK_FALSE(transversal(at_point(0.5, DirectionSet::full_sphere(1)),
                            at_point(0.5, DirectionSet::full_sphere(1))));
    // Disjoint spatial regions never interact.
    CHECK(transversal(at_point(0.3, DirectionSet::full_sphere(1)),
                      at_point(0.7, DirectionSet::full_sphere(1))));
    // cap(0, 30deg) meets the reflection of cap(170deg, 15deg).
    ConicRegionSet l1 = at_point(0.5, cone_from_caps(2, {0.0}, 30.0 * kDeg));
    ConicRegionSet l2 = at_point(0.5, cone_from_caps(2, {170.0 * kDeg}, 15.0 * kDeg));
    CHECK_FALSE(transversal(l1, l2));
}

TEST_CASE("transversality is symmetric (randomized)") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_set = [&]() {
            ConicRegionSet l(2, 360);
            const int parts = 1 + int(unif(rng) * 2);
            for (int p = 0; p < parts; ++p) {
                const double lo = 0.25 + 0.4 * unif(rng);
                l.add(SpatialRegion::box2(lo, lo + 0.05 + 0.2 * unif(rng), 0.3, 0.7),
                      cone_from_caps(2, {2.0 * kPi * unif(rng)}, (5.0 + 80.0 * unif(rng)) * kDeg));
            }
            return l;
        };
        ConicRegionSet l1 = random_set();
        ConicRegionSet l2 = random_set();
        CHECK(transversal(l1, l2) == transversal(l2, l1));
    }
}

TEST_CASE("product carrier membership branches") {
    ConicRegionSet l1 = at_point(0.5, ray(0));
    ConicRegionSet l2 = at_point(0.5, ray(0));
    ProductConicDescription l = product_conic_set(l1, l2);
    // eta = 0 branch keeps L1 points.
    CHECK(l.contains({0.5, 0}, {0.3, 0}, {1.0, 0}, {0.0, 0}));
    // mixed nonzero directions need both factors.
    CHECK_FALSE(l.contains({0.5, 0}, {0.3, 0}, {1.0, 0}, {1.0, 0}));
    CHECK(l.contains({0.5, 0}, {0.5, 0}, {1.0, 0}, {1.0, 0}));
    CHECK_FALSE(l.contains({0.5, 0}, {0.5, 0}, {1.0, 0}, {-1.0, 0}));
    // empty L1 leaves only the xi = 0 branch.
    ProductConicDescription le = product_conic_set(ConicRegionSet::empty_set(1), l2);
    CHECK(le.contains({0.9, 0}, {0.5, 0}, {0.0, 0}, {1.0, 0}));
    CHECK_FALSE(le.contains({0.9, 0}, {0.5, 0}, {1.0, 0}, {0.0, 0}));
    CHECK_FALSE(le.contains({0.9, 0}, {0.5, 0}, {1.0, 0}, {1.0, 0}));
}

TEST_CASE("diagonal pullback of aligned rays is the ray") {
    ConicRegionSet l1 = at_point(0.5, ray(0));
    ConicRegionSet out = diagonal_pullback(product_conic_set(l1, l1));
    CHECK(out.directions_over(SpatialRegion::interval(0.49, 0.51)) == ray(0));
}

TEST_CASE("diagonal pullback covers the bracketed arc (brute force over pairs)") {
    DirectionSet c1 = cone_from_caps(2, {10.0 * kDeg}, 5.0 * kDeg);
    DirectionSet c2 = cone_from_caps(2, {50.0 * kDeg}, 5.0 * kDeg);
    ConicRegionSet out = diagonal_pullback(product_conic_set(at_point(0.5, c1), at_point(0.5, c2)));
    DirectionSet dirs = out.directions_over(probe_region(2, 0.49, 0.51));

    // Oracle: normalized weighted sums over factor bins and weight ratios.
    DirectionSet oracle = DirectionSet::empty_set(2, 360);
    oracle = oracle.unite(c1).unite(c2);
    for (int b1 = 0; b1 < 360; ++b1) {
        if (!c1.test(b1)) continue;
        for (int b2 = 0; b2 < 360; ++b2) {
            if (!c2.test(b2)) continue;
            for (double t = -6.0; t <= 6.0; t += 0.05) {
                const double w = std::exp(t);
                const double x = std::cos(b1 * kDeg) + w * std::cos(b2 * kDeg);
                const double y = std::sin(b1 * kDeg) + w * std::sin(b2 * kDeg);
                oracle.set(direction_bin_2d(x, y, 360));
            }
        }
    }
    CHECK(oracle.subset_of(dirs));
    // and it brackets [5, 55] degrees
    for (int b = 5; b <= 55; ++b) CHECK(dirs.test(b));
    CHECK_FALSE(dirs.test(70));
    CHECK_FALSE(dirs.test(350));
}

TEST_CASE("diagonal pullback with one empty factor returns the other restricted to it") {
    ConicRegionSet l1 = at_point(0.5, ray(0));
    ConicRegionSet out = diagonal_pullback(product_conic_set(l1, ConicRegionSet::empty_set(1)));
    REQUIRE(out.parts().size() == 1);
    CHECK(out.directions_over(SpatialRegion::interval(0.49, 0.51)) == ray(0));
}

TEST_CASE("diagonal pullback flags antipodal factor pairs") {
    ConicRegionSet l1 = at_point(0.5, ray(0));
    ConicRegionSet l2 = at_point(0.5, ray(1));
    CHECK_THROWS_WITH_AS((void)diagonal_pullback(product_conic_set(l1, l2)),
                         doctest::Contains("antipodal"), GateError);
}

TEST_CASE("pullback is monotone in the first factor") {
    DirectionSet small = cone_from_caps(2, {20.0 * kDeg}, 8.0 * kDeg);
    DirectionSet large = cone_from_caps(2, {20.0 * kDeg}, 20.0 * kDeg);
    DirectionSet other = cone_from_caps(2, {60.0 * kDeg}, 10.0 * kDeg);
    ConicRegionSet a = diagonal_pullback(product_conic_set(at_point(0.5, small), at_point(0.5, other)));
    ConicRegionSet b = diagonal_pullback(product_conic_set(at_point(0.5, large), at_point(0.5, other)));
    const SpatialRegion probe = probe_region(2, 0.49, 0.51);
    CHECK(a.directions_over(probe).subset_of(b.directions_over(probe)));
}

TEST_CASE("cone fattening") {
    // dim 1: no intermediate directions.
    CHECK(cone_fatten(ray(0), 0.5) == ray(0));
    // dim 2: arcsin: eps = sin(5 deg) dilates by five one-degree bins.
    DirectionSet cap10 = cone_from_caps(2, {0.0}, 10.0 * kDeg);
    DirectionSet fat = cone_fatten(cap10, std::sin(5.0 * kDeg));
    DirectionSet cap15 = cone_from_caps(2, {0.0}, 15.0 * kDeg);
    CHECK(fat.count() >= cap15.count() - 2);
    CHECK(fat.count() <= cap15.count() + 2);
    CHECK(cap10.subset_of(fat.interior()));
    // nesting in eps, and the overflow guard
    DirectionSet f1 = cone_fatten(cap10, 0.1);
    DirectionSet f2 = cone_fatten(cap10, 0.3);
    CHECK(f1.subset_of(f2));
    CHECK(cap10.subset_of(f1));
    DirectionSet huge = cone_from_caps(2, {0.0}, 178.0 * kDeg);
    CHECK_THROWS_AS((void)cone_fatten(huge, 0.9), SobwaveError);
}

TEST_CASE("fattened cones still avoid the target cone when eps fits the gap") {
    // Claim-style construction: W1 x W2 sits in the first quadrant; Vtilde in
    // the third.  The largest admissible eps is read off by enumeration, and
    // the epsilon-fattened cones still miss Vtilde.
    DirectionSet w1 = ray(0);
    DirectionSet w2 = ray(0);
    DirectionSet vtilde = cone_from_caps(2, {225.0 * kDeg}, 40.0 * kDeg);
    // distance between the quadrant-arc [0,90] and Vtilde on the circle
    double min_dist = kPi;
    for (int b = 0; b < 360; ++b) {
        if (!vtilde.test(b)) continue;
        for (int q = 0; q <= 90; ++q)
            min_dist = std::min(min_dist, bin_angular_distance(b, q, 360));
    }
    const double eps = 0.9 * std::sin(min_dist / 2.0);
    DirectionSet w1f = cone_fatten(w1, eps);
    DirectionSet w2f = cone_fatten(w2, eps);
    // dim-1 fattening is the identity; the product arc and its dilation by
    // arcsin(eps) must stay clear of Vtilde.
    const int pad = int(std::lround(std::asin(eps) / (kPi / 180.0)));
    DirectionSet quadrant = cone_from_caps(2, {45.0 * kDeg}, 45.0 * kDeg);
    CHECK_FALSE(quadrant.dilated(pad).intersects(vtilde));
    CHECK(w1f == w1);
    CHECK(w2f == w2);
}

TEST_CASE("region/cone disjointness against a carrier") {
    ConicRegionSet l = at_point(0.5, cone_from_caps(2, {0.0}, 20.0 * kDeg));
    CHECK(region_cone_disjoint(probe_region(2, 0.4, 0.6), cone_from_caps(2, {0.0}, kPi),
                               ConicRegionSet::empty_set(2)));
    CHECK(region_cone_disjoint(probe_region(2, 0.7, 0.8),
                               cone_from_caps(2, {0.0}, 20.0 * kDeg), l));
    CHECK_FALSE(region_cone_disjoint(probe_region(2, 0.45, 0.55),
                                     cone_from_caps(2, {10.0 * kDeg}, 15.0 * kDeg), l));
}

TEST_CASE("homogeneous cutoff construction and partition") {
    DirectionSet core = cone_from_caps(2, {0.0}, 10.0 * kDeg);
    DirectionSet fat = cone_from_caps(2, {0.0}, 20.0 * kDeg);
    HomogeneousCutoff alpha = homogeneous_cutoff(core, fat);
    CHECK(alpha.core() == core);
    CHECK(alpha.support().subset_of(fat));
    // midpoint of the transition band takes the half value
    CHECK(alpha.value_at_bin(15) == doctest::Approx(0.5).epsilon(0.1));
    // discrete C^1 bound
    const double step = 2.0 * kPi / 360.0;
    for (int b = 0; b < 360; ++b) {
        const double dv =
            std::abs(alpha.value_at_bin((b + 1) % 360) - alpha.value_at_bin(b));
        CHECK(dv <= 2.0 * step / alpha.transition_halfwidth() + 1e-9);
    }
    // partition: alpha and 1 - alpha cover everything; their product
    // vanishes exactly on core and outside fat
    for (int b = 0; b < 360; ++b) {
        const double v = alpha.value_at_bin(b);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        if (core.test(b)) CHECK(v == 1.0);
        if (!fat.test(b)) CHECK(v == 0.0);
        if (core.test(b) || !fat.test(b)) CHECK(v * (1.0 - v) == 0.0);
    }
    // zero frequency always masks to zero
    CHECK(alpha.mask_2d(0.0, 0.0) == 0.0);
}

TEST_CASE("cutoff without transition room is rejected") {
    DirectionSet core = cone_from_caps(2, {0.0}, 20.0 * kDeg);
    CHECK_THROWS_AS((void)homogeneous_cutoff(core, core), GateError);
    // dim 1 is discrete: core == fattened is fine
    DirectionSet pos = ray(0);
    HomogeneousCutoff alpha = homogeneous_cutoff(pos, pos);
    CHECK(alpha.value_at_bin(0) == 1.0);
    CHECK(alpha.value_at_bin(1) == 0.0);
}

TEST_CASE("conic set dilation and projection") {
    ConicRegionSet l = at_point(0.5, cone_from_caps(2, {0.0}, 10.0 * kDeg));
    ConicRegionSet fat = l.dilated(0.05, 3);
    CHECK(l.directions_over(probe_region(2, 0.4, 0.6))
              .subset_of(fat.directions_over(probe_region(2, 0.4, 0.6))));
    CHECK(fat.contains({0.45, 0.5}, 0));
    CHECK_FALSE(l.contains({0.45, 0.5}, 0));
    CHECK(l.spatial_projection().contains({0.5, 0.5}));
}
