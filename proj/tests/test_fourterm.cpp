#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sobwave/catalog.hpp"
#include "sobwave/fourterm.hpp"

using namespace sobwave;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Setup {
    GridSpec grid{1, 1024};
    SpectralDistribution u;
    WindowFunction phi;
    HomogeneousCutoff alpha;
    DirectionSet vtilde;

    Setup()
        : u(synthesize_entry(catalog_entry("one_sided_a75"), grid)),
          phi(WindowFunction::plateau(grid, Box{1, {0.45, 0.0}, {0.70, 0.0}}, 0.05)),
          alpha(make_alpha()),
          vtilde(cone_from_caps(2, {225.0 * kDeg}, 40.0 * kDeg, 360)) {}

    static HomogeneousCutoff make_alpha() {
        DirectionSet pos = DirectionSet::empty_set(1);
        pos.set(0);
        return homogeneous_cutoff(pos, pos);
    }
};

}  // namespace

TEST_CASE("the aligned-cone term vanishes identically") {
    Setup s;
    const FourTermReport rep = four_term_decomposition(
        s.u, s.u, s.phi, s.phi, s.alpha, s.alpha, s.vtilde, 1.0, {0.2, 0.2, 1.0, 1.0, 1});
    CHECK(rep.terms[0] == 0.0);
    CHECK(rep.case_label == 'a');
    CHECK(rep.cover_sum >= rep.lhs_total * (1.0 - 1e-10));
    CHECK(rep.fitted[3] > 0.0);
    CHECK(rep.terms[3] <= rep.bounds[3]);  // fitted constant below one here
}

TEST_CASE("every term and bound scales linearly with each factor") {
    Setup s;
    const IndexHypotheses h{0.2, 0.2, 1.0, 1.0, 1};
    const FourTermReport base =
        four_term_decomposition(s.u, s.u, s.phi, s.phi, s.alpha, s.alpha, s.vtilde, 1.0, h);
    DistributionSpec scaled_spec = catalog_entry("one_sided_a75").spec;
    scaled_spec.amplitude = 3.0;
    const SpectralDistribution su = synthesize(scaled_spec, s.grid);
    const FourTermReport scaled =
        four_term_decomposition(su, s.u, s.phi, s.phi, s.alpha, s.alpha, s.vtilde, 1.0, h);
    for (int t = 0; t < 4; ++t) {
        CHECK(scaled.terms[t] == doctest::Approx(3.0 * base.terms[t]).epsilon(1e-12));
        CHECK(scaled.bounds[t] == doctest::Approx(3.0 * base.bounds[t]).epsilon(1e-12));
    }
    CHECK(scaled.lhs_total == doctest::Approx(3.0 * base.lhs_total).epsilon(1e-12));
}

TEST_CASE("sign cases label the bound that is evaluated") {
    Setup s;
    struct Case {
        double rp, rpp, r;
        char label;
    };
    for (const Case& c : {Case{0.2, 0.2, 1.0, 'a'}, Case{-0.3, 0.2, 0.7, 'b'},
                          Case{0.2, -0.3, 0.7, 'c'}, Case{-0.3, -0.3, 0.7, 'd'}}) {
        const FourTermReport rep = four_term_decomposition(
            s.u, s.u, s.phi, s.phi, s.alpha, s.alpha, s.vtilde, c.r,
            {c.rp, c.rpp, 1.0, 1.0, 1});
        CHECK(rep.case_label == c.label);
        CHECK(rep.terms[0] == 0.0);
    }
}

TEST_CASE("a target cone that meets the cutoff supports is rejected") {
    Setup s;
    const DirectionSet bad = cone_from_caps(2, {45.0 * kDeg}, 10.0 * kDeg, 360);
    CHECK_THROWS_AS((void)four_term_decomposition(s.u, s.u, s.phi, s.phi, s.alpha, s.alpha,
                                                  bad, 1.0, {0.2, 0.2, 1.0, 1.0, 1}),
                    GateError);
}

TEST_CASE("orders beyond the tensor budget are rejected") {
    Setup s;
    CHECK_THROWS_AS((void)four_term_decomposition(s.u, s.u, s.phi, s.phi, s.alpha, s.alpha,
                                                  s.vtilde, 1.5, {0.2, 0.2, 1.0, 1.0, 1}),
                    GateError);
}
