#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sobwave/catalog.hpp"
#include "sobwave/wavefront.hpp"

using namespace sobwave;

namespace {

bool same_entries(const std::vector<WavefrontEntry>& a, std::vector<std::pair<int, int>> want) {
    if (a.size() != want.size()) return false;
    std::vector<std::pair<int, int>> got;
    for (const WavefrontEntry& e : a) got.emplace_back(e.cell, e.dir);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

}  // namespace

TEST_CASE("global orders of the calibrated corpus") {
    GridSpec g{1, 4096};
    struct Row {
        const char* id;
        double expect;
    };
    for (const Row& row : {Row{"delta", -0.5}, Row{"heaviside", 0.5},
                           Row{"one_sided_a75", 0.25}, Row{"power_sing_a75", -0.25},
                           Row{"plaw_p125", 0.75}}) {
        CAPTURE(row.id);
        const OrderFit fit = estimate_global_order(synthesize_entry(catalog_entry(row.id), g));
        CHECK_FALSE(fit.smooth);
        CHECK(std::abs(fit.order - row.expect) <= 0.15);
    }
    CHECK(estimate_global_order(synthesize_entry(catalog_entry("gauss"), g)).smooth);
}

TEST_CASE("directional orders at the singular cell") {
    GridSpec g{1, 4096};
    // delta: both rays carry the flat spectrum
    SpectralDistribution delta = synthesize_entry(catalog_entry("delta"), g);
    for (int dir : {0, 1})
        CHECK(std::abs(estimate_order_directional(delta, 4, dir).order + 0.5) <= 0.1);
    // heaviside: both rays at +1/2
    SpectralDistribution heav = synthesize_entry(catalog_entry("heaviside"), g);
    for (int dir : {0, 1})
        CHECK(std::abs(estimate_order_directional(heav, 4, dir).order - 0.5) <= 0.1);
    // one-sided power: silent on the negative ray
    SpectralDistribution osp = synthesize_entry(catalog_entry("one_sided_a75"), g);
    const OrderFit neg = estimate_order_directional(osp, 4, 1);
    CHECK((neg.smooth || neg.order >= 4.0));
}

TEST_CASE("estimated wavefront of the calibrated members") {
    GridSpec g{1, 4096};
    // smooth data: empty for any r <= 4
    SpectralDistribution gauss = synthesize_entry(catalog_entry("gauss"), g);
    for (double r : {-1.0, 0.0, 2.0, 4.0}) CHECK(estimate_wavefront(gauss, r).empty());

    SpectralDistribution delta = synthesize_entry(catalog_entry("delta"), g);
    WavefrontSet wf0 = estimate_wavefront(delta, 0.0);
    CHECK(same_entries(wf0.entries, {{4, 0}, {4, 1}}));
    // below the fitted order nothing qualifies
    CHECK(estimate_wavefront(delta, -1.0).empty());

    SpectralDistribution osp = synthesize_entry(catalog_entry("one_sided_a75"), g);
    WavefrontSet wfp = estimate_wavefront(osp, 1.0);
    CHECK(same_entries(wfp.entries, {{4, 0}}));
}

TEST_CASE("wavefront threshold is monotone in r") {
    GridSpec g{1, 1024};
    SpectralDistribution u = synthesize_entry(catalog_entry("power_sing_a40"), g);
    const OrderField field = estimate_order_field(u);
    for (double r1 = -1.0; r1 < 2.0; r1 += 0.5) {
        const WavefrontSet a = estimate_wavefront(field, r1);
        const WavefrontSet b = estimate_wavefront(field, r1 + 0.5);
        for (const WavefrontEntry& e : a.entries) {
            const bool found = std::any_of(b.entries.begin(), b.entries.end(),
                                           [&](const WavefrontEntry& f) {
                                               return f.cell == e.cell && f.dir == e.dir;
                                           });
            CHECK(found);
        }
    }
}

TEST_CASE("smooth multipliers do not enlarge the wavefront") {
    GridSpec g{1, 4096};
    SpectralDistribution u = synthesize_entry(catalog_entry("heaviside"), g);
    Box b;
    b.dim = 1;
    b.lo[0] = 0.40;
    b.hi[0] = 0.75;
    SpectralDistribution wu = window_multiply(u, WindowFunction::bump(g, b));
    const WavefrontSet before = estimate_wavefront(u, 1.0);
    const WavefrontSet after = estimate_wavefront(wu, 1.0);
    for (const WavefrontEntry& e : after.entries) {
        const bool covered =
            std::any_of(before.entries.begin(), before.entries.end(),
                        [&](const WavefrontEntry& f) {
                            return f.cell == e.cell && f.dir == e.dir;
                        }) ||
            std::find(after.undecided_cells.begin(), after.undecided_cells.end(), e.cell) !=
                after.undecided_cells.end();
        CHECK(covered);
    }
}

TEST_CASE("translation by whole cells shifts the wavefront by the same cells") {
    GridSpec g{1, 4096};
    DistributionSpec spec = catalog_entry("delta").spec;
    SpectralDistribution u = synthesize(spec, g);
    spec.center[0] += 0.125;  // one estimator cell
    SpectralDistribution v = synthesize(spec, g);
    const WavefrontSet wu = estimate_wavefront(u, 0.0);
    const WavefrontSet wv = estimate_wavefront(v, 0.0);
    REQUIRE(wu.entries.size() == wv.entries.size());
    std::vector<std::pair<int, int>> shifted;
    for (const WavefrontEntry& e : wu.entries) shifted.emplace_back(e.cell + 1, e.dir);
    CHECK(same_entries(wv.entries, shifted));
}

TEST_CASE("containment verdicts carry witnesses") {
    GridSpec g{1, 4096};
    SpectralDistribution delta = synthesize_entry(catalog_entry("delta"), g);
    const WavefrontSet wf = estimate_wavefront(delta, 0.0);

    // empty wavefront is contained anywhere
    const WavefrontSet empty_wf = estimate_wavefront(delta, -2.0);
    CHECK(wf_contained(empty_wf, ConicRegionSet::empty_set(1)).contained);

    // the catalog carrier contains the estimate
    CHECK(wf_contained(wf, catalog_entry("delta").wavefront).contained);

    // a carrier at the wrong location yields witnesses
    ConicRegionSet wrong(1);
    wrong.add(SpatialRegion::interval(0.25, 0.375), DirectionSet::full_sphere(1));
    const ContainmentReport report = wf_contained(wf, wrong);
    CHECK_FALSE(report.contained);
    CHECK(report.violations.size() == wf.entries.size());
}

TEST_CASE("singular support projections") {
    GridSpec g{1, 4096};
    CHECK(sing_supp(synthesize_entry(catalog_entry("gauss"), g), 2.0).empty());

    const SpatialRegion cell = singular_cell(0.5625);
    CHECK(sing_supp(synthesize_entry(catalog_entry("delta"), g), 0.0) == cell);

    SpectralDistribution heav = synthesize_entry(catalog_entry("heaviside"), g);
    CHECK(sing_supp(heav, 0.0).empty());
    CHECK(sing_supp(heav, 1.0) == cell);
}

TEST_CASE("degenerate fits are reported per cell") {
    // A three-shell grid with the top shells under the floor leaves fewer
    // than three usable shells once one mid shell is emptied.
    AnnulusProfile prof;
    prof.j_min = 0;
    prof.j_max = 5;
    prof.energies = {1.0, 1.0, 1.0, 0.5, 0.0, 0.25};
    const OrderFit fit = fit_order(prof, 3, 5, 1e-24);
    CHECK(fit.degenerate);
    CHECK_FALSE(fit.smooth);

    AnnulusProfile dead = prof;
    dead.energies = {1.0, 1.0, 1.0, 0.5, 0.25, 0.0};
    CHECK(fit_order(dead, 3, 5, 1e-24).smooth);
}

TEST_CASE("two-dimensional directional estimates at a point mass") {
    GridSpec g{2, 256};
    SpectralDistribution delta2 = synthesize_entry(catalog_entry("delta2"), g);
    // x0 = (0.5625, 0.5625) sits in cell (4,4) of the 8x8 grid
    const int cell = 4 * 8 + 4;
    for (int dir : {0, 6, 12, 18}) {
        const OrderFit fit = estimate_order_directional(delta2, cell, dir);
        CAPTURE(dir);
        CHECK_FALSE(fit.smooth);
        CHECK(std::abs(fit.order + 1.0) <= 0.2);
    }
    // a cell away from the mass is quiet
    const OrderFit far_fit = estimate_order_directional(delta2, 1 * 8 + 1, 0);
    CHECK(far_fit.smooth);
}
