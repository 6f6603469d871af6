#include "sobwave/catalog.hpp"

#include <cmath>

namespace sobwave {
namespace {

constexpr int kCells = 8;

DirectionSet ray_pos() {
    DirectionSet s = DirectionSet::empty_set(1);
    s.set(0);
    return s;
}

ConicRegionSet wf_at(double x0, const DirectionSet& cone) {
    ConicRegionSet l(1);
    l.add(singular_cell(x0), cone);
    return l;
}

ConicRegionSet wf_cell_2d(double x0, double y0) {
    ConicRegionSet l(2);
    const double w = 1.0 / kCells;
    const double cx = std::floor(x0 * kCells) * w;
    const double cy = std::floor(y0 * kCells) * w;
    l.add(SpatialRegion::box2(cx, cx + w, cy, cy + w), DirectionSet::full_sphere(2));
    return l;
}

SpatialRegion central_support() { return SpatialRegion::interval(0.25, 0.75); }

CatalogEntry make_1d(std::string id, DistributionSpec spec, std::optional<double> order,
                     ConicRegionSet wf, SpatialRegion support) {
    return CatalogEntry{std::move(id), std::move(spec), order, std::move(wf),
                        std::move(support)};
}

std::vector<CatalogEntry> build_corpus_1d() {
    std::vector<CatalogEntry> c;

    DistributionSpec delta;
    delta.kind = DistributionKind::Delta;
    delta.center = {0.5625, 0.5};
    c.push_back(make_1d("delta", delta, -0.5, wf_at(0.5625, DirectionSet::full_sphere(1)),
                        SpatialRegion::interval(0.5525, 0.5725)));

    DistributionSpec heav;
    heav.kind = DistributionKind::Heaviside;
    heav.center = {0.5625, 0.5};
    c.push_back(make_1d("heaviside", heav, 0.5, wf_at(0.5625, DirectionSet::full_sphere(1)),
                        central_support()));

    DistributionSpec heav_up;
    heav_up.kind = DistributionKind::Heaviside;
    heav_up.center = {0.35, 0.5};
    c.push_back(make_1d("heaviside_up_035", heav_up, 0.5,
                        wf_at(0.35, DirectionSet::full_sphere(1)), central_support()));

    DistributionSpec heav_down;
    heav_down.kind = DistributionKind::Heaviside;
    heav_down.center = {0.65, 0.5};
    heav_down.orientation = -1;
    c.push_back(make_1d("heaviside_down_065", heav_down, 0.5,
                        wf_at(0.65, DirectionSet::full_sphere(1)), central_support()));

    DistributionSpec osp75;
    osp75.kind = DistributionKind::OneSidedPower;
    osp75.center = {0.5625, 0.5};
    osp75.exponent = 0.75;
    c.push_back(make_1d("one_sided_a75", osp75, 0.25, wf_at(0.5625, ray_pos()),
                        SpatialRegion::whole(1)));

    DistributionSpec osp50;
    osp50.kind = DistributionKind::OneSidedPower;
    osp50.center = {0.4375, 0.5};
    osp50.exponent = 0.5;
    c.push_back(make_1d("one_sided_a50", osp50, 0.0, wf_at(0.4375, ray_pos()),
                        SpatialRegion::whole(1)));

    DistributionSpec psing75;
    psing75.kind = DistributionKind::PowerSingularity;
    psing75.center = {0.5625, 0.5};
    psing75.exponent = 0.75;
    c.push_back(make_1d("power_sing_a75", psing75, -0.25,
                        wf_at(0.5625, DirectionSet::full_sphere(1)), central_support()));

    DistributionSpec psing40;
    psing40.kind = DistributionKind::PowerSingularity;
    psing40.center = {0.4375, 0.5};
    psing40.exponent = 0.4;
    c.push_back(make_1d("power_sing_a40", psing40, 0.1,
                        wf_at(0.4375, DirectionSet::full_sphere(1)), central_support()));

    DistributionSpec gauss;
    gauss.kind = DistributionKind::GaussianBump;
    gauss.center = {0.5, 0.5};
    gauss.width = 0.05;
    c.push_back(make_1d("gauss", gauss, std::nullopt, ConicRegionSet::empty_set(1),
                        SpatialRegion::interval(0.2, 0.8)));

    DistributionSpec gauss_narrow;
    gauss_narrow.kind = DistributionKind::GaussianBump;
    gauss_narrow.center = {0.4375, 0.5};
    gauss_narrow.width = 0.02;
    c.push_back(make_1d("gauss_narrow", gauss_narrow, std::nullopt,
                        ConicRegionSet::empty_set(1), SpatialRegion::interval(0.3, 0.6)));

    DistributionSpec chirp;
    chirp.kind = DistributionKind::PlaneChirp;
    chirp.center = {0.5, 0.5};
    chirp.rate = 30.0;
    c.push_back(make_1d("chirp", chirp, std::nullopt, ConicRegionSet::empty_set(1),
                        central_support()));

    ConicRegionSet everywhere(1);
    everywhere.add(SpatialRegion::whole(1), DirectionSet::full_sphere(1));
    c.push_back(make_1d("plaw_p175", make_random_powerlaw_spec(1.75, 11), 1.25, everywhere,
                        SpatialRegion::whole(1)));
    c.push_back(make_1d("plaw_p125", make_random_powerlaw_spec(1.25, 12), 0.75, everywhere,
                        SpatialRegion::whole(1)));
    c.push_back(make_1d("plaw_p075", make_random_powerlaw_spec(0.75, 13), 0.25, everywhere,
                        SpatialRegion::whole(1)));

    c.push_back(make_1d("smooth_rand", make_random_smooth_spec(40.0, 21), std::nullopt,
                        ConicRegionSet::empty_set(1), SpatialRegion::whole(1)));
    return c;
}

std::vector<CatalogEntry> build_corpus_2d() {
    std::vector<CatalogEntry> c;

    DistributionSpec delta2;
    delta2.kind = DistributionKind::Delta;
    delta2.center = {0.5625, 0.5625};
    c.push_back(CatalogEntry{"delta2", delta2, -1.0, wf_cell_2d(0.5625, 0.5625),
                             SpatialRegion::box2(0.55, 0.58, 0.55, 0.58)});

    DistributionSpec gauss2;
    gauss2.kind = DistributionKind::GaussianBump;
    gauss2.center = {0.5, 0.5};
    gauss2.width = 0.05;
    c.push_back(CatalogEntry{"gauss2", gauss2, std::nullopt, ConicRegionSet::empty_set(2),
                             SpatialRegion::box2(0.2, 0.8, 0.2, 0.8)});

    DistributionSpec chirp2;
    chirp2.kind = DistributionKind::PlaneChirp;
    chirp2.center = {0.5, 0.5};
    chirp2.rate = 20.0;
    chirp2.direction = {1.0, 0.0};
    c.push_back(CatalogEntry{"chirp2", chirp2, std::nullopt, ConicRegionSet::empty_set(2),
                             SpatialRegion::box2(0.25, 0.75, 0.25, 0.75)});
    return c;
}

}  // namespace

SpatialRegion singular_cell(double x0) {
    const double w = 1.0 / kCells;
    const double lo = std::floor(x0 * kCells) * w;
    return SpatialRegion::interval(lo, lo + w);
}

const std::vector<CatalogEntry>& corpus_1d() {
    static const std::vector<CatalogEntry> corpus = build_corpus_1d();
    return corpus;
}

const std::vector<CatalogEntry>& corpus_2d() {
    static const std::vector<CatalogEntry> corpus = build_corpus_2d();
    return corpus;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : corpus_1d())
        if (e.id == id) return e;
    for (const CatalogEntry& e : corpus_2d())
        if (e.id == id) return e;
    throw_error(ErrorCode::UnsupportedSpec, "unknown catalog id: " + id);
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const CatalogEntry& e : corpus_1d()) ids.push_back(e.id);
    for (const CatalogEntry& e : corpus_2d()) ids.push_back(e.id);
    return ids;
}

SpectralDistribution synthesize_entry(const CatalogEntry& entry, const GridSpec& grid) {
    SpectralDistribution u = synthesize(entry.spec, grid);
    u.set_support_hint(entry.support);
    return u;
}

}  // namespace sobwave
