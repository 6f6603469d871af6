#include "sobwave/conic.hpp"

#include <cmath>

namespace sobwave {

bool ConicRegionSet::empty() const {
    for (const auto& [region, cone] : parts_)
        if (!region.empty() && !cone.empty()) return false;
    return true;
}

void ConicRegionSet::add(SpatialRegion region, DirectionSet cone) {
    if (region.dim() != dim_ || cone.dim() != dim_ || cone.nbins() != nbins_)
        throw_error(ErrorCode::DimMismatch, "conic part does not match set discretization");
    if (region.empty() || cone.empty()) return;
    parts_.emplace_back(std::move(region), std::move(cone));
}

bool ConicRegionSet::contains(const std::array<double, 2>& x, int bin) const {
    for (const auto& [region, cone] : parts_)
        if (cone.test(bin) && region.contains(x)) return true;
    return false;
}

DirectionSet ConicRegionSet::directions_over(const SpatialRegion& region) const {
    DirectionSet acc = DirectionSet::empty_set(dim_, nbins_);
    for (const auto& [part_region, cone] : parts_)
        if (part_region.intersects(region)) acc = acc.unite(cone);
    return acc;
}

SpatialRegion ConicRegionSet::spatial_projection() const {
    SpatialRegion acc(dim_);
    for (const auto& [region, cone] : parts_)
        if (!cone.empty()) acc = acc.unite(region);
    return acc;
}

ConicRegionSet ConicRegionSet::unite(const ConicRegionSet& other) const {
    if (other.dim_ != dim_ || other.nbins_ != nbins_)
        throw_error(ErrorCode::DimMismatch, "conic sets use different discretizations");
    ConicRegionSet r = *this;
    for (const auto& [region, cone] : other.parts_) r.parts_.emplace_back(region, cone);
    return r;
}

ConicRegionSet ConicRegionSet::restrict_to(const SpatialRegion& region) const {
    ConicRegionSet r(dim_, nbins_);
    for (const auto& [part_region, cone] : parts_) {
        SpatialRegion cut = part_region.intersect(region);
        if (!cut.empty()) r.add(cut, cone);
    }
    return r;
}

ConicRegionSet ConicRegionSet::dilated(double spatial_pad, int angular_bins) const {
    ConicRegionSet r(dim_, nbins_);
    for (const auto& [region, cone] : parts_)
        r.add(region.dilated(spatial_pad), cone.dilated(angular_bins));
    return r;
}

bool transversal(const ConicRegionSet& l1, const ConicRegionSet& l2) {
    if (l1.dim() != l2.dim() || l1.nbins() != l2.nbins())
        throw_error(ErrorCode::DimMismatch, "transversality test across discretizations");
    for (const auto& [r1, c1] : l1.parts())
        for (const auto& [r2, c2] : l2.parts()) {
            if (!r1.intersects(r2)) continue;
            if (c1.intersects(c2.antipode())) return false;
        }
    return true;
}

bool region_cone_disjoint(const SpatialRegion& region, const DirectionSet& v,
                          const ConicRegionSet& l) {
    if (region.dim() != l.dim() || v.dim() != l.dim() || v.nbins() != l.nbins())
        throw_error(ErrorCode::DimMismatch, "region/cone/set dims differ");
    for (const auto& [lr, lc] : l.parts())
        if (lr.intersects(region) && lc.intersects(v)) return false;
    return true;
}

bool ProductConicDescription::contains(const std::array<double, 2>& x,
                                       const std::array<double, 2>& y,
                                       const std::array<double, 2>& xi,
                                       const std::array<double, 2>& eta) const {
    auto is_zero = [](const std::array<double, 2>& v, int dim) {
        for (int d = 0; d < dim; ++d)
            if (v[d] != 0.0) return false;
        return true;
    };
    auto bin_of = [](const std::array<double, 2>& v, const ConicRegionSet& l) {
        return l.dim() == 1 ? direction_bin_1d(static_cast<long long>(v[0] > 0 ? 1 : -1))
                            : direction_bin_2d(v[0], v[1], l.nbins());
    };
    const bool xi0 = is_zero(xi, l1_.dim());
    const bool eta0 = is_zero(eta, l2_.dim());
    if (xi0 && eta0) return false;
    if (!xi0 && !eta0)
        return l1_.contains(x, bin_of(xi, l1_)) && l2_.contains(y, bin_of(eta, l2_));
    if (eta0) return l1_.contains(x, bin_of(xi, l1_)) && supp2_.contains(y);
    return l2_.contains(y, bin_of(eta, l2_)) && supp1_.contains(x);
}

ProductConicDescription product_conic_set(const ConicRegionSet& l1, const ConicRegionSet& l2) {
    return product_conic_set(l1, l2, SpatialRegion::whole(l1.dim()),
                             SpatialRegion::whole(l2.dim()));
}

ProductConicDescription product_conic_set(const ConicRegionSet& l1, const ConicRegionSet& l2,
                                          SpatialRegion supp1, SpatialRegion supp2) {
    return ProductConicDescription(l1, l2, std::move(supp1), std::move(supp2));
}

namespace {

// Directions reachable as a cone1-direction plus a cone2-direction with
// positive weights: the short closed arc between each bin pair.
DirectionSet sum_cone(const DirectionSet& c1, const DirectionSet& c2) {
    const int dim = c1.dim();
    DirectionSet out = DirectionSet::empty_set(dim, c1.nbins());
    if (dim == 1) {
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2) {
                if (!c1.test(b1) || !c2.test(b2)) continue;
                if (b1 != b2)
                    throw GateError(ErrorCode::TransversalityViolated, "xi + eta = 0",
                                    "antipodal directions present in the pullback sum");
                out.set(b1);
            }
        return out;
    }
    const int n = c1.nbins();
    const int half = n / 2;
    for (int b1 = 0; b1 < n; ++b1) {
        if (!c1.test(b1)) continue;
        for (int b2 = 0; b2 < n; ++b2) {
            if (!c2.test(b2)) continue;
            const int fwd = ((b2 - b1) % n + n) % n;
            if (fwd == half)
                throw GateError(ErrorCode::TransversalityViolated, "xi + eta = 0",
                                "antipodal directions present in the pullback sum");
            if (fwd < half)
                for (int s = 0; s <= fwd; ++s) out.set((b1 + s) % n);
            else
                for (int s = 0; s <= n - fwd; ++s) out.set((b2 + s) % n);
        }
    }
    return out;
}

}  // namespace

ConicRegionSet diagonal_pullback(const ProductConicDescription& l) {
    const ConicRegionSet& l1 = l.l1();
    const ConicRegionSet& l2 = l.l2();
    if (l1.dim() != l2.dim() || l1.nbins() != l2.nbins())
        throw_error(ErrorCode::DimMismatch, "diagonal pullback requires matching factor spaces");
    ConicRegionSet out(l1.dim(), l1.nbins());
    // eta = 0 branch restricts to x in supp2; xi = 0 branch to x in supp1.
    out = out.unite(l1.restrict_to(l.supp2()));
    out = out.unite(l2.restrict_to(l.supp1()));
    for (const auto& [r1, c1] : l1.parts())
        for (const auto& [r2, c2] : l2.parts()) {
            SpatialRegion common = r1.intersect(r2);
            if (common.empty()) continue;
            out.add(common, sum_cone(c1, c2));
        }
    return out;
}

}  // namespace sobwave
