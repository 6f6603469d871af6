#pragma once

#include <utility>
#include <vector>

#include "sobwave/direction.hpp"
#include "sobwave/region.hpp"

namespace sobwave {

// Closed conic subset of [0,1)^dim x (R^dim \ {0}) as a finite union of
// (spatial region, direction cone) pairs.
class ConicRegionSet {
public:
    ConicRegionSet() = default;
    ConicRegionSet(int dim, int nbins = 0)
        : dim_(dim), nbins_(dim == 1 ? 2 : (nbins > 0 ? nbins : DirectionSet::default_bins(dim))) {}

    static ConicRegionSet empty_set(int dim, int nbins = 0) { return ConicRegionSet(dim, nbins); }

    int dim() const { return dim_; }
    int nbins() const { return nbins_; }
    const std::vector<std::pair<SpatialRegion, DirectionSet>>& parts() const { return parts_; }
    bool empty() const;

    void add(SpatialRegion region, DirectionSet cone);
    bool contains(const std::array<double, 2>& x, int bin) const;

    // Cone of all directions attached to points of `region`.
    DirectionSet directions_over(const SpatialRegion& region) const;
    // Spatial projection pr_1.
    SpatialRegion spatial_projection() const;

    ConicRegionSet unite(const ConicRegionSet& other) const;
    ConicRegionSet restrict_to(const SpatialRegion& region) const;
    ConicRegionSet dilated(double spatial_pad, int angular_bins) const;

private:
    int dim_ = 1;
    int nbins_ = 2;
    std::vector<std::pair<SpatialRegion, DirectionSet>> parts_;
};

// Hoermander transversality gate: no (x, xi) in l1 with (x, -xi) in l2.
// Exact over the region/direction discretization and symmetric in (l1, l2).
bool transversal(const ConicRegionSet& l1, const ConicRegionSet& l2);

// Whether (region x V) misses L, the admissibility premise of cone-localized
// seminorms.
bool region_cone_disjoint(const SpatialRegion& region, const DirectionSet& v,
                          const ConicRegionSet& l);

// The product carrier over (x,y;xi,eta), kept symbolic as its two factors:
// membership holds iff xi,eta != 0 with (x,xi) in L1 and (y,eta) in L2, or
// eta = 0 with (x,xi) in L1 and y in supp2, or xi = 0 with (y,eta) in L2 and
// x in supp1.
class ProductConicDescription {
public:
    ProductConicDescription(ConicRegionSet l1, ConicRegionSet l2, SpatialRegion supp1,
                            SpatialRegion supp2)
        : l1_(std::move(l1)), l2_(std::move(l2)), supp1_(std::move(supp1)),
          supp2_(std::move(supp2)) {}

    const ConicRegionSet& l1() const { return l1_; }
    const ConicRegionSet& l2() const { return l2_; }
    const SpatialRegion& supp1() const { return supp1_; }
    const SpatialRegion& supp2() const { return supp2_; }

    bool contains(const std::array<double, 2>& x, const std::array<double, 2>& y,
                  const std::array<double, 2>& xi, const std::array<double, 2>& eta) const;

private:
    ConicRegionSet l1_, l2_;
    SpatialRegion supp1_, supp2_;
};

ProductConicDescription product_conic_set(const ConicRegionSet& l1, const ConicRegionSet& l2);
ProductConicDescription product_conic_set(const ConicRegionSet& l1, const ConicRegionSet& l2,
                                          SpatialRegion supp1, SpatialRegion supp2);

// Pullback of the product carrier along x -> (x,x): directions close under
// positive sums, so each overlap cell contributes the short closed arc
// between every pair of factor directions.  Antipodal factor directions can
// sum to zero and abort with TransversalityViolated.
ConicRegionSet diagonal_pullback(const ProductConicDescription& l);

}  // namespace sobwave
