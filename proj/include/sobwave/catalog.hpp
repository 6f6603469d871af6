#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobwave/conic.hpp"
#include "sobwave/synth.hpp"

namespace sobwave {

// A corpus member with its analytically known regularity: the exact global
// Sobolev order (the critical exponent of the spectral decay; absent for
// smooth members) and a conic carrier that contains the wave front set for
// every order.
struct CatalogEntry {
    std::string id;
    DistributionSpec spec;
    std::optional<double> sobolev_order;
    ConicRegionSet wavefront;
    SpatialRegion support;

    bool smooth() const { return !sobolev_order.has_value(); }
};

// Small boxes used as ground-truth singular regions: the estimator cell
// (width 1/8) containing x0.
SpatialRegion singular_cell(double x0);

const std::vector<CatalogEntry>& corpus_1d();
const std::vector<CatalogEntry>& corpus_2d();

// Lookup by id across both corpora; throws UnsupportedSpec when missing.
const CatalogEntry& catalog_entry(const std::string& id);
std::vector<std::string> catalog_ids();

SpectralDistribution synthesize_entry(const CatalogEntry& entry, const GridSpec& grid);

}  // namespace sobwave
