#pragma once

#include "sobwave/catalog.hpp"
#include "sobwave/indices.hpp"
#include "sobwave/seminorm.hpp"

namespace sobwave {

enum class MultiplyMode { General, DisjointSupport };

// Everything a successful product run certifies; constructed only after all
// gates pass.
struct ProductCertificate {
    IndexHypotheses hypotheses;
    MultiplyMode mode = MultiplyMode::General;
    double r = 0.0;      // derived microlocal order of the tensor carrier
    double s_max = 0.0;  // certified global order bound s_*
    double r_max = 0.0;  // certified microlocal order bound r_*
    bool index_gate = false;
    bool geometry_gate = false;  // transversality, or region disjointness
    std::string strictness_notes;
    ConicRegionSet l_out;  // pullback carrier of the product
};

struct ProductResult {
    SpectralDistribution product;
    ProductCertificate certificate;
};

// Gated product of two distributions: index admissibility first, then the
// geometric gate on the supplied carriers (transversality in the general
// mode, spatial disjointness of the carriers in the disjoint-support mode),
// then the dealiased coefficient convolution and the pullback carrier.
ProductResult multiply(const SpectralDistribution& u, const SpectralDistribution& v,
                       const ConicRegionSet& l1, const ConicRegionSet& l2,
                       const IndexHypotheses& h, MultiplyMode mode = MultiplyMode::General);

// Max relative coefficient deviation (against the sup of the reference)
// between two independent product routes: the padded real-space pointwise
// multiplication and a direct spectral convolution sum.
double consistency_check(const SpectralDistribution& u, const SpectralDistribution& v);

struct BoundRatio {
    double lhs = 0.0;    // q_{s_*; phi}(u v)
    double rhs = 0.0;    // q_{r'; phi}(u) * q_{r''; phi1}(v)
    double ratio = 0.0;
};

// The Sobolev multiplication bound: requires r' + r'' >= 0, s_* <= min and
// s_* <= r' + r'' - m/2 (strict at m/2 coincidences), and phi1 = 1 on a
// neighborhood of supp phi.
BoundRatio sobolev_bound_ratio(const SpectralDistribution& u, const SpectralDistribution& v,
                               const WindowFunction& phi, const WindowFunction& phi1,
                               double s_star, double r_prime, double r_second);

}  // namespace sobwave
