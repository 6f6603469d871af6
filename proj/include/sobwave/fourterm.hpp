#pragma once

#include "sobwave/cutoff.hpp"
#include "sobwave/indices.hpp"
#include "sobwave/seminorm.hpp"

namespace sobwave {

// The four-way cone splitting of a product-space seminorm: with F1 = F(phi1 u)
// and F2 = F(phi2 v), the identity
//   F1(xi) F2(eta) = [alpha beta + alpha(1-beta) + (1-alpha)beta
//                     + (1-alpha)(1-beta)] F1(xi) F2(eta)
// splits p_{r; phi1 (x) phi2, Vtilde}(u (x) v) <= I1 + I2 + I3 + I4, where I1
// vanishes identically because Vtilde misses supp(alpha) x supp(beta).  Each
// bound carries the sign-case label of (r', r'') and its fitted constant.
struct FourTermReport {
    std::array<double, 4> terms{};    // I1..I4
    std::array<double, 4> bounds{};   // bounding expressions (bounds[0] = 0)
    std::array<double, 4> fitted{};   // terms[i] / bounds[i], 0 when both vanish
    char case_label = 'a';            // a: r',r''>=0  b: r'<0<=r''  c: r''<0<=r'  d: both<0
    double lhs_total = 0.0;           // p_{r; phi1 (x) phi2, Vtilde}(u (x) v)
    double cover_sum = 0.0;           // I1 + I2 + I3 + I4
    double r = 0.0;
};

// Requires 1-dimensional factors (Vtilde lives on the product circle), the
// index premises r <= r1 + min{0,r''} and r <= r2 + min{0,r'}, and mask-level
// disjointness of supp(alpha) x supp(beta) from Vtilde (MaskOverlap
// otherwise, which makes I1 = 0 exact rather than merely small).
FourTermReport four_term_decomposition(const SpectralDistribution& u,
                                       const SpectralDistribution& v,
                                       const WindowFunction& phi1, const WindowFunction& phi2,
                                       const HomogeneousCutoff& alpha,
                                       const HomogeneousCutoff& beta,
                                       const DirectionSet& vtilde, double r,
                                       const IndexHypotheses& h);

}  // namespace sobwave
