#pragma once

#include <string>

#include "sobwave/conic.hpp"

namespace sobwave {

// Regularity hypotheses for a product: global orders r', r'' of the two
// factors, microlocal orders r1, r2, and the ambient dimension.
struct IndexHypotheses {
    double r_prime = 0.0;
    double r_second = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    int m = 1;

    // Pure index arithmetic tolerates a wider range than the weighted sums;
    // seminorm evaluations re-check their own |s| <= 8 guard.
    void validate() const {
        auto check = [](double v, const char* name) {
            if (!(std::abs(v) <= 16.0))
                throw_error(ErrorCode::WeightOverflow,
                            std::string("index ") + name + " out of guarded range |.| <= 16");
        };
        check(r_prime, "r'");
        check(r_second, "r''");
        check(r1, "r1");
        check(r2, "r2");
        if (m != 1 && m != 2)
            throw_error(ErrorCode::DimMismatch, "index hypotheses support m = 1 or 2");
    }
};

// Maximal admissible tensor orders:
//   s_max = min{r' + min{0,r''}, r'' + min{0,r'}}
//   r_max = min{r1 + min{0,r''}, r2 + min{0,r'}}
struct TensorIndexBudget {
    double s_max = 0.0;
    double r_max = 0.0;
};

TensorIndexBudget tensor_indices(const IndexHypotheses& h);

// Admissible product orders under the general (transversal) hypotheses.
// Gates: r := r_max of the tensor budget must exceed m/2, and r' + r'' >= 0.
// Certified bounds: r_* <= r - m/2 and s_* <= min{min{r',r''}, r'+r''-m/2},
// the latter decremented by `strictness_margin` when the binding value sits
// at an exact m/2 coincidence (the strict-inequality cases).
struct ProductIndexBudget {
    double r = 0.0;
    double s_max = 0.0;
    double r_max = 0.0;
    std::string strictness_notes;
};

ProductIndexBudget product_indices(const IndexHypotheses& h, double strictness_margin = 1e-6);

// Admissible orders in the disjoint-singular-support regime, which drops the
// r > m/2 gate: requires r1 + r2 >= 0 and r' + r'' >= 0, certifies
// s_* as above and r_* <= min{min{r1,r2}, r1+r2-m/2} with the same
// strictness handling at m/2 coincidences.
struct DisjointIndexBudget {
    double s_max = 0.0;
    double r_max = 0.0;
    std::string strictness_notes;
};

DisjointIndexBudget disjoint_support_indices(const IndexHypotheses& h,
                                             double strictness_margin = 1e-6);

// The conormal obstruction set of the diagonal map, {(x,x;xi,-xi)}; exposed
// for documentation-level tests.  The transversality gate is its emptiness
// against the product carrier.
bool n_delta_contains(const std::array<double, 2>& x, const std::array<double, 2>& y,
                      const std::array<double, 2>& xi, const std::array<double, 2>& eta, int m);

}  // namespace sobwave
