#pragma once

#include <vector>

#include "sobwave/direction.hpp"

namespace sobwave {

// Smooth nonnegative degree-0 frequency cutoff: a function of the direction
// only, with values in [0,1], equal to 1 on a core cone and 0 outside a
// fattened one.  The induced frequency mask assigns 0 to the zero frequency.
class HomogeneousCutoff {
public:
    HomogeneousCutoff(int dim, std::vector<double> values, double transition_halfwidth);

    int dim() const { return dim_; }
    int nbins() const { return static_cast<int>(values_.size()); }
    double transition_halfwidth() const { return transition_halfwidth_; }
    const std::vector<double>& values() const { return values_; }

    double value_at_bin(int bin) const { return values_[static_cast<std::size_t>(bin)]; }
    double mask_1d(long long k) const;                // alpha(k), alpha(0) = 0
    double mask_2d(double kx, double ky) const;

    DirectionSet support() const;                     // {value > 0}
    DirectionSet core() const;                        // {value == 1}
    DirectionSet complement_support() const;          // supp(1 - alpha) = {value < 1}

private:
    int dim_;
    std::vector<double> values_;
    double transition_halfwidth_;
};

// Build the cutoff that is 1 on `core` and 0 outside `fattened`, ramping with
// the C^infinity smoothstep in between; the ramp midpoint takes value 1/2.
// Requires core inside the interior of fattened (dim 2), otherwise there is
// no room for a smooth transition.
HomogeneousCutoff homogeneous_cutoff(const DirectionSet& core, const DirectionSet& fattened);

}  // namespace sobwave
