#pragma once

#include <vector>

#include "sobwave/errors.hpp"

namespace sobwave {

// Closed cone of directions, discretized on the unit sphere: two signed rays
// for dim 1, `nbins` equally spaced angles for dim 2 (default 360).
// Membership of xi != 0 depends only on xi/|xi| through direction_bin below.
class DirectionSet {
public:
    static constexpr int kDefaultBins2d = 360;

    DirectionSet() = default;
    DirectionSet(int dim, int nbins);
    static DirectionSet empty_set(int dim, int nbins = 0);
    static DirectionSet full_sphere(int dim, int nbins = 0);
    static int default_bins(int dim) { return dim == 1 ? 2 : kDefaultBins2d; }

    int dim() const { return dim_; }
    int nbins() const { return nbins_; }
    bool test(int bin) const { return mask_[static_cast<std::size_t>(bin)] != 0; }
    void set(int bin, bool value = true) { mask_[static_cast<std::size_t>(bin)] = value ? 1 : 0; }

    int count() const;
    bool empty() const { return count() == 0; }
    bool full() const { return count() == nbins_; }

    double bin_angle(int bin) const;     // radians, dim 2
    double bin_width() const;            // radians, dim 2

    DirectionSet complement() const;
    DirectionSet antipode() const;       // reflect through the origin
    DirectionSet dilated(int bins) const;
    DirectionSet interior() const;       // drop bins adjacent to the complement
    DirectionSet unite(const DirectionSet& other) const;
    DirectionSet intersect(const DirectionSet& other) const;
    bool intersects(const DirectionSet& other) const;
    bool subset_of(const DirectionSet& other) const;

    friend bool operator==(const DirectionSet& a, const DirectionSet& b) {
        return a.dim_ == b.dim_ && a.nbins_ == b.nbins_ && a.mask_ == b.mask_;
    }

private:
    void require_compatible(const DirectionSet& other) const;

    int dim_ = 1;
    int nbins_ = 2;
    std::vector<char> mask_;
};

// Bin of a nonzero lattice direction; dim 1 uses bin 0 for +, bin 1 for -.
int direction_bin_1d(long long k);
int direction_bin_2d(double kx, double ky, int nbins);

// Smallest angular distance between two bins on the discretized circle.
double bin_angular_distance(int a, int b, int nbins);

// Closed cap union: directions within `half_angle` (radians, in (0, pi)) of
// some center.  Centers are signs (+-1) for dim 1 and angles for dim 2.
DirectionSet cone_from_caps(int dim, const std::vector<double>& centers, double half_angle,
                            int nbins = 0);

// Closed epsilon-fattening: all directions within arcsin(eps) of the cone,
// always at least one discretization step so the input lies in the interior
// (dim 1 spheres have no intermediate directions and fatten to themselves).
DirectionSet cone_fatten(const DirectionSet& w, double eps);

}  // namespace sobwave
