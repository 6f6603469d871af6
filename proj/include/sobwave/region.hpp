#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sobwave/errors.hpp"

namespace sobwave {

// Axis-aligned half-open box in [0,1)^dim, dim <= 2.
struct Box {
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{0.0, 0.0};

    bool empty() const {
        for (int d = 0; d < dim; ++d)
            if (!(lo[d] < hi[d])) return true;
        return false;
    }
    bool contains(const std::array<double, 2>& x) const {
        for (int d = 0; d < dim; ++d)
            if (x[d] < lo[d] || x[d] >= hi[d]) return false;
        return true;
    }
    std::optional<Box> intersect(const Box& other) const;
    Box dilated(double pad) const;
};

// Finite union of half-open boxes; canonicalized to pairwise-disjoint boxes
// at construction so the representation is a genuine set.
class SpatialRegion {
public:
    SpatialRegion() = default;
    explicit SpatialRegion(int dim) : dim_(dim) {}
    SpatialRegion(int dim, std::vector<Box> boxes);

    static SpatialRegion whole(int dim);  // [0,1)^dim
    static SpatialRegion interval(double lo, double hi);
    static SpatialRegion box2(double lox, double hix, double loy, double hiy);

    int dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }

    bool contains(const std::array<double, 2>& x) const;
    bool contains1(double x) const { return contains({x, 0.0}); }
    bool intersects(const SpatialRegion& other) const;
    bool disjoint_from(const SpatialRegion& other) const { return !intersects(other); }
    double measure() const;

    SpatialRegion unite(const SpatialRegion& other) const;
    SpatialRegion intersect(const SpatialRegion& other) const;
    SpatialRegion dilated(double pad) const;  // clipped to [0,1)^dim

    // Cartesian product with another region (dims add; result dim <= 2).
    SpatialRegion product(const SpatialRegion& other) const;

    friend bool operator==(const SpatialRegion& a, const SpatialRegion& b);

private:
    void add_disjoint(const Box& b);

    int dim_ = 1;
    std::vector<Box> boxes_;
};

}  // namespace sobwave
