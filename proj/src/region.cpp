#include "sobwave/region.hpp"

#include <algorithm>
#include <cmath>

namespace sobwave {

std::optional<Box> Box::intersect(const Box& other) const {
    Box r;
    r.dim = dim;
    for (int d = 0; d < dim; ++d) {
        r.lo[d] = std::max(lo[d], other.lo[d]);
        r.hi[d] = std::min(hi[d], other.hi[d]);
        if (!(r.lo[d] < r.hi[d])) return std::nullopt;
    }
    return r;
}

Box Box::dilated(double pad) const {
    Box r = *this;
    for (int d = 0; d < dim; ++d) {
        r.lo[d] = std::max(0.0, lo[d] - pad);
        r.hi[d] = std::min(1.0, hi[d] + pad);
    }
    return r;
}

namespace {

// a minus b as a list of disjoint boxes (standard axis-sweep split).
std::vector<Box> subtract(const Box& a, const Box& b) {
    auto overlap = a.intersect(b);
    if (!overlap) return {a};
    std::vector<Box> pieces;
    Box rest = a;
    for (int d = 0; d < a.dim; ++d) {
        if (rest.lo[d] < overlap->lo[d]) {
            Box left = rest;
            left.hi[d] = overlap->lo[d];
            pieces.push_back(left);
            rest.lo[d] = overlap->lo[d];
        }
        if (overlap->hi[d] < rest.hi[d]) {
            Box right = rest;
            right.lo[d] = overlap->hi[d];
            pieces.push_back(right);
            rest.hi[d] = overlap->hi[d];
        }
    }
    return pieces;  // `rest` is now exactly the overlap, dropped
}

}  // namespace

SpatialRegion::SpatialRegion(int dim, std::vector<Box> boxes) : dim_(dim) {
    if (dim < 1 || dim > 2)
        throw_error(ErrorCode::DimMismatch, "SpatialRegion supports dim 1 or 2");
    for (const Box& b : boxes) {
        if (b.dim != dim)
            throw_error(ErrorCode::DimMismatch, "box dim does not match region dim");
        if (!b.empty()) add_disjoint(b);
    }
    // Merge touching 1D intervals for a canonical form.
    if (dim_ == 1 && boxes_.size() > 1) {
        std::sort(boxes_.begin(), boxes_.end(),
                  [](const Box& x, const Box& y) { return x.lo[0] < y.lo[0]; });
        std::vector<Box> merged;
        for (const Box& b : boxes_) {
            if (!merged.empty() && b.lo[0] <= merged.back().hi[0] + 1e-15)
                merged.back().hi[0] = std::max(merged.back().hi[0], b.hi[0]);
            else
                merged.push_back(b);
        }
        boxes_ = std::move(merged);
    }
}

void SpatialRegion::add_disjoint(const Box& b) {
    std::vector<Box> queue{b};
    for (const Box& existing : boxes_) {
        std::vector<Box> next;
        for (const Box& q : queue)
            for (const Box& piece : subtract(q, existing)) next.push_back(piece);
        queue = std::move(next);
        if (queue.empty()) return;
    }
    for (const Box& q : queue)
        if (!q.empty()) boxes_.push_back(q);
}

SpatialRegion SpatialRegion::whole(int dim) {
    Box b;
    b.dim = dim;
    for (int d = 0; d < dim; ++d) {
        b.lo[d] = 0.0;
        b.hi[d] = 1.0;
    }
    return SpatialRegion(dim, {b});
}

SpatialRegion SpatialRegion::interval(double lo, double hi) {
    Box b;
    b.dim = 1;
    b.lo[0] = lo;
    b.hi[0] = hi;
    return SpatialRegion(1, {b});
}

SpatialRegion SpatialRegion::box2(double lox, double hix, double loy, double hiy) {
    Box b;
    b.dim = 2;
    b.lo = {lox, loy};
    b.hi = {hix, hiy};
    return SpatialRegion(2, {b});
}

bool SpatialRegion::contains(const std::array<double, 2>& x) const {
    for (const Box& b : boxes_)
        if (b.contains(x)) return true;
    return false;
}

bool SpatialRegion::intersects(const SpatialRegion& other) const {
    if (dim_ != other.dim_)
        throw_error(ErrorCode::DimMismatch, "region dims differ in intersection test");
    for (const Box& a : boxes_)
        for (const Box& b : other.boxes_)
            if (a.intersect(b)) return true;
    return false;
}

double SpatialRegion::measure() const {
    double m = 0.0;
    for (const Box& b : boxes_) {
        double v = 1.0;
        for (int d = 0; d < dim_; ++d) v *= b.hi[d] - b.lo[d];
        m += v;
    }
    return m;
}

SpatialRegion SpatialRegion::unite(const SpatialRegion& other) const {
    std::vector<Box> all = boxes_;
    for (const Box& b : other.boxes_) all.push_back(b);
    return SpatialRegion(dim_, all);
}

SpatialRegion SpatialRegion::intersect(const SpatialRegion& other) const {
    std::vector<Box> result;
    for (const Box& a : boxes_)
        for (const Box& b : other.boxes_)
            if (auto c = a.intersect(b)) result.push_back(*c);
    return SpatialRegion(dim_, result);
}

SpatialRegion SpatialRegion::dilated(double pad) const {
    std::vector<Box> result;
    for (const Box& b : boxes_) result.push_back(b.dilated(pad));
    return SpatialRegion(dim_, result);
}

SpatialRegion SpatialRegion::product(const SpatialRegion& other) const {
    if (dim_ + other.dim_ > 2)
        throw_error(ErrorCode::DimensionOverflow, "region product exceeds dim 2");
    std::vector<Box> result;
    for (const Box& a : boxes_)
        for (const Box& b : other.boxes_) {
            Box p;
            p.dim = dim_ + other.dim_;
            for (int d = 0; d < dim_; ++d) {
                p.lo[d] = a.lo[d];
                p.hi[d] = a.hi[d];
            }
            for (int d = 0; d < other.dim_; ++d) {
                p.lo[dim_ + d] = b.lo[d];
                p.hi[dim_ + d] = b.hi[d];
            }
            result.push_back(p);
        }
    return SpatialRegion(dim_ + other.dim_, result);
}

bool operator==(const SpatialRegion& a, const SpatialRegion& b) {
    if (a.dim_ != b.dim_) return false;
    // Equality of canonical disjoint unions up to box decomposition: mutual
    // coverage, checked by measure of symmetric difference being zero.
    double ma = a.measure();
    double mb = b.measure();
    double mi = a.intersect(b).measure();
    return std::abs(ma - mi) < 1e-12 && std::abs(mb - mi) < 1e-12;
}

}  // namespace sobwave
