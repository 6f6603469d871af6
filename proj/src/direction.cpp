#include "sobwave/direction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sobwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

DirectionSet::DirectionSet(int dim, int nbins) : dim_(dim), nbins_(nbins) {
    if (dim != 1 && dim != 2)
        throw_error(ErrorCode::DimMismatch, "DirectionSet masks support dim 1 or 2");
    if (dim == 1) nbins_ = 2;
    if (nbins_ <= 0) nbins_ = default_bins(dim);
    mask_.assign(static_cast<std::size_t>(nbins_), 0);
}

DirectionSet DirectionSet::empty_set(int dim, int nbins) { return DirectionSet(dim, nbins); }

DirectionSet DirectionSet::full_sphere(int dim, int nbins) {
    DirectionSet s(dim, nbins);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
}

int DirectionSet::count() const {
    int c = 0;
    for (char m : mask_) c += m != 0;
    return c;
}

double DirectionSet::bin_angle(int bin) const { return kTwoPi * bin / nbins_; }
double DirectionSet::bin_width() const { return kTwoPi / nbins_; }

void DirectionSet::require_compatible(const DirectionSet& other) const {
    if (dim_ != other.dim_ || nbins_ != other.nbins_)
        throw_error(ErrorCode::DimMismatch, "direction sets use different discretizations");
}

DirectionSet DirectionSet::complement() const {
    DirectionSet s = *this;
    for (char& m : s.mask_) m = m ? 0 : 1;
    return s;
}

DirectionSet DirectionSet::antipode() const {
    DirectionSet s(dim_, nbins_);
    if (dim_ == 1) {
        s.mask_[0] = mask_[1];
        s.mask_[1] = mask_[0];
        return s;
    }
    const int half = nbins_ / 2;
    for (int b = 0; b < nbins_; ++b) s.mask_[(b + half) % nbins_] = mask_[b];
    return s;
}

DirectionSet DirectionSet::dilated(int bins) const {
    if (dim_ == 1 || bins <= 0) return *this;
    DirectionSet s(dim_, nbins_);
    for (int b = 0; b < nbins_; ++b) {
        if (!mask_[b]) continue;
        for (int d = -bins; d <= bins; ++d) s.mask_[((b + d) % nbins_ + nbins_) % nbins_] = 1;
    }
    return s;
}

DirectionSet DirectionSet::interior() const {
    if (dim_ == 1) return *this;  // discrete sphere: every set is open
    DirectionSet s(dim_, nbins_);
    for (int b = 0; b < nbins_; ++b) {
        const bool left = mask_[(b + nbins_ - 1) % nbins_] != 0;
        const bool right = mask_[(b + 1) % nbins_] != 0;
        s.mask_[b] = (mask_[b] && left && right) ? 1 : 0;
    }
    return s;
}

DirectionSet DirectionSet::unite(const DirectionSet& other) const {
    require_compatible(other);
    DirectionSet s = *this;
    for (int b = 0; b < nbins_; ++b) s.mask_[b] = (mask_[b] || other.mask_[b]) ? 1 : 0;
    return s;
}

DirectionSet DirectionSet::intersect(const DirectionSet& other) const {
    require_compatible(other);
    DirectionSet s = *this;
    for (int b = 0; b < nbins_; ++b) s.mask_[b] = (mask_[b] && other.mask_[b]) ? 1 : 0;
    return s;
}

bool DirectionSet::intersects(const DirectionSet& other) const {
    require_compatible(other);
    for (int b = 0; b < nbins_; ++b)
        if (mask_[b] && other.mask_[b]) return true;
    return false;
}

bool DirectionSet::subset_of(const DirectionSet& other) const {
    require_compatible(other);
    for (int b = 0; b < nbins_; ++b)
        if (mask_[b] && !other.mask_[b]) return false;
    return true;
}

int direction_bin_1d(long long k) {
    if (k == 0) throw_error(ErrorCode::UnsupportedSpec, "zero frequency has no direction");
    return k > 0 ? 0 : 1;
}

int direction_bin_2d(double kx, double ky, int nbins) {
    if (kx == 0.0 && ky == 0.0)
        throw_error(ErrorCode::UnsupportedSpec, "zero frequency has no direction");
    const double theta = std::atan2(ky, kx);
    long bin = std::lround(theta / (kTwoPi / nbins));
    bin %= nbins;
    if (bin < 0) bin += nbins;
    return static_cast<int>(bin);
}

double bin_angular_distance(int a, int b, int nbins) {
    int d = std::abs(a - b) % nbins;
    d = std::min(d, nbins - d);
    return kTwoPi * d / nbins;
}

DirectionSet cone_from_caps(int dim, const std::vector<double>& centers, double half_angle,
                            int nbins) {
    if (!(half_angle > 0.0 && half_angle <= std::numbers::pi))
        throw_error(ErrorCode::UnsupportedSpec, "cap half-angle must be in (0, pi]");
    DirectionSet s(dim, nbins);
    if (dim == 1) {
        for (double c : centers) {
            s.set(c > 0 ? 0 : 1);
            // the antipode sits at angular distance pi
            if (half_angle >= std::numbers::pi) s.set(c > 0 ? 1 : 0);
        }
        return s;
    }
    const double step = kTwoPi / s.nbins();
    for (int b = 0; b < s.nbins(); ++b) {
        const double theta = b * step;
        for (double c : centers) {
            double d = std::fmod(std::abs(theta - c), kTwoPi);
            d = std::min(d, kTwoPi - d);
            if (d <= half_angle + 1e-12) {
                s.set(b);
                break;
            }
        }
    }
    return s;
}

DirectionSet cone_fatten(const DirectionSet& w, double eps) {
    if (w.empty())
        throw_error(ErrorCode::UnsupportedSpec, "cannot fatten an empty cone");
    if (w.full())
        throw_error(ErrorCode::FattenOverflow, "cone is already the full sphere");
    if (!(eps > 0.0 && eps < 1.0))
        throw_error(ErrorCode::UnsupportedSpec, "fattening radius must be in (0,1)");
    if (w.dim() == 1) return w;
    const double angle = std::asin(eps);
    const int bins = std::max(1, static_cast<int>(std::lround(angle / w.bin_width())));
    DirectionSet fat = w.dilated(bins);
    if (fat.full())
        throw_error(ErrorCode::FattenOverflow, "fattened cone covers the sphere; shrink eps");
    return fat;
}

}  // namespace sobwave
