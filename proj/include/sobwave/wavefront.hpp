#pragma once

#include <optional>

#include "sobwave/seminorm.hpp"

namespace sobwave {

// One dyadic-decay fit: log2 E_j = c - beta j over the usable shells, with
// the estimated maximal Sobolev order s-hat = beta/2 (the shell measure is
// deliberately kept inside E_j, which is what makes a point mass come out at
// -dim/2).  `smooth` marks spectra that die below the absolute floor before
// the top of the fit range.
struct OrderFit {
    bool smooth = false;
    bool degenerate = false;
    double order = 0.0;
    double slope = 0.0;     // d log2(E_j) / dj
    double residual = 0.0;  // rms of the fit
    int shells_used = 0;
};

struct WavefrontParams {
    int cells_per_axis = 8;
    double cell_overlap = 0.1;     // window dilation per side, in cell widths
    int direction_cells = 24;      // angular resolution of the estimator (dim 2)
    double cone_half_angle = 0.2617993877991494;  // 15 degrees
    int mask_bins = DirectionSet::kDefaultBins2d;
    double smooth_floor = 1e-24;   // absolute shell-energy floor
    double relative_floor = 1e-8;  // dynamic range against the global profile
    double threshold_margin = 0.1; // dead band absorbing fit noise
    std::optional<int> fit_j_min;
    std::optional<int> fit_j_max;
};

// Fit a profile over [j_lo, j_hi]; shells below `floor` are unusable, and a
// spectrum whose top shells fall under the floor is flagged smooth.  When a
// reference profile is given, each shell additionally needs to clear
// rel_floor times the reference energy: cone/cell energies further than the
// estimator's dynamic range below the distribution's own spectrum are window
// leakage, not signal.
OrderFit fit_order(const AnnulusProfile& profile, int j_lo, int j_hi, double floor,
                   const AnnulusProfile* reference = nullptr, double rel_floor = 0.0);

// Per (spatial cell x direction cell) fitted orders for one distribution.
class OrderField {
public:
    OrderField(GridSpec grid, WavefrontParams params, std::vector<OrderFit> fits);

    const GridSpec& grid() const { return grid_; }
    const WavefrontParams& params() const { return params_; }
    int cell_count() const;
    int dir_count() const;
    const OrderFit& fit(int cell, int dir) const;

    Box cell_box(int cell) const;
    std::array<double, 2> cell_center(int cell) const;
    double dir_center_angle(int dir) const;           // dim 2
    DirectionSet dir_cell_arc(int dir) const;          // owned mask arc

private:
    GridSpec grid_;
    WavefrontParams params_;
    std::vector<OrderFit> fits_;  // [cell * dir_count + dir]
};

OrderField estimate_order_field(const SpectralDistribution& u,
                                const WavefrontParams& params = {});

// Directional order at one cell/direction; throws DegenerateFit when fewer
// than three usable shells remain.
OrderFit estimate_order_directional(const SpectralDistribution& u, int cell, int dir,
                                    const WavefrontParams& params = {});

// Global order of the centrally windowed distribution over the full lattice.
OrderFit estimate_global_order(const SpectralDistribution& u,
                               const WavefrontParams& params = {});

struct WavefrontEntry {
    int cell = 0;
    int dir = 0;
};

// Thresholded order field: (cell, dir) is singular of order r when the fit
// gives s-hat < r - margin.
struct WavefrontSet {
    double order = 0.0;
    GridSpec grid;
    WavefrontParams params;
    std::vector<WavefrontEntry> entries;
    std::vector<int> undecided_cells;  // cells with degenerate fits
    ConicRegionSet carrier;            // cells x owned arcs, mask_bins wide

    bool empty() const { return entries.empty(); }
};

WavefrontSet estimate_wavefront(const OrderField& field, double r);
WavefrontSet estimate_wavefront(const SpectralDistribution& u, double r,
                                const WavefrontParams& params = {});

struct ContainmentReport {
    bool contained = true;
    std::vector<WavefrontEntry> violations;
};

// Exact inclusion of the estimated set in `l` over the discretization, with
// the violating (cell, direction) witnesses.
ContainmentReport wf_contained(const WavefrontSet& wf, const ConicRegionSet& l);

// Spatial projection of the estimated wavefront.
SpatialRegion sing_supp(const SpectralDistribution& u, double r,
                        const WavefrontParams& params = {});

}  // namespace sobwave
