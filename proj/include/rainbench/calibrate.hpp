#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rainbench/image.hpp"
#include "rainbench/quality.hpp"
#include "rainbench/rainsim.hpp"

namespace rainbench {

/// Joint SSIM/PSNR condition that qualifies a droplet count as matching a
/// real-rain reference: ssim_lo < SSIM < ssim_hi and PSNR > psnr_min, all
/// strict.
struct AcceptanceBand {
    double ssim_lo = 0.9500;
    double ssim_hi = 0.9510;
    double psnr_min = 41.50;

    bool accepts(double ssim, double psnr) const {
        return ssim_lo < ssim && ssim < ssim_hi && psnr > psnr_min;
    }
};

/// Droplet-count grid swept during calibration: n_min, n_min+step, ..., n_max.
struct SweepRange {
    int n_min = 10;
    int n_max = 5000;
    int step = 10;
};

struct BandSample {
    int count = 0;
    double ssim = 0.0;
    double psnr = 0.0;
};

/// One calibrated rainfall condition.
struct CalibrationPoint {
    double rainfall_mm_h = 0.0;
    std::vector<int> accepted_counts;
    int chosen_count = 0;
};

/// OLS fit of rainfall on droplet count with 95% confidence intervals.
struct CalibrationFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::pair<double, double> slope_ci95{0.0, 0.0};
    std::pair<double, double> intercept_ci95{0.0, 0.0};
    int n_points = 0;
};

/// Maps a droplet count to its (ssim, psnr) score against the reference.
/// Must be pure: the sweep may call it concurrently.
using BandScorer = std::function<std::pair<double, double>(int count)>;

/// Scorer used by the real calibration path: composites `count` droplets
/// onto `clean` (seeded by hash64(seed, "sweep", count)) and scores the
/// result against `reference`. Throws DimensionMismatch up front.
BandScorer make_composite_scorer(const Image& clean, const Image& reference,
                                 const DropletStyle& style, std::uint64_t seed,
                                 const SsimParams& params = {});

/// Evaluates the scorer over the full grid and returns every count whose
/// scores fall inside the band, sorted by count.
std::vector<BandSample> sweep_band(const SweepRange& range, const AcceptanceBand& band,
                                   const BandScorer& scorer);

std::vector<BandSample> sweep_band(const Image& clean, const Image& reference,
                                   const SweepRange& range, const AcceptanceBand& band,
                                   const DropletStyle& style, std::uint64_t seed);

enum class CountChoice { First, Midpoint, Last };

/// Representative count of a non-empty accepted set. Midpoint (the default)
/// takes the midpoint of [min, max] snapped to the sweep grid, ties toward
/// the lower grid point. Throws EmptyAcceptanceSet.
int choose_count(const std::vector<BandSample>& accepted, const SweepRange& range,
                 CountChoice choice = CountChoice::Midpoint);

/// Ordinary least squares of omega on n: omega = slope*n + intercept, with
/// r^2 and two-sided 95% t-intervals (df = n_points - 2). Requires >= 3
/// points (InsufficientPoints) with at least two distinct n (DegenerateX).
struct FitPoint {
    double droplet_count;
    double rainfall_mm_h;
};
CalibrationFit fit_linear(const std::vector<FitPoint>& points);

} // namespace rainbench
