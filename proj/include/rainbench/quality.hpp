#pragma once

#include "rainbench/image.hpp"

namespace rainbench {

/// Parameters of the windowed mean-SSIM. The defaults are the conventional
/// 11x11 Gaussian window (sigma 1.5) with k1=0.01, k2=0.03 on an 8-bit
/// dynamic range, i.e. C1 = (0.01*255)^2 and C2 = (0.03*255)^2.
/// window_radius 0 degenerates to per-pixel statistics (an escape hatch for
/// comparing against unwindowed SSIM variants).
struct SsimParams {
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
    int window_radius = 5;
    double window_sigma = 1.5;

    double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
    double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

/// Weighted first and second moments of one window position.
struct WindowStats {
    double mu_x = 0.0;
    double mu_y = 0.0;
    double sigma_x = 0.0;   // standard deviation, >= 0
    double sigma_y = 0.0;
    double sigma_xy = 0.0;  // covariance
};

struct QualityScore {
    double ssim = 0.0;
    double psnr_db = 0.0;  // +infinity when mse == 0
    double mse = 0.0;
};

/// Mean squared error over all samples. Throws DimensionMismatch.
double mse(const Image& a, const Image& b);

/// 10*log10(max_i^2 / MSE); +infinity when the images are identical.
double psnr(const Image& a, const Image& b, double max_i = 255.0);

/// Mean of per-window SSIM over every pixel position, mirror edges.
/// 3-channel inputs are converted to luma first; PSNR/MSE by contrast run
/// over all channels jointly.
double ssim(const Image& a, const Image& b, const SsimParams& p = {});

QualityScore quality_score(const Image& a, const Image& b, const SsimParams& p = {});

/// Stats of the window centered at (cx, cy) of two luma images, weighted by
/// the outer product of `window`. Exposed for property tests; ssim() uses
/// the same accumulation.
WindowStats window_stats(const Image& luma_a, const Image& luma_b, int cx, int cy,
                         const Kernel& window);

} // namespace rainbench
