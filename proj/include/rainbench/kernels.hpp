#pragma once

#include <cstdint>
#include <span>

#include "rainbench/image.hpp"

namespace rainbench::kernels {

// Serial/parallel kernel pairs. Each pair computes the same per-element
// expressions in the same order, so outputs are bit-identical; the parallel
// variant only distributes independent rows (or row-partials) across OpenMP
// threads. Reductions always go through per-row partial sums folded in row
// order, which keeps results invariant under the thread count.

/// Separable convolution of one real-valued plane, horizontal then vertical
/// pass, mirror edges. src and dst are w*h, and may not alias.
void convolve_plane_serial(std::span<const double> src, std::span<double> dst,
                           int w, int h, const Kernel& k);
void convolve_plane_parallel(std::span<const double> src, std::span<double> dst,
                             int w, int h, const Kernel& k);

/// Mean squared error over every sample of two equal-shaped buffers.
double mse_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                  int samples_per_row, int rows);
double mse_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                    int samples_per_row, int rows);

/// Per-pixel SSIM of two luma planes with a Gaussian-weighted window
/// (2-D weights are the outer product of `window`), mirror edges.
void ssim_map_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                     int w, int h, const Kernel& window, double c1, double c2,
                     std::span<double> out);
void ssim_map_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                       int w, int h, const Kernel& window, double c1, double c2,
                       std::span<double> out);

/// One anti-aliased streak: segment from (x0,y0) to (x1,y1) with half-width
/// half_w. Coverage of a pixel is clamp(half_w + 0.5 - distance, 0, 1)
/// measured from the pixel center to the segment.
struct Streak {
    double x0, y0, x1, y1;
    double half_w;
};

/// Accumulates streak coverage into cov (w*h, max-combined, so the result is
/// independent of rasterization order). The serial variant walks streaks;
/// the parallel variant bins streaks by row and distributes rows.
void rasterize_coverage_serial(std::span<const Streak> streaks, int w, int h,
                               std::span<double> cov);
void rasterize_coverage_parallel(std::span<const Streak> streaks, int w, int h,
                                 std::span<double> cov);

} // namespace rainbench::kernels
