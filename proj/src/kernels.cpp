#include "rainbench/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

namespace rainbench::kernels {

namespace {

inline double tap_h(std::span<const double> row, int w, int x, const Kernel& k) {
    double acc = 0.0;
    for (int t = -k.radius; t <= k.radius; ++t) {
        acc += k.weights[t + k.radius] * row[mirror_index(x + t, w)];
    }
    return acc;
}

inline double tap_v(std::span<const double> plane, int w, int h, int x, int y,
                    const Kernel& k) {
    double acc = 0.0;
    for (int t = -k.radius; t <= k.radius; ++t) {
        acc += k.weights[t + k.radius] * plane[static_cast<std::size_t>(mirror_index(y + t, h)) * w + x];
    }
    return acc;
}

template <bool Parallel>
void convolve_plane_impl(std::span<const double> src, std::span<double> dst, int w, int h,
                         const Kernel& k) {
    assert(src.size() == static_cast<std::size_t>(w) * h);
    assert(dst.size() == src.size());
    std::vector<double> tmp(src.size());
    #pragma omp parallel for schedule(static) if (Parallel)
    for (int y = 0; y < h; ++y) {
        const auto row = src.subspan(static_cast<std::size_t>(y) * w, w);
        for (int x = 0; x < w; ++x) {
            tmp[static_cast<std::size_t>(y) * w + x] = tap_h(row, w, x, k);
        }
    }
    #pragma omp parallel for schedule(static) if (Parallel)
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            dst[static_cast<std::size_t>(y) * w + x] = tap_v(tmp, w, h, x, y, k);
        }
    }
}

template <bool Parallel>
double mse_impl(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                int samples_per_row, int rows) {
    assert(a.size() == b.size());
    assert(a.size() == static_cast<std::size_t>(samples_per_row) * rows);
    std::vector<double> partial(rows, 0.0);
    #pragma omp parallel for schedule(static) if (Parallel)
    for (int y = 0; y < rows; ++y) {
        const std::size_t base = static_cast<std::size_t>(y) * samples_per_row;
        double acc = 0.0;
        for (int i = 0; i < samples_per_row; ++i) {
            const double d = static_cast<double>(a[base + i]) - static_cast<double>(b[base + i]);
            acc += d * d;
        }
        partial[y] = acc;
    }
    double total = 0.0;
    for (int y = 0; y < rows; ++y) total += partial[y];
    return total / (static_cast<double>(samples_per_row) * rows);
}

struct WindowAccum {
    double mu_x, mu_y, var_x, var_y, cov;
};

inline WindowAccum accumulate_window(std::span<const std::uint8_t> a,
                                     std::span<const std::uint8_t> b, int w, int h, int cx,
                                     int cy, const Kernel& window) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int dy = -window.radius; dy <= window.radius; ++dy) {
        const double wy = window.weights[dy + window.radius];
        const std::size_t row = static_cast<std::size_t>(mirror_index(cy + dy, h)) * w;
        for (int dx = -window.radius; dx <= window.radius; ++dx) {
            const double wgt = wy * window.weights[dx + window.radius];
            const std::size_t idx = row + mirror_index(cx + dx, w);
            const double va = a[idx];
            const double vb = b[idx];
            sx += wgt * va;
            sy += wgt * vb;
            sxx += wgt * va * va;
            syy += wgt * vb * vb;
            sxy += wgt * va * vb;
        }
    }
    WindowAccum acc;
    acc.mu_x = sx;
    acc.mu_y = sy;
    acc.var_x = std::max(0.0, sxx - sx * sx);
    acc.var_y = std::max(0.0, syy - sy * sy);
    acc.cov = sxy - sx * sy;
    return acc;
}

inline double ssim_from_accum(const WindowAccum& s, double c1, double c2) {
    const double num = (2.0 * s.mu_x * s.mu_y + c1) * (2.0 * s.cov + c2);
    const double den = (s.mu_x * s.mu_x + s.mu_y * s.mu_y + c1) * (s.var_x + s.var_y + c2);
    return num / den;
}

template <bool Parallel>
void ssim_map_impl(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int w,
                   int h, const Kernel& window, double c1, double c2, std::span<double> out) {
    assert(out.size() == static_cast<std::size_t>(w) * h);
    #pragma omp parallel for schedule(static) if (Parallel)
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const WindowAccum acc = accumulate_window(a, b, w, h, x, y, window);
            out[static_cast<std::size_t>(y) * w + x] = ssim_from_accum(acc, c1, c2);
        }
    }
}

struct StreakBounds {
    int x_lo, x_hi, y_lo, y_hi;  // inclusive pixel range, clamped to the image
};

inline StreakBounds streak_bounds(const Streak& s, int w, int h) {
    const double margin = s.half_w + 0.5;
    StreakBounds b;
    b.x_lo = std::max(0, static_cast<int>(std::floor(std::min(s.x0, s.x1) - margin)));
    b.x_hi = std::min(w - 1, static_cast<int>(std::ceil(std::max(s.x0, s.x1) + margin)));
    b.y_lo = std::max(0, static_cast<int>(std::floor(std::min(s.y0, s.y1) - margin)));
    b.y_hi = std::min(h - 1, static_cast<int>(std::ceil(std::max(s.y0, s.y1) + margin)));
    return b;
}

/// Distance from point (px, py) to the segment, then a 1-px linear
/// anti-aliasing ramp around the streak's half-width.
inline double streak_coverage(const Streak& s, double px, double py) {
    const double vx = s.x1 - s.x0;
    const double vy = s.y1 - s.y0;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = std::clamp(((px - s.x0) * vx + (py - s.y0) * vy) / len2, 0.0, 1.0);
    }
    const double dx = px - (s.x0 + t * vx);
    const double dy = py - (s.y0 + t * vy);
    const double dist = std::sqrt(dx * dx + dy * dy);
    return std::clamp(s.half_w + 0.5 - dist, 0.0, 1.0);
}

inline void max_in(double& slot, double v) {
    if (v > slot) slot = v;
}

} // namespace

void convolve_plane_serial(std::span<const double> src, std::span<double> dst, int w, int h,
                           const Kernel& k) {
    convolve_plane_impl<false>(src, dst, w, h, k);
}

void convolve_plane_parallel(std::span<const double> src, std::span<double> dst, int w, int h,
                             const Kernel& k) {
    convolve_plane_impl<true>(src, dst, w, h, k);
}

double mse_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                  int samples_per_row, int rows) {
    return mse_impl<false>(a, b, samples_per_row, rows);
}

double mse_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                    int samples_per_row, int rows) {
    return mse_impl<true>(a, b, samples_per_row, rows);
}

void ssim_map_serial(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int w,
                     int h, const Kernel& window, double c1, double c2, std::span<double> out) {
    ssim_map_impl<false>(a, b, w, h, window, c1, c2, out);
}

void ssim_map_parallel(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int w,
                       int h, const Kernel& window, double c1, double c2,
                       std::span<double> out) {
    ssim_map_impl<true>(a, b, w, h, window, c1, c2, out);
}

void rasterize_coverage_serial(std::span<const Streak> streaks, int w, int h,
                               std::span<double> cov) {
    assert(cov.size() == static_cast<std::size_t>(w) * h);
    for (const Streak& s : streaks) {
        const StreakBounds b = streak_bounds(s, w, h);
        for (int y = b.y_lo; y <= b.y_hi; ++y) {
            for (int x = b.x_lo; x <= b.x_hi; ++x) {
                max_in(cov[static_cast<std::size_t>(y) * w + x],
                       streak_coverage(s, x + 0.5, y + 0.5));
            }
        }
    }
}

void rasterize_coverage_parallel(std::span<const Streak> streaks, int w, int h,
                                 std::span<double> cov) {
    assert(cov.size() == static_cast<std::size_t>(w) * h);
    // Bin streaks by the rows they touch, then hand out rows. Coverage
    // combines by max, so the result matches the streak-order walk exactly.
    std::vector<StreakBounds> bounds(streaks.size());
    std::vector<std::vector<std::uint32_t>> rows(h);
    for (std::size_t i = 0; i < streaks.size(); ++i) {
        bounds[i] = streak_bounds(streaks[i], w, h);
        for (int y = bounds[i].y_lo; y <= bounds[i].y_hi; ++y) {
            rows[y].push_back(static_cast<std::uint32_t>(i));
        }
    }
    #pragma omp parallel for schedule(dynamic, 8)
    for (int y = 0; y < h; ++y) {
        for (std::uint32_t i : rows[y]) {
            for (int x = bounds[i].x_lo; x <= bounds[i].x_hi; ++x) {
                max_in(cov[static_cast<std::size_t>(y) * w + x],
                       streak_coverage(streaks[i], x + 0.5, y + 0.5));
            }
        }
    }
}

} // namespace rainbench::kernels
