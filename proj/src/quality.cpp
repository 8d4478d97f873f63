#include "rainbench/quality.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rainbench/errors.hpp"
#include "rainbench/kernels.hpp"

namespace rainbench {

namespace {

void require_same_shape(const Image& a, const Image& b) {
    if (!a.same_shape(b)) {
        throw DimensionMismatchError(
            "image shapes differ: " + std::to_string(a.width) + "x" + std::to_string(a.height) +
            "x" + std::to_string(a.channels) + " vs " + std::to_string(b.width) + "x" +
            std::to_string(b.height) + "x" + std::to_string(b.channels));
    }
}

Kernel ssim_window(const SsimParams& p) {
    if (p.window_radius == 0) return identity_kernel();
    return gaussian_kernel(p.window_sigma, p.window_radius);
}

} // namespace

double mse(const Image& a, const Image& b) {
    require_same_shape(a, b);
    return kernels::mse_parallel(a.pixels, b.pixels, a.width * a.channels, a.height);
}

double psnr(const Image& a, const Image& b, double max_i) {
    if (!(max_i > 0.0)) throw DataError("max_i must be positive");
    const double err = mse(a, b);
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(max_i * max_i / err);
}

double ssim(const Image& a, const Image& b, const SsimParams& p) {
    require_same_shape(a, b);
    const Image la = to_luma(a);
    const Image lb = to_luma(b);
    const Kernel window = ssim_window(p);
    const std::size_t n = static_cast<std::size_t>(la.width) * la.height;
    std::vector<double> map(n);
    kernels::ssim_map_parallel(la.pixels, lb.pixels, la.width, la.height, window, p.c1(),
                               p.c2(), map);
    // deterministic accumulation order, independent of the thread count
    double sum = 0.0;
    for (double v : map) sum += v;
    return sum / static_cast<double>(n);
}

QualityScore quality_score(const Image& a, const Image& b, const SsimParams& p) {
    QualityScore q;
    q.mse = mse(a, b);
    q.psnr_db = q.mse == 0.0 ? std::numeric_limits<double>::infinity()
                             : 10.0 * std::log10(p.dynamic_range * p.dynamic_range / q.mse);
    q.ssim = ssim(a, b, p);
    return q;
}

WindowStats window_stats(const Image& luma_a, const Image& luma_b, int cx, int cy,
                         const Kernel& window) {
    require_same_shape(luma_a, luma_b);
    if (luma_a.channels != 1) throw DataError("window_stats expects luma images");
    // single-pixel "map" evaluation so the stats share ssim's accumulation
    const int w = luma_a.width;
    const int h = luma_a.height;
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int dy = -window.radius; dy <= window.radius; ++dy) {
        const double wy = window.weights[dy + window.radius];
        const std::size_t row = static_cast<std::size_t>(mirror_index(cy + dy, h)) * w;
        for (int dx = -window.radius; dx <= window.radius; ++dx) {
            const double wgt = wy * window.weights[dx + window.radius];
            const std::size_t idx = row + mirror_index(cx + dx, w);
            const double va = luma_a.pixels[idx];
            const double vb = luma_b.pixels[idx];
            sx += wgt * va;
            sy += wgt * vb;
            sxx += wgt * va * va;
            syy += wgt * vb * vb;
            sxy += wgt * va * vb;
        }
    }
    WindowStats s;
    s.mu_x = sx;
    s.mu_y = sy;
    s.sigma_x = std::sqrt(std::max(0.0, sxx - sx * sx));
    s.sigma_y = std::sqrt(std::max(0.0, syy - sy * sy));
    s.sigma_xy = sxy - sx * sy;
    return s;
}

} // namespace rainbench
