#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace rainbench {

/// 8-bit raster image, row-major interleaved samples. channels is 1 (luma)
/// or 3 (RGB); there is no alpha and no other bit depth anywhere in the
/// toolkit.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> pixels;

    static Image create(int width, int height, int channels, std::uint8_t fill = 0);

    std::uint8_t& at(int x, int y, int c = 0) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t at(int x, int y, int c = 0) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const Image& other) const {
        return width == other.width && height == other.height && channels == other.channels;
    }

    bool operator==(const Image&) const = default;
};

/// Symmetric, normalized 1-D convolution kernel (weights sum to 1,
/// weights[i] == weights[-i], length 2*radius+1).
struct Kernel {
    int radius = 0;
    std::vector<double> weights;
};

/// Gaussian kernel with radius ceil(3*sigma). Throws InvalidSigma for
/// sigma <= 0 or non-finite sigma.
Kernel gaussian_kernel(double sigma);

/// Gaussian kernel with an explicit radius (used by SSIM, whose window
/// radius is a separate parameter). radius 0 yields the identity kernel.
Kernel gaussian_kernel(double sigma, int radius);

Kernel identity_kernel();

/// BT.601 luma, round-half-up to 8 bits. A 1-channel input passes through
/// unchanged.
Image to_luma(const Image& img);

/// Separable convolution: horizontal then vertical pass with mirror
/// (reflect-without-repeat) edges. Intermediates stay real-valued; rounding
/// to 8 bits happens once at the end.
Image convolve_separable(const Image& img, const Kernel& k);

/// Mirror (reflect-101) index fold, valid for any i and n >= 1.
inline int mirror_index(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * (n - 1);
    i = i % period;
    if (i < 0) i += period;
    return (i < n) ? i : period - i;
}

/// Round-half-up to the 8-bit range.
inline std::uint8_t round_u8(double v) {
    if (v <= 0.0) return 0;
    if (v >= 255.0) return 255;
    return static_cast<std::uint8_t>(v + 0.5);
}

} // namespace rainbench
