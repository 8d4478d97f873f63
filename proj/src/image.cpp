#include "rainbench/image.hpp"

#include <cmath>
#include <string>

#include "rainbench/errors.hpp"
#include "rainbench/kernels.hpp"

namespace rainbench {

Image Image::create(int width, int height, int channels, std::uint8_t fill) {
    if (width <= 0 || height <= 0) {
        throw DataError("image dimensions must be positive, got " + std::to_string(width) +
                        "x" + std::to_string(height));
    }
    if (channels != 1 && channels != 3) {
        throw DataError("channel count must be 1 or 3, got " + std::to_string(channels));
    }
    Image img;
    img.width = width;
    img.height = height;
    img.channels = channels;
    img.pixels.assign(static_cast<std::size_t>(width) * height * channels, fill);
    return img;
}

Kernel gaussian_kernel(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidSigmaError("gaussian sigma must be positive and finite");
    }
    return gaussian_kernel(sigma, static_cast<int>(std::ceil(3.0 * sigma)));
}

Kernel gaussian_kernel(double sigma, int radius) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidSigmaError("gaussian sigma must be positive and finite");
    }
    if (radius < 0) {
        throw DataError("kernel radius must be >= 0");
    }
    Kernel k;
    k.radius = radius;
    k.weights.resize(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k.weights[i + radius] = w;
        sum += w;
    }
    for (double& w : k.weights) w /= sum;
    return k;
}

Kernel identity_kernel() { return Kernel{0, {1.0}}; }

Image to_luma(const Image& img) {
    if (img.channels == 1) return img;
    Image out = Image::create(img.width, img.height, 1);
    const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
    #pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::uint8_t* p = &img.pixels[static_cast<std::size_t>(i) * 3];
        out.pixels[i] = round_u8(0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]);
    }
    return out;
}

Image convolve_separable(const Image& img, const Kernel& k) {
    const std::size_t plane = static_cast<std::size_t>(img.width) * img.height;
    std::vector<double> src(plane), dst(plane);
    Image out = Image::create(img.width, img.height, img.channels);
    for (int c = 0; c < img.channels; ++c) {
        for (std::size_t i = 0; i < plane; ++i) {
            src[i] = img.pixels[i * img.channels + c];
        }
        kernels::convolve_plane_parallel(src, dst, img.width, img.height, k);
        for (std::size_t i = 0; i < plane; ++i) {
            out.pixels[i * img.channels + c] = round_u8(dst[i]);
        }
    }
    return out;
}

} // namespace rainbench
