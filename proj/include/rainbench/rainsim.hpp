#pragma once

#include <cstdint>
#include <vector>

#include "rainbench/image.hpp"

namespace rainbench {

/// Linear rainfall law: rainfall_mm_h = slope * droplet_count + intercept.
struct RainMapping {
    double slope = 0.03;       // mm/h per droplet
    double intercept = 3.88;   // mm/h
};

/// Photometric and geometric appearance of one synthetic droplet streak.
/// Angles are radians from vertical.
struct DropletStyle {
    double length_mean = 12.0;   // px
    double length_jitter = 4.0;  // px
    double width = 1.5;          // px
    double angle_mean = 0.0;
    double angle_jitter = 0.08;
    double opacity = 0.35;       // (0, 1]
    double brightness = 220.0;   // additive 8-bit target
    double blur_sigma = 0.8;     // defocus blur of the streak layer, 0 = none
};

struct Droplet {
    double cx, cy;    // px, within the generating image bounds
    double length;    // px
    double angle;     // rad from vertical
    double width;     // px
    double opacity;
};

struct RaindropField {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<Droplet> droplets;
};

/// Droplet count for a rainfall rate, inverting the linear law and rounding
/// to the nearest integer. Rates below the intercept clamp to zero and set
/// below_model_domain (a warning, not an error).
struct DropletCount {
    int count = 0;
    bool below_model_domain = false;
};
DropletCount rainfall_to_droplets(double omega_mm_h, const RainMapping& m = {});

double droplets_to_rainfall(int n, const RainMapping& m = {});

/// Exactly `count` droplets sampled from splitmix64 seeded by `seed`:
/// centers uniform over the image rectangle, lengths and angles uniform in
/// mean +- jitter. Per droplet the draw order is cx, cy, length, angle.
RaindropField generate_field(int count, std::uint64_t seed, const DropletStyle& style,
                             int width, int height);

/// Rasterizes each droplet as an anti-aliased streak into a coverage layer
/// (max-combined), blurs the layer with gaussian_kernel(blur_sigma), and
/// alpha-blends: out = (1 - opacity*cov) * in + opacity*cov * brightness per
/// channel. Deterministic across runs and thread counts; an empty field
/// returns the input bit-exactly. Throws NotRgb for 1-channel input.
Image composite(const Image& img, const RaindropField& field, const DropletStyle& style);

} // namespace rainbench
