#pragma once

#include <filesystem>

#include "rainbench/image.hpp"

namespace rainbench {

enum class ImageFormat { Png, Ppm, Pgm };

/// Loads an 8-bit PNG, binary PPM (P6) or binary PGM (P5); the format is
/// detected from the file's magic bytes, not the extension.
/// Throws FileNotFound, UnsupportedFormat (16-bit, palette, alpha) or
/// CorruptData.
Image load_image(const std::filesystem::path& path);

/// Writes img in the given format. PPM requires 3 channels, PGM requires 1;
/// PNG takes either. save followed by load round-trips pixel buffers
/// bit-exactly.
void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format);

/// Format implied by a file extension (.png/.ppm/.pgm, case-insensitive).
ImageFormat format_from_extension(const std::filesystem::path& path);

} // namespace rainbench
