#include "rainbench/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include <png.h>

#include "rainbench/errors.hpp"

namespace rainbench {

namespace {

std::string path_str(const std::filesystem::path& p) { return p.string(); }

// --- PPM / PGM ---------------------------------------------------------------

/// Reads one whitespace-delimited header token, skipping '#' comments.
std::string next_pnm_token(std::istream& in, const std::filesystem::path& path) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    if (tok.empty()) {
        throw CorruptDataError("truncated PNM header in " + path_str(path));
    }
    return tok;
}

int parse_pnm_int(const std::string& tok, const std::filesystem::path& path) {
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw CorruptDataError("bad PNM header token '" + tok + "' in " + path_str(path));
        }
    }
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw CorruptDataError("PNM header value out of range in " + path_str(path));
    }
}

Image load_pnm(std::ifstream& in, const std::filesystem::path& path, int channels) {
    in.ignore(2);  // magic, already inspected
    const int width = parse_pnm_int(next_pnm_token(in, path), path);
    const int height = parse_pnm_int(next_pnm_token(in, path), path);
    const int maxval = parse_pnm_int(next_pnm_token(in, path), path);
    if (width <= 0 || height <= 0) {
        throw CorruptDataError("non-positive PNM dimensions in " + path_str(path));
    }
    if (maxval != 255) {
        throw UnsupportedFormatError("only 8-bit PNM (maxval 255) is supported, got maxval " +
                                     std::to_string(maxval) + " in " + path_str(path));
    }
    // exactly one whitespace byte separates the header from the raster
    Image img = Image::create(width, height, channels);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
        throw CorruptDataError("truncated PNM raster in " + path_str(path));
    }
    return img;
}

void save_pnm(const Image& img, const std::filesystem::path& path, bool color) {
    if (color && img.channels != 3) {
        throw UnsupportedFormatError("PPM requires a 3-channel image");
    }
    if (!color && img.channels != 1) {
        throw UnsupportedFormatError("PGM requires a 1-channel image");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path_str(path) + " for writing");
    out << (color ? "P6" : "P5") << "\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw IoError("write failed for " + path_str(path));
}

// --- PNG ----------------------------------------------------------------------

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

Image load_png(const std::filesystem::path& path) {
    PngReader r;
    Image img;
    std::vector<png_bytep> row_ptrs;  // constructed before setjmp so a libpng
                                      // longjmp-then-throw unwinds them cleanly
    r.fp = std::fopen(path_str(path).c_str(), "rb");
    if (!r.fp) throw FileNotFoundError("cannot open " + path_str(path));
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("png_create_read_struct failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(r.png))) {
        throw CorruptDataError("corrupt PNG data in " + path_str(path));
    }
    png_init_io(r.png, r.fp);
    png_read_info(r.png, r.info);

    const png_uint_32 width = png_get_image_width(r.png, r.info);
    const png_uint_32 height = png_get_image_height(r.png, r.info);
    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);

    if (bit_depth != 8) {
        throw UnsupportedFormatError("only 8-bit PNG is supported, got bit depth " +
                                     std::to_string(bit_depth) + " in " + path_str(path));
    }
    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        throw UnsupportedFormatError("palette PNG is not supported: " + path_str(path));
    }
    if (color_type == PNG_COLOR_TYPE_RGB_ALPHA || color_type == PNG_COLOR_TYPE_GRAY_ALPHA ||
        png_get_valid(r.png, r.info, PNG_INFO_tRNS)) {
        throw UnsupportedFormatError("PNG with alpha is not supported: " + path_str(path));
    }
    int channels;
    if (color_type == PNG_COLOR_TYPE_GRAY) {
        channels = 1;
    } else if (color_type == PNG_COLOR_TYPE_RGB) {
        channels = 3;
    } else {
        throw UnsupportedFormatError("unsupported PNG color type in " + path_str(path));
    }

    png_set_interlace_handling(r.png);
    png_read_update_info(r.png, r.info);

    img = Image::create(static_cast<int>(width), static_cast<int>(height), channels);
    row_ptrs.resize(height);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (png_uint_32 y = 0; y < height; ++y) {
        row_ptrs[y] = img.pixels.data() + y * stride;
    }
    png_read_image(r.png, row_ptrs.data());
    png_read_end(r.png, nullptr);
    return img;
}

void save_png(const Image& img, const std::filesystem::path& path) {
    PngWriter w;
    std::vector<png_bytep> row_ptrs(img.height);
    w.fp = std::fopen(path_str(path).c_str(), "wb");
    if (!w.fp) throw IoError("cannot open " + path_str(path) + " for writing");
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!w.png) throw IoError("png_create_write_struct failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw IoError("png_create_info_struct failed");
    if (setjmp(png_jmpbuf(w.png))) {
        throw IoError("PNG write failed for " + path_str(path));
    }
    png_init_io(w.png, w.fp);
    // fixed settings keep the encoded bytes reproducible run to run
    png_set_compression_level(w.png, 6);
    png_set_IHDR(w.png, w.info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
    for (int y = 0; y < img.height; ++y) {
        row_ptrs[y] = const_cast<png_bytep>(img.pixels.data() + y * stride);
    }
    png_write_image(w.png, row_ptrs.data());
    png_write_end(w.png, nullptr);
}

} // namespace

Image load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFoundError("no such file: " + path_str(path));
    }
    char magic[8] = {};
    in.read(magic, sizeof magic);
    const auto got = in.gcount();
    in.clear();
    in.seekg(0);

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        in.close();
        return load_png(path);
    }
    if (got >= 2 && magic[0] == 'P' && magic[1] == '6') {
        return load_pnm(in, path, 3);
    }
    if (got >= 2 && magic[0] == 'P' && magic[1] == '5') {
        return load_pnm(in, path, 1);
    }
    throw UnsupportedFormatError("not a PNG, PPM (P6) or PGM (P5) file: " + path_str(path));
}

void save_image(const Image& img, const std::filesystem::path& path, ImageFormat format) {
    switch (format) {
        case ImageFormat::Png: save_png(img, path); break;
        case ImageFormat::Ppm: save_pnm(img, path, true); break;
        case ImageFormat::Pgm: save_pnm(img, path, false); break;
    }
}

ImageFormat format_from_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png") return ImageFormat::Png;
    if (ext == ".ppm") return ImageFormat::Ppm;
    if (ext == ".pgm") return ImageFormat::Pgm;
    throw UnsupportedFormatError("unrecognized image extension: " + path.string());
}

} // namespace rainbench
