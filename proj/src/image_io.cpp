#include "aitv/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

#include <png.h>

#include "aitv/errors.hpp"

namespace aitv {

namespace {

struct FileHandle {
    std::FILE* f = nullptr;
    explicit FileHandle(const std::string& path, const char* mode)
        : f(std::fopen(path.c_str(), mode)) {}
    ~FileHandle() {
        if (f) std::fclose(f);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
};

struct Bytes {
    int rows = 0;
    int cols = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;  // row-major, interleaved channels
};

Bytes read_png_bytes(const std::string& path) {
    FileHandle file(path, "rb");
    if (!file.f) throw io_error("cannot open " + path + " for reading");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error("libpng initialization failed");
    }
    Bytes out;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error("failed to decode " + path);
    }
    png_init_io(png, file.f);
    png_read_png(png, info,
                 PNG_TRANSFORM_STRIP_16 | PNG_TRANSFORM_STRIP_ALPHA |
                     PNG_TRANSFORM_PACKING | PNG_TRANSFORM_EXPAND,
                 nullptr);
    out.cols = static_cast<int>(png_get_image_width(png, info));
    out.rows = static_cast<int>(png_get_image_height(png, info));
    out.channels = png_get_channels(png, info);
    if (out.channels != 1 && out.channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw io_error(path + " decodes to " + std::to_string(out.channels) +
                       " channels; expected gray or rgb");
    }
    png_bytepp row_ptrs = png_get_rows(png, info);
    out.data.resize(static_cast<std::size_t>(out.rows) * out.cols * out.channels);
    const std::size_t stride = static_cast<std::size_t>(out.cols) * out.channels;
    for (int i = 0; i < out.rows; ++i)
        std::copy(row_ptrs[i], row_ptrs[i] + stride, out.data.begin() + i * stride);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

void write_png_bytes(const std::string& path, const Bytes& img) {
    if (img.rows < 1 || img.cols < 1)
        throw std::invalid_argument("png write needs a nonempty image");
    FileHandle file(path, "wb");
    if (!file.f) throw io_error("cannot open " + path + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw io_error("libpng initialization failed");
    }
    std::vector<png_bytep> row_ptrs(img.rows);
    const std::size_t stride = static_cast<std::size_t>(img.cols) * img.channels;
    for (int i = 0; i < img.rows; ++i)
        row_ptrs[i] = const_cast<png_bytep>(img.data.data() + i * stride);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw io_error("failed to encode " + path);
    }
    png_init_io(png, file.f);
    png_set_IHDR(png, info, img.cols, img.rows, 8,
                 img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_set_rows(png, info, row_ptrs.data());
    png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::uint8_t quantize(double v) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(clamped * 255.0));
}

} // namespace

Image read_png(const std::string& path, bool force_grayscale) {
    const Bytes raw = read_png_bytes(path);
    Image img;
    if (raw.channels == 1 || force_grayscale) {
        img.ch.emplace_back(raw.rows, raw.cols, 0.0);
    } else {
        for (int ch = 0; ch < 3; ++ch) img.ch.emplace_back(raw.rows, raw.cols, 0.0);
    }
    const std::size_t pixels = static_cast<std::size_t>(raw.rows) * raw.cols;
    if (raw.channels == 1) {
        for (std::size_t i = 0; i < pixels; ++i) img.ch[0].v[i] = raw.data[i] / 255.0;
    } else if (force_grayscale) {
        for (std::size_t i = 0; i < pixels; ++i)
            img.ch[0].v[i] = (0.299 * raw.data[3 * i] + 0.587 * raw.data[3 * i + 1] +
                              0.114 * raw.data[3 * i + 2]) /
                             255.0;
    } else {
        for (std::size_t i = 0; i < pixels; ++i)
            for (int ch = 0; ch < 3; ++ch)
                img.ch[ch].v[i] = raw.data[3 * i + ch] / 255.0;
    }
    return img;
}

void write_png(const std::string& path, const Image& img) {
    if (img.channels() != 1 && img.channels() != 3)
        throw std::invalid_argument("png write needs 1 or 3 channels, got " +
                                    std::to_string(img.channels()));
    Bytes raw;
    raw.rows = img.rows();
    raw.cols = img.cols();
    raw.channels = img.channels();
    const std::size_t pixels = static_cast<std::size_t>(raw.rows) * raw.cols;
    raw.data.resize(pixels * raw.channels);
    for (std::size_t i = 0; i < pixels; ++i)
        for (int ch = 0; ch < raw.channels; ++ch)
            raw.data[i * raw.channels + ch] = quantize(img.ch[ch].v[i]);
    write_png_bytes(path, raw);
}

void write_png(const std::string& path, const ScalarField& gray) {
    write_png(path, Image(gray));
}

int label_gray_level(int ell, int num_regions) {
    if (num_regions < 1 || num_regions > 256)
        throw std::invalid_argument("label maps support 1..256 regions");
    if (ell < 1 || ell > num_regions)
        throw std::invalid_argument("label " + std::to_string(ell) + " outside 1.." +
                                    std::to_string(num_regions));
    if (num_regions == 1) return 0;
    return static_cast<int>(std::lround((ell - 1) * 255.0 / (num_regions - 1)));
}

void write_label_png(const std::string& path, const LabelMap& labels, int num_regions) {
    Bytes raw;
    raw.rows = labels.rows;
    raw.cols = labels.cols;
    raw.channels = 1;
    raw.data.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        raw.data[i] = static_cast<std::uint8_t>(label_gray_level(labels.v[i], num_regions));
    write_png_bytes(path, raw);
}

LabelMap read_label_png(const std::string& path, int num_regions) {
    if (num_regions < 1 || num_regions > 256)
        throw std::invalid_argument("label maps support 1..256 regions");
    const Bytes raw = read_png_bytes(path);
    if (raw.channels != 1)
        throw io_error(path + " is not a grayscale label map");
    std::vector<int> level_to_label(256, 0);
    for (int ell = 1; ell <= num_regions; ++ell)
        level_to_label[label_gray_level(ell, num_regions)] = ell;
    LabelMap labels(raw.rows, raw.cols);
    for (std::size_t i = 0; i < raw.data.size(); ++i) {
        const int ell = level_to_label[raw.data[i]];
        if (ell == 0)
            throw io_error(path + " holds gray level " + std::to_string(raw.data[i]) +
                           ", not a label level for " + std::to_string(num_regions) +
                           " regions");
        labels.v[i] = ell;
    }
    return labels;
}

} // namespace aitv
