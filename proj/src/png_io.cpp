#include "si/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "si/errors.hpp"

namespace si::pngio {
namespace {

struct FileCloser {
    FILE* f;
    ~FileCloser() {
        if (f) std::fclose(f);
    }
};

}  // namespace

void write_gray8(const std::string& path, int h, int w,
                 const std::vector<uint8_t>& pixels) {
    if (static_cast<size_t>(h) * w != pixels.size())
        throw DomainError("write_gray8: pixel count does not match dims");
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot write PNG: " + path);
    FileCloser closer{f};

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng error while writing: " + path);
    }
    png_init_io(png, f);
    png_set_IHDR(png, info, static_cast<png_uint_32>(w),
                 static_cast<png_uint_32>(h), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < h; ++y)
        png_write_row(png, const_cast<png_bytep>(
                               &pixels[static_cast<size_t>(y) * w]));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_panel(const std::string& path, const std::vector<Image>& panels,
                 int channel) {
    if (panels.empty()) throw DomainError("write_panel: no panels");
    const int h = panels[0].h;
    const int sep = 2;
    int total_w = 0;
    for (const auto& p : panels) total_w += p.w;
    total_w += sep * (static_cast<int>(panels.size()) - 1);

    std::vector<uint8_t> out(static_cast<size_t>(h) * total_w, 255);
    int x0 = 0;
    for (const auto& p : panels) {
        if (p.h != h) throw DomainError("write_panel: panel height mismatch");
        const int ch = std::min(channel, p.c - 1);
        float lo = p.v.empty() ? 0.0f : p.at(0, 0, ch), hi = lo;
        for (int y = 0; y < p.h; ++y)
            for (int x = 0; x < p.w; ++x) {
                lo = std::min(lo, p.at(y, x, ch));
                hi = std::max(hi, p.at(y, x, ch));
            }
        const float range = hi - lo > 1e-12f ? hi - lo : 1.0f;
        for (int y = 0; y < p.h; ++y)
            for (int x = 0; x < p.w; ++x) {
                const float v = (p.at(y, x, ch) - lo) / range;
                out[static_cast<size_t>(y) * total_w + x0 + x] =
                    static_cast<uint8_t>(std::lround(255.0f * v));
            }
        x0 += p.w + sep;
    }
    write_gray8(path, h, total_w, out);
}

void write_histogram(const std::string& path, const std::vector<long>& counts,
                     int height, int bar_width) {
    const int n = static_cast<int>(counts.size());
    if (n == 0) throw DomainError("write_histogram: empty counts");
    const long peak = std::max<long>(1, *std::max_element(counts.begin(),
                                                          counts.end()));
    const int w = n * bar_width + n + 1;
    std::vector<uint8_t> img(static_cast<size_t>(height) * w, 255);
    for (int i = 0; i < n; ++i) {
        const int bar_h = static_cast<int>(
            std::lround(static_cast<double>(counts[static_cast<size_t>(i)]) /
                        static_cast<double>(peak) * (height - 2)));
        const int x0 = 1 + i * (bar_width + 1);
        for (int y = height - bar_h; y < height; ++y)
            for (int x = x0; x < x0 + bar_width; ++x)
                img[static_cast<size_t>(y) * w + x] = 40;
    }
    write_gray8(path, height, w, img);
}

}  // namespace si::pngio
