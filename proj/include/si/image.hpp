#pragma once

#include <cstdint>
#include <vector>

namespace si {

// 2D multi-channel grid, float32, channel-last, row-major (row = y).
// Indexing is 0-based throughout the code.
struct Image {
    int h = 0, w = 0, c = 0;
    std::vector<float> v;

    Image() = default;
    Image(int h_, int w_, int c_)
        : h(h_), w(w_), c(c_),
          v(static_cast<size_t>(h_) * w_ * c_, 0.0f) {}

    float& at(int y, int x, int ch) {
        return v[(static_cast<size_t>(y) * w + x) * c + ch];
    }
    float at(int y, int x, int ch) const {
        return v[(static_cast<size_t>(y) * w + x) * c + ch];
    }
    size_t size() const { return v.size(); }
    bool same_shape(const Image& o) const {
        return h == o.h && w == o.w && c == o.c;
    }
};

// 2D binary mask, row-major.
struct Mask {
    int h = 0, w = 0;
    std::vector<uint8_t> v;

    Mask() = default;
    Mask(int h_, int w_) : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, 0) {}

    uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
    uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
    size_t size() const { return v.size(); }

    int count() const {
        int n = 0;
        for (uint8_t b : v) n += b != 0;
        return n;
    }
    bool empty_mask() const { return count() == 0; }

    static Mask full(int h, int w) {
        Mask m(h, w);
        std::fill(m.v.begin(), m.v.end(), uint8_t{1});
        return m;
    }
};

// 2D integer label grid, values in 0..C.
struct LabelImage {
    int h = 0, w = 0;
    std::vector<uint8_t> v;

    LabelImage() = default;
    LabelImage(int h_, int w_)
        : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, 0) {}

    uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
    uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
    size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
};

// Intersection/union pixel counts for two same-shape masks.
int mask_intersection(const Mask& a, const Mask& b);
int mask_union(const Mask& a, const Mask& b);

}  // namespace si
