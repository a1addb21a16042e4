#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace holochroma {

/// Three-channel planar-linear image. Pixel values carry no transfer
/// function; `space` names the color space the triples live in ("XYZ",
/// a calibrated space name such as "Holo" or "sRGB", or "raw" for
/// camera-native data).
struct LinearImage {
    int width = 0;
    int height = 0;
    std::string space;
    std::vector<double> data;  // interleaved RGB, row-major

    LinearImage() = default;
    LinearImage(int w, int h, std::string space_tag)
        : width(w), height(h), space(std::move(space_tag)),
          data(static_cast<size_t>(w) * h * 3, 0.0) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("LinearImage: dimensions must be positive");
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    double& at(int x, int y, int c) {
        return data[(static_cast<size_t>(y) * width + x) * 3 + c];
    }
    double at(int x, int y, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * 3 + c];
    }

    bool same_shape(const LinearImage& o) const {
        return width == o.width && height == o.height;
    }
};

inline void require_same_shape(const LinearImage& a, const LinearImage& b,
                               const char* what) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(what) + ": image shapes differ");
}

}  // namespace holochroma
