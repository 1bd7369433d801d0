#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace storyeval {

/// 8-bit single-channel raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

/// 2-D boolean foreground/background grid, row-major. One character region.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // 0 = background, 1 = foreground

    BinaryMask() = default;
    BinaryMask(int w, int h); // throws DomainError unless w,h >= 1

    bool at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x] != 0;
    }
    void set(int x, int y, bool fg) {
        data[static_cast<std::size_t>(y) * width + x] = fg ? 1 : 0;
    }
    std::size_t pixel_count() const { return data.size(); }
    bool same_shape(const BinaryMask& o) const {
        return width == o.width && height == o.height;
    }
    bool empty_foreground() const { return foreground_count() == 0; }
    std::int64_t foreground_count() const;
};

struct ContourPoint {
    int x = 0; // column
    int y = 0; // row
    friend bool operator==(const ContourPoint&, const ContourPoint&) = default;
};

/// Boundary pixels of a mask. Points are unique and in row-major order;
/// empty iff the source mask has no foreground.
struct ContourPointSet {
    std::vector<ContourPoint> points;
    int source_width = 0;
    int source_height = 0;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

struct OverlapResult {
    std::int64_t intersection = 0;
    std::int64_t union_count = 0;
    std::int64_t size_a = 0;
    std::int64_t size_b = 0;
    double dice = 0.0;
    double iou = 0.0;
};

struct MeanOverlap {
    double mean_dice = 0.0;
    double mean_iou = 0.0;
};

/// Inner 4-connectivity boundary: exactly the foreground pixels with at
/// least one 4-neighbor that is background or outside the image.
ContourPointSet extract_contour(const BinaryMask& mask);

/// Pixel overlap counts plus Dice and IoU. Two empty masks score as
/// vacuous perfect agreement (dice = iou = 1). Throws DimensionMismatch.
OverlapResult overlap(const BinaryMask& a, const BinaryMask& b);

/// Arithmetic means of per-pair Dice and IoU, accumulated left to right.
/// Throws EmptyInput, DimensionMismatch (message names the pair index).
MeanOverlap mean_overlap(const std::vector<std::pair<BinaryMask, BinaryMask>>& pairs);

} // namespace storyeval
