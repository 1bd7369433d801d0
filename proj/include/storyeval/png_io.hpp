#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "storyeval/mask.hpp"

namespace storyeval {

/// Decode a PNG (grayscale, grayscale+alpha, RGB or RGBA; 8 or 16 bit) to
/// 8-bit luminance. Color images use the integer average of R, G and B;
/// 16-bit samples are scaled to 8 bit (round(v * 255 / 65535)); alpha is
/// ignored. Throws DecodeError on malformed input and UnsupportedFormat on
/// palette or low-bit-depth images.
GrayImage decode_png_luminance(const std::uint8_t* bytes, std::size_t size);

/// Threshold decoded luminance at >127 into a foreground mask.
BinaryMask load_mask(const std::uint8_t* png_bytes, std::size_t size);
BinaryMask load_mask(const std::vector<std::uint8_t>& png_bytes);

/// Read a PNG file from disk and threshold it. Throws FileError if the
/// file cannot be read.
BinaryMask load_mask_file(const std::string& path);

} // namespace storyeval
