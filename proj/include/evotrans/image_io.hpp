#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evotrans/image.hpp"

namespace evotrans {

// Decodes a raster file (PNG, PPM P6 or PGM P5, sniffed by magic) into an
// 8-bit RGB image. Grayscale inputs are promoted to RGB; alpha, palette,
// 16-bit and interlaced inputs are rejected with a ConfigError naming the
// reason; unreadable or corrupt files raise IoError.
Image decode_image(const std::string& path);

// Buffer-level entry point; `origin` labels error messages.
Image decode_image_buffer(const std::vector<uint8_t>& bytes,
                          const std::string& origin);

// Encodes as an RGB8 PNG with stored (uncompressed) deflate blocks. The
// byte stream depends only on the pixels, never on a compressor version, so
// repeated runs are byte-identical.
std::vector<uint8_t> encode_png(const Image& image);

void write_png(const std::string& path, const Image& image);

// Assembles same-sized frames into an animated PNG (loops forever) with a
// per-frame delay of delay_num/delay_den seconds.
std::vector<uint8_t> encode_apng(const std::vector<Image>& frames,
                                 uint16_t delay_num, uint16_t delay_den);

void write_apng(const std::string& path, const std::vector<Image>& frames,
                uint16_t delay_num, uint16_t delay_den);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<uint8_t>& bytes);

}  // namespace evotrans
