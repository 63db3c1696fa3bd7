#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "evotrans/errors.hpp"

namespace evotrans {

struct Pixel {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Grid coordinate, 0-based. The CLI converts user-facing 1-based coordinates
// at its boundary.
struct Position {
    int32_t row = 0;
    int32_t col = 0;

    friend bool operator==(const Position&, const Position&) = default;
};

struct Dims {
    int32_t rows = 0;
    int32_t cols = 0;

    int64_t pixel_count() const { return static_cast<int64_t>(rows) * cols; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

// 8-bit RGB raster, row-major. Both dimensions must be at least 1.
class Image {
  public:
    Image() = default;
    Image(int32_t rows, int32_t cols, Pixel fill = {});
    Image(int32_t rows, int32_t cols, std::vector<Pixel> pixels);

    int32_t rows() const { return dims_.rows; }
    int32_t cols() const { return dims_.cols; }
    Dims dims() const { return dims_; }
    int64_t pixel_count() const { return dims_.pixel_count(); }

    Pixel& at(int32_t row, int32_t col) { return px_[index(row, col)]; }
    const Pixel& at(int32_t row, int32_t col) const { return px_[index(row, col)]; }
    Pixel& at(Position p) { return at(p.row, p.col); }
    const Pixel& at(Position p) const { return at(p.row, p.col); }

    int64_t index(int32_t row, int32_t col) const {
        return static_cast<int64_t>(row) * dims_.cols + col;
    }

    const std::vector<Pixel>& pixels() const { return px_; }
    std::vector<Pixel>& pixels() { return px_; }

    friend bool operator==(const Image&, const Image&) = default;

  private:
    Dims dims_;
    std::vector<Pixel> px_;
};

// The four torus neighbours of p in the fixed order up, down, left, right,
// reduced modulo the grid. On grids with a dimension <= 2 the same position
// can occupy several slots; it keeps that multiplicity when sampled.
std::array<Position, 4> torus_neighbors(Position p, Dims dims);

// Sum over the three channels of the absolute difference between the target
// image's pixels at `from` and `to`; the biased walk's move weight.
// Range [0, 765].
int32_t color_distance(const Image& target, Position from, Position to);

}  // namespace evotrans
