#include "evotrans/image.hpp"

#include <cstdlib>
#include <string>

namespace evotrans {

namespace {

void require_dims(int32_t rows, int32_t cols) {
    if (rows < 1 || cols < 1) {
        throw ConfigError("image dimensions must be at least 1x1, got " +
                          std::to_string(cols) + "x" + std::to_string(rows));
    }
}

}  // namespace

Image::Image(int32_t rows, int32_t cols, Pixel fill) {
    require_dims(rows, cols);
    dims_ = {rows, cols};
    px_.assign(dims_.pixel_count(), fill);
}

Image::Image(int32_t rows, int32_t cols, std::vector<Pixel> pixels) {
    require_dims(rows, cols);
    dims_ = {rows, cols};
    if (static_cast<int64_t>(pixels.size()) != dims_.pixel_count()) {
        throw ConfigError("pixel buffer size " + std::to_string(pixels.size()) +
                          " does not match " + std::to_string(cols) + "x" +
                          std::to_string(rows));
    }
    px_ = std::move(pixels);
}

std::array<Position, 4> torus_neighbors(Position p, Dims dims) {
    const int32_t m = dims.rows;
    const int32_t n = dims.cols;
    const int32_t up = (p.row + m - 1) % m;
    const int32_t down = (p.row + 1) % m;
    const int32_t left = (p.col + n - 1) % n;
    const int32_t right = (p.col + 1) % n;
    return {Position{up, p.col}, Position{down, p.col},
            Position{p.row, left}, Position{p.row, right}};
}

int32_t color_distance(const Image& target, Position from, Position to) {
    const Pixel& a = target.at(from);
    const Pixel& b = target.at(to);
    return std::abs(int32_t{a.r} - int32_t{b.r}) +
           std::abs(int32_t{a.g} - int32_t{b.g}) +
           std::abs(int32_t{a.b} - int32_t{b.b});
}

}  // namespace evotrans
