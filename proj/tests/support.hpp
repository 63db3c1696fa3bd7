#pragma once

// Shared oracles and fixtures for the test suites. Everything here is
// implemented independently of the library code paths it is used to check.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "evotrans/image.hpp"

namespace testsupport {

// Exact Binomial(n, p) pmf by the multiplicative recurrence, in long double.
inline std::vector<long double> binomial_pmf(int64_t n, long double p) {
    std::vector<long double> pmf(static_cast<std::size_t>(n) + 1);
    pmf[0] = std::exp(static_cast<long double>(n) * std::log1p(-p));
    for (int64_t k = 0; k < n; ++k) {
        pmf[k + 1] = pmf[k] * (p / (1 - p)) *
                     static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
    return pmf;
}

// Chi-square statistic of observed counts against expected counts.
inline double chi_square(const std::vector<int64_t>& observed,
                         const std::vector<double>& expected) {
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double d = static_cast<double>(observed[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

// Upper 0.1% chi-square quantiles for small degrees of freedom.
inline double chi_square_crit_001(int df) {
    static constexpr double table[] = {10.828, 13.816, 16.266, 18.467, 20.515,
                                       22.458, 24.322, 26.124, 27.877, 29.588};
    return table[df - 1];
}

// Unique scratch directory, removed on destruction.
class TempDir {
  public:
    TempDir() {
        static std::mt19937_64 seq{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() /
                ("evotrans_test_" + std::to_string(seq()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string str(const std::string& name = "") const {
        return name.empty() ? path_.string() : (path_ / name).string();
    }

  private:
    std::filesystem::path path_;
};

// Image pair of the given size, every pixel differing, generated with a
// plain std::mt19937_64 (not the library Rng).
inline std::pair<evotrans::Image, evotrans::Image> differing_pair(
    int32_t rows, int32_t cols, uint64_t seed) {
    std::mt19937_64 gen(seed);
    evotrans::Image s(rows, cols);
    evotrans::Image t(rows, cols);
    for (int64_t i = 0; i < s.pixel_count(); ++i) {
        const uint64_t w = gen();
        evotrans::Pixel ps{static_cast<uint8_t>(w), static_cast<uint8_t>(w >> 8),
                           static_cast<uint8_t>(w >> 16)};
        evotrans::Pixel pt{static_cast<uint8_t>(w >> 24),
                           static_cast<uint8_t>(w >> 32),
                           static_cast<uint8_t>(w >> 40)};
        if (ps == pt) pt.b ^= 0x55;
        s.pixels()[i] = ps;
        t.pixels()[i] = pt;
    }
    return {std::move(s), std::move(t)};
}

}  // namespace testsupport
