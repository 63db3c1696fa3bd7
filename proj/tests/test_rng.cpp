#include <doctest.h>

#include <cmath>

#include "evotrans/rng.hpp"
#include "support.hpp"

using namespace evotrans;

TEST_CASE("same seed replays the same stream") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("scripted words are served first, then the fallback engine") {
    Rng plain(7);
    const uint64_t first_engine_word = plain.next_u64();
    Rng scripted = Rng::scripted({11, 22, 33}, 7);
    CHECK(scripted.next_u64() == 11);
    CHECK(scripted.next_u64() == 22);
    CHECK(scripted.next_u64() == 33);
    CHECK(scripted.next_u64() == first_engine_word);
}

TEST_CASE("uniform_index stays in range and word_for_index inverts it") {
    Rng rng(1);
    for (const uint64_t n : {1ull, 2ull, 3ull, 4ull, 17ull, 40000ull}) {
        for (int i = 0; i < 200; ++i) CHECK(rng.uniform_index(n) < n);
        for (uint64_t k = 0; k < std::min<uint64_t>(n, 8); ++k) {
            Rng s = Rng::scripted({word_for_index(k, n)});
            CHECK(s.uniform_index(n) == k);
        }
    }
}

TEST_CASE("uniform01 is in [0,1) with a sane mean") {
    Rng rng(2);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    // 5 sigma of a mean of U(0,1): 5 / (sqrt(12) * sqrt(n))
    CHECK(std::abs(sum / n - 0.5) < 5.0 / (std::sqrt(12.0) * std::sqrt(n)));
}

TEST_CASE("binomial degenerate cases draw nothing") {
    Rng rng = Rng::scripted({99});
    CHECK(rng.binomial(5, 0.0) == 0);
    CHECK(rng.binomial(0, 0.5) == 0);
    CHECK(rng.binomial(7, 1.0) == 7);
    CHECK(rng.binomial(1, 1.0) == 1);
    // The scripted word must still be unconsumed.
    CHECK(rng.next_u64() == 99);
}

TEST_CASE("binomial matches the exact pmf (chi-square at 0.1%)") {
    Rng rng(42);
    const int64_t n = 32;
    const double p = 1.0 / 16.0;
    const int trials = 20000;
    std::vector<int64_t> counts(7, 0);  // 0..5 and >=6
    for (int i = 0; i < trials; ++i) {
        counts[std::min<int64_t>(rng.binomial(n, p), 6)]++;
    }
    const auto pmf = testsupport::binomial_pmf(n, p);
    std::vector<double> expected(7, 0.0);
    long double tail = 1.0;
    for (int k = 0; k < 6; ++k) {
        expected[k] = static_cast<double>(pmf[k] * trials);
        tail -= pmf[k];
    }
    expected[6] = static_cast<double>(tail * trials);
    const double stat = testsupport::chi_square(counts, expected);
    CHECK(stat < testsupport::chi_square_crit_001(6));
}

TEST_CASE("binomial splitting keeps the mean for large expectations") {
    Rng rng(43);
    const int64_t n = 20000;
    const double p = 0.005;  // expectation 100 forces the split path
    const int trials = 20000;
    double sum = 0.0;
    for (int i = 0; i < trials; ++i) sum += static_cast<double>(rng.binomial(n, p));
    const double mean = sum / trials;
    const double se = std::sqrt(n * p * (1 - p) / trials);
    CHECK(std::abs(mean - n * p) < 5.0 * se);
}

TEST_CASE("derived stream seeds differ across streams") {
    CHECK(derive_stream_seed(1, 0) != derive_stream_seed(1, 1));
    CHECK(derive_stream_seed(1, 0) != derive_stream_seed(2, 0));
}
