#pragma once

#include <utility>
#include <vector>

#include "evotrans/engine.hpp"

namespace evotrans {

// Sample mean with a 95% normal confidence interval.
struct MeanCi {
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct SizeStats {
    int64_t pixels = 0;
    int trials = 0;
    MeanCi generations;
};

struct LogLogFit {
    double slope = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double intercept = 0.0;
};

struct ScalingReport {
    Scheme scheme = Scheme::Asym;
    std::vector<SizeStats> sizes;
    LogLogFit fit;
};

struct DriftEstimate {
    double fraction = 0.0;   // prepared target fraction
    int64_t missing = 0;     // start-side pixels at that fraction
    int64_t trials = 0;
    MeanCi drift;            // accepted one-step fitness gain
};

struct CoverTimeEstimate {
    int32_t side = 0;  // torus is side x side
    int trials = 0;
    MeanCi steps;
    double bound_ln = 0.0;    // 4 n^2 (ln n)^2 / pi
    double bound_log2 = 0.0;  // same with log base 2
};

// Synthetic image pair of the given size where every pixel differs, so the
// transition starts at fitness 0.
std::pair<Image, Image> make_differing_pair(Dims dims, Rng& rng);

// Mean generations to complete the transition per size (sizes are pixel
// counts and must be perfect squares), with a log-log slope fit across
// sizes. Scheme must be Asym or Standard; requires >= 2 sizes and >= 30
// trials per size. threads = 0 picks the hardware concurrency.
ScalingReport measure_runtime_scaling(Scheme scheme,
                                      const AsymmetricParams& params,
                                      const std::vector<int64_t>& sizes,
                                      int trials, uint64_t master_seed,
                                      int threads = 0);

// Monte-Carlo estimate of the one-step drift (expected accepted fitness
// gain) at a fixed completion fraction. Scheme must be Asym or Standard.
DriftEstimate measure_drift(Scheme scheme, const AsymmetricParams& params,
                            int64_t pixels, double target_fraction,
                            int64_t trials, uint64_t master_seed,
                            int threads = 0);

// Mean number of uniform-walk moves until every cell of a side x side torus
// has been visited, against both log-base renderings of the asymptotic
// 4 n^2 log^2(n) / pi cover-time constant.
CoverTimeEstimate measure_cover_time(int32_t side, int trials,
                                     uint64_t master_seed, int threads = 0);

}  // namespace evotrans
