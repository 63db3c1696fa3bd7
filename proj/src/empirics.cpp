#include "evotrans/empirics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace evotrans {

namespace {

void run_trials(int64_t count, int threads, const std::function<void(int64_t)>& fn) {
    int64_t pool_size = threads > 0
                            ? threads
                            : static_cast<int64_t>(std::thread::hardware_concurrency());
    pool_size = std::clamp<int64_t>(pool_size, 1, count);
    if (pool_size <= 1) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    // Work stealing is fine: trial i writes only slot i, and every trial is
    // seeded by its index, so scheduling cannot change any result.
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (int64_t t = 0; t < pool_size; ++t) {
        pool.emplace_back([&] {
            for (int64_t i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

MeanCi mean_ci(const std::vector<int64_t>& samples) {
    const auto n = static_cast<double>(samples.size());
    int64_t sum = 0;
    for (const int64_t s : samples) sum += s;
    const double mean = static_cast<double>(sum) / n;
    if (samples.size() < 2) return {mean, mean, mean};
    double ss = 0.0;
    for (const int64_t s : samples) {
        const double d = static_cast<double>(s) - mean;
        ss += d * d;
    }
    const double half = 1.96 * std::sqrt(ss / (n - 1.0) / n);
    return {mean, mean - half, mean + half};
}

// Two-sided 95% t quantiles for the tiny dfs a slope fit over a few sizes
// produces.
double t_crit(int df) {
    static constexpr double table[] = {12.706, 4.303, 3.182, 2.776, 2.571,
                                       2.447,  2.365, 2.306, 2.262, 2.228};
    if (df < 1) return 0.0;
    if (df <= 10) return table[df - 1];
    return 1.96;
}

int32_t square_side(int64_t pixels) {
    const auto side = static_cast<int32_t>(std::llround(std::sqrt(
        static_cast<double>(pixels))));
    if (static_cast<int64_t>(side) * side != pixels || side < 1) {
        throw ConfigError("size " + std::to_string(pixels) +
                          " is not a perfect square of pixels");
    }
    return side;
}

void require_mutation_scheme(Scheme scheme) {
    if (scheme != Scheme::Asym && scheme != Scheme::Standard) {
        throw ConfigError(
            "theory benches cover the asym and standard schemes only");
    }
}

}  // namespace

std::pair<Image, Image> make_differing_pair(Dims dims, Rng& rng) {
    Image start(dims.rows, dims.cols);
    Image target(dims.rows, dims.cols);
    for (int64_t i = 0; i < dims.pixel_count(); ++i) {
        const uint64_t w = rng.next_u64();
        Pixel t{static_cast<uint8_t>(w), static_cast<uint8_t>(w >> 8),
                static_cast<uint8_t>(w >> 16)};
        Pixel s{static_cast<uint8_t>(w >> 24), static_cast<uint8_t>(w >> 32),
                static_cast<uint8_t>(w >> 40)};
        if (s == t) s.r ^= 0x80;
        start.pixels()[i] = s;
        target.pixels()[i] = t;
    }
    return {std::move(start), std::move(target)};
}

ScalingReport measure_runtime_scaling(Scheme scheme,
                                      const AsymmetricParams& params,
                                      const std::vector<int64_t>& sizes,
                                      int trials, uint64_t master_seed,
                                      int threads) {
    require_mutation_scheme(scheme);
    if (sizes.size() < 2) {
        throw ConfigError("cannot fit a slope from fewer than two sizes");
    }
    if (trials < 30) {
        throw ConfigError("scaling fits need at least 30 trials per size, got " +
                          std::to_string(trials));
    }

    ScalingReport report;
    report.scheme = scheme;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int32_t side = square_side(sizes[si]);
        std::vector<int64_t> gens(trials);
        run_trials(trials, threads, [&, si, side](int64_t ti) {
            const uint64_t child = derive_stream_seed(
                master_seed, (static_cast<uint64_t>(si) << 32) | static_cast<uint64_t>(ti));
            Rng pair_rng(derive_stream_seed(child, 1));
            auto [s, t] = make_differing_pair({side, side}, pair_rng);
            RunConfig cfg;
            cfg.op.scheme = scheme;
            cfg.op.asym = params;
            cfg.seed = derive_stream_seed(child, 2);
            cfg.max_generations = 0;  // to completion
            cfg.milestones.clear();
            cfg.collect_metrics = false;
            gens[ti] = static_cast<int64_t>(run(s, t, cfg).generations);
        });
        report.sizes.push_back({sizes[si], trials, mean_ci(gens)});
    }

    // Least squares on (ln pixels, ln mean generations).
    const auto k = static_cast<double>(report.sizes.size());
    double sx = 0, sy = 0;
    for (const auto& s : report.sizes) {
        sx += std::log(static_cast<double>(s.pixels));
        sy += std::log(s.generations.mean);
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0, srr = 0;
    for (const auto& s : report.sizes) {
        const double dx = std::log(static_cast<double>(s.pixels)) - mx;
        const double dy = std::log(s.generations.mean) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    report.fit.slope = sxy / sxx;
    report.fit.intercept = my - report.fit.slope * mx;
    for (const auto& s : report.sizes) {
        const double x = std::log(static_cast<double>(s.pixels));
        const double r = std::log(s.generations.mean) -
                         (report.fit.intercept + report.fit.slope * x);
        srr += r * r;
    }
    const int df = static_cast<int>(report.sizes.size()) - 2;
    const double se = df > 0 ? std::sqrt(srr / df / sxx) : 0.0;
    report.fit.ci_low = report.fit.slope - t_crit(df) * se;
    report.fit.ci_high = report.fit.slope + t_crit(df) * se;
    return report;
}

DriftEstimate measure_drift(Scheme scheme, const AsymmetricParams& params,
                            int64_t pixels, double target_fraction,
                            int64_t trials, uint64_t master_seed, int threads) {
    require_mutation_scheme(scheme);
    if (pixels < 1) throw ConfigError("drift bench needs at least one pixel");
    if (trials < 1) throw ConfigError("drift bench needs at least one trial");
    if (target_fraction < 0.0 || target_fraction > 1.0) {
        throw ConfigError("target fraction must be in [0, 1], got " +
                          std::to_string(target_fraction));
    }

    // Both mutation operators read only the side counts, so a 1-row image
    // and a deterministic choice of converted pixels lose no generality.
    Rng pair_rng(derive_stream_seed(master_seed, 0));
    auto [s, t] = make_differing_pair(
        {1, static_cast<int32_t>(pixels)}, pair_rng);
    TransitionState base(s, t);
    const auto converted = static_cast<int64_t>(
        std::llround(target_fraction * static_cast<double>(pixels)));
    for (int64_t i = 0; i < converted; ++i) {
        base.convert_to_target(static_cast<int32_t>(i));
    }

    std::vector<int64_t> samples(trials);
    const int64_t chunk = 4096;  // trials per state copy
    const int64_t chunks = (trials + chunk - 1) / chunk;
    run_trials(chunks, threads, [&](int64_t ci) {
        TransitionState st = base;
        FlipLog log;
        const int64_t hi = std::min<int64_t>(trials, (ci + 1) * chunk);
        for (int64_t i = ci * chunk; i < hi; ++i) {
            Rng rng(derive_stream_seed(master_seed, static_cast<uint64_t>(i) + 1));
            const MutationResult m =
                scheme == Scheme::Asym
                    ? asymmetric_mutation(st, params, rng, &log)
                    : standard_mutation(st, rng, &log);
            samples[i] = std::max<int64_t>(m.delta(), 0);
            st.undo(log);
        }
    });

    return {target_fraction, pixels - converted, trials, mean_ci(samples)};
}

CoverTimeEstimate measure_cover_time(int32_t side, int trials,
                                     uint64_t master_seed, int threads) {
    if (side < 2) throw ConfigError("cover-time bench needs a side of at least 2");
    if (trials < 1) throw ConfigError("cover-time bench needs at least one trial");

    const Dims dims{side, side};
    const int64_t cells = dims.pixel_count();
    std::vector<int64_t> samples(trials);
    run_trials(trials, threads, [&](int64_t ti) {
        Rng rng(derive_stream_seed(master_seed, static_cast<uint64_t>(ti)));
        std::vector<uint8_t> visited(cells, 0);
        // The torus is vertex-transitive; a fixed start loses no generality.
        Position pos{0, 0};
        visited[0] = 1;
        int64_t covered = 1;
        int64_t steps = 0;
        while (covered < cells) {
            pos = uniform_step(pos, dims, rng);
            ++steps;
            uint8_t& v = visited[static_cast<int64_t>(pos.row) * side + pos.col];
            covered += 1 - v;
            v = 1;
        }
        samples[ti] = steps;
    });

    const double n2 = static_cast<double>(cells);
    const double ln = std::log(static_cast<double>(side));
    const double l2 = std::log2(static_cast<double>(side));
    return {side, trials, mean_ci(samples), 4.0 * n2 * ln * ln / std::numbers::pi,
            4.0 * n2 * l2 * l2 / std::numbers::pi};
}

}  // namespace evotrans
