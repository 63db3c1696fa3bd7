// Acceptance suite: end-to-end checks of the shipped guarantees, one
// PASS/FAIL line each. Exits with the number of failed checks.
//
// --golden-dir DIR   where the stored reference artifacts live
// --regen            rewrite the stored artifacts instead of checking them

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evotrans/cli.hpp"
#include "evotrans/empirics.hpp"
#include "evotrans/image_io.hpp"

using namespace evotrans;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string g_golden_dir = "tests/golden";
bool g_regen = false;

std::string fmt(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.4g", v);
    return b;
}

// ---------------------------------------------------------------------------
// 1. Elitist acceptance keeps every scheme's fitness trajectory monotone.
// ---------------------------------------------------------------------------
Outcome check_elitism() {
    Outcome o;
    int64_t trajectories = 0;
    for (const Scheme scheme : kAllSchemes) {
        for (uint64_t seedidx = 0; seedidx < 50; ++seedidx) {
            const uint64_t seed = derive_stream_seed(0xC1, (static_cast<uint64_t>(scheme) << 8) | seedidx);
            Rng pair_rng(derive_stream_seed(seed, 1));
            const auto [s, t] = make_differing_pair({64, 64}, pair_rng);
            RunConfig cfg;
            cfg.op.scheme = scheme;
            cfg.op.t_max = scheme_is_pure_walk(scheme) ? 0
                           : (scheme == Scheme::AsymUniformWalk ||
                              scheme == Scheme::AsymBiasedWalk)
                               ? 2000
                               : 100;
            cfg.seed = derive_stream_seed(seed, 2);
            cfg.max_generations =
                scheme_is_pure_walk(scheme) ? 30000 : scheme_has_walk_mutation(scheme) ? 500 : 3000;
            const RunResult r = run(s, t, cfg);
            int64_t prev = 0;
            for (const MetricsRecord& rec : r.metrics.records) {
                if (rec.fitness < prev) {
                    o.pass = false;
                    o.detail = "fitness dropped under " +
                               std::string(scheme_name(scheme)) + " at generation " +
                               std::to_string(rec.generation);
                    return o;
                }
                prev = rec.fitness;
            }
            ++trajectories;
        }
    }
    o.detail = std::to_string(trajectories) + " trajectories monotone";
    return o;
}

// ---------------------------------------------------------------------------
// 2. Asymmetric mutation means: cs/2 and ct/2 flips per invocation.
// ---------------------------------------------------------------------------
Outcome check_asym_means() {
    Outcome o;
    Rng pair_rng(0xC2);
    const auto [s, t] = make_differing_pair({200, 200}, pair_rng);
    TransitionState st(s, t);
    std::vector<int32_t> first_half(20000);
    for (int32_t i = 0; i < 20000; ++i) st.toggle(i);

    Rng rng(derive_stream_seed(0xC2, 1));
    const AsymmetricParams params{100.0, 50.0};
    const int trials = 10000;
    double sum_st = 0, sum_ts = 0;
    FlipLog log;
    for (int i = 0; i < trials; ++i) {
        const MutationResult m = asymmetric_mutation(st, params, rng, &log);
        sum_st += static_cast<double>(m.flips_to_target);
        sum_ts += static_cast<double>(m.flips_to_start);
        st.undo(log);
    }
    const double mean_st = sum_st / trials, mean_ts = sum_ts / trials;
    // Binomial(20000, 100/40000) and Binomial(20000, 50/40000) oracles.
    const double p_s = 100.0 / 40000.0, p_t = 50.0 / 40000.0;
    const double tol_st = 5.0 * std::sqrt(20000.0 * p_s * (1 - p_s) / trials);
    const double tol_ts = 5.0 * std::sqrt(20000.0 * p_t * (1 - p_t) / trials);
    o.pass = std::abs(mean_st - 50.0) < tol_st && std::abs(mean_ts - 25.0) < tol_ts;
    o.detail = "mean flips " + fmt(mean_st) + " (want 50 +/- " + fmt(tol_st) +
               "), " + fmt(mean_ts) + " (want 25 +/- " + fmt(tol_ts) + ")";
    return o;
}

// ---------------------------------------------------------------------------
// 3. Runtime scaling: linear for asym, n log n for standard.
// ---------------------------------------------------------------------------
Outcome check_scaling() {
    Outcome o;
    const std::vector<int64_t> sizes{1024, 4096, 16384};
    const ScalingReport asym =
        measure_runtime_scaling(Scheme::Asym, {1.0, 1.0}, sizes, 30, 0xC3);
    const bool slope_ok = asym.fit.slope >= 0.85 && asym.fit.slope <= 1.15;

    const ScalingReport std_rep =
        measure_runtime_scaling(Scheme::Standard, {1.0, 1.0}, sizes, 30, 0xC3 + 1);
    std::vector<double> ratios;
    for (const SizeStats& s : std_rep.sizes) {
        ratios.push_back(s.generations.mean /
                         (static_cast<double>(s.pixels) *
                          std::log(static_cast<double>(s.pixels))));
    }
    double rbar = 0;
    for (const double r : ratios) rbar += r;
    rbar /= static_cast<double>(ratios.size());
    bool ratios_ok = true;
    double worst = 0;
    for (const double r : ratios) {
        worst = std::max(worst, std::abs(r - rbar) / rbar);
        if (std::abs(r - rbar) / rbar > 0.25) ratios_ok = false;
    }
    o.pass = slope_ok && ratios_ok;
    std::ostringstream d;
    d << "asym slope " << fmt(asym.fit.slope) << " (want [0.85, 1.15]); "
      << "standard mean/(n ln n) = ";
    for (const double r : ratios) d << fmt(r) << " ";
    d << "(max rel spread " << fmt(worst) << ", want <= 0.25)";
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 4. Drift signature: ~k/n scaling for standard in the coupon-collector
//    regime, flat for asym.
// ---------------------------------------------------------------------------
Outcome check_drift() {
    Outcome o;
    const int64_t n = 6400;
    const int64_t trials = 1000000;
    // k = n/20 = 320 vs k/5 = 64 missing pixels, inside the near-optimum
    // regime the k/n law describes.
    const DriftEstimate at_k =
        measure_drift(Scheme::Standard, {1, 1}, n, 1.0 - 320.0 / 6400.0, trials, 0xC4);
    const DriftEstimate at_k5 =
        measure_drift(Scheme::Standard, {1, 1}, n, 1.0 - 64.0 / 6400.0, trials, 0xC4 + 1);
    const double ratio = at_k.drift.mean / at_k5.drift.mean;
    const bool std_ok = ratio >= 3.5 && ratio <= 6.5;

    const DriftEstimate mid =
        measure_drift(Scheme::Asym, {1.0, 1.0}, n, 0.5, trials, 0xC4 + 2);
    const DriftEstimate late =
        measure_drift(Scheme::Asym, {1.0, 1.0}, n, 0.9, trials, 0xC4 + 3);
    const double aratio = mid.drift.mean / late.drift.mean;
    const bool asym_ok = mid.drift.mean > 0 && late.drift.mean > 0 &&
                         aratio >= 1.0 / 3.0 && aratio <= 3.0;

    o.pass = std_ok && asym_ok;
    o.detail = "standard drift(k=320)/drift(k=64) = " + fmt(ratio) +
               " (want 5 +/- 30% => [3.5, 6.5]); asym drift 50%/90% = " +
               fmt(aratio) + " (want within factor 3)";
    return o;
}

// ---------------------------------------------------------------------------
// 5. Cover time against 4 n^2 (ln n)^2 / pi. The source theorem is an
//    n -> infinity constant and desk-scale means approach it from above, so
//    the natural-log rendering fails at these sizes; the log2 rendering
//    holds. Checked as stated, reported with both bounds.
// ---------------------------------------------------------------------------
Outcome check_cover() {
    Outcome o;
    std::ostringstream d;
    for (const int32_t n : {8, 16, 32}) {
        const CoverTimeEstimate est =
            measure_cover_time(n, 100, derive_stream_seed(0xC5, n));
        const bool ok = est.steps.mean <= est.bound_ln;
        if (!ok) o.pass = false;
        d << "n=" << n << ": mean " << fmt(est.steps.mean) << (ok ? " <= " : " > ")
          << fmt(est.bound_ln) << " (ln bound; log2 bound " << fmt(est.bound_log2)
          << (est.steps.mean <= est.bound_log2 ? " holds" : " fails") << "); ";
    }
    if (!o.pass) {
        d << "the ln rendering of the asymptotic constant is exceeded at desk "
             "scale; see the notes in README";
    }
    o.detail = d.str();
    return o;
}

// ---------------------------------------------------------------------------
// 6. Biased step distribution matches the normalised weights exactly.
// ---------------------------------------------------------------------------
Outcome check_biased_distribution() {
    Outcome o;
    // Constructed 8x8 target: a constant-colour left half (all-zero weights
    // inside) and a varied right half, so every weight regime appears.
    Image t(8, 8, Pixel{50, 50, 50});
    for (int32_t r = 0; r < 8; ++r) {
        for (int32_t c = 4; c < 8; ++c) {
            t.at(r, c) = {static_cast<uint8_t>(17 * r + 11 * c),
                          static_cast<uint8_t>(200 - 23 * c),
                          static_cast<uint8_t>(5 * r * c)};
        }
    }

    Rng rng(0xC6);
    int64_t zero_positions = 0;
    for (int32_t r = 0; r < 8 && o.pass; ++r) {
        for (int32_t c = 0; c < 8 && o.pass; ++c) {
            const Position from{r, c};
            // Independent recomputation of the distribution.
            long double w[4];
            long double total = 0;
            const int32_t up = (r + 7) % 8, down = (r + 1) % 8;
            const int32_t left = (c + 7) % 8, right = (c + 1) % 8;
            const Position nb[4] = {{up, c}, {down, c}, {r, left}, {r, right}};
            for (int k = 0; k < 4; ++k) {
                const Pixel& a = t.at(from);
                const Pixel& b = t.at(nb[k]);
                w[k] = std::abs(a.r - b.r) + std::abs(a.g - b.g) + std::abs(a.b - b.b);
                total += w[k];
            }
            const auto got = biased_step_distribution(t, from);
            double sum = 0;
            for (int k = 0; k < 4; ++k) {
                const double expect =
                    total == 0 ? 0.25 : static_cast<double>(w[k] / total);
                if (std::abs(got[k] - expect) > 1e-12) {
                    o.pass = false;
                    o.detail = "distribution mismatch at (" + std::to_string(r) +
                               "," + std::to_string(c) + ")";
                }
                sum += got[k];
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                o.pass = false;
                o.detail = "probabilities do not sum to 1";
            }

            // Sampling: zero-weight neighbours must never appear.
            bool has_zero = false, has_weight = total > 0;
            for (int k = 0; k < 4; ++k) has_zero = has_zero || w[k] == 0;
            if (has_zero && has_weight && zero_positions < 8) {
                ++zero_positions;
                for (int i = 0; i < 100000; ++i) {
                    const Position q = biased_step(from, t, rng);
                    for (int k = 0; k < 4; ++k) {
                        if (q == nb[k] && w[k] == 0) {
                            o.pass = false;
                            o.detail = "zero-weight neighbour sampled at (" +
                                       std::to_string(r) + "," + std::to_string(c) +
                                       ")";
                        }
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "64 positions match the weight normalisation; " +
                   std::to_string(zero_positions) +
                   " zero-weight neighbourhoods sampled 1e5 times each";
    }
    return o;
}

// ---------------------------------------------------------------------------
// 7. Golden artifacts: fixed pair + fixed seed per scheme replays to
//    byte-identical frames and metrics, matching the stored copies.
// ---------------------------------------------------------------------------
std::vector<std::string> transition_args(Scheme scheme, const std::string& outdir,
                                         const fs::path& inputs) {
    std::vector<std::string> args{
        "transition", "--start", (inputs / "start.png").string(),
        "--target", (inputs / "target.png").string(), "--out", outdir,
        "--scheme", std::string(scheme_name(scheme)), "--seed", "424242"};
    // Per-scheme budgets: the asym tail cannot reach 100% without the snap
    // (finishing needs a zero t->s generation, probability ~e^-ct/2), and the
    // pure walks need more than the default safety budget to cover 32x32.
    switch (scheme) {
        case Scheme::Asym:
        case Scheme::AsymUniformWalk:
        case Scheme::AsymBiasedWalk:
            args.insert(args.end(), {"--max-generations", "400", "--snap-final"});
            break;
        case Scheme::Standard:
            args.insert(args.end(), {"--max-generations", "40000"});
            break;
        case Scheme::PureUniformWalk:
        case Scheme::PureBiasedWalk:
            args.insert(args.end(), {"--max-generations", "80000"});
            break;
        default:
            break;  // EA walks finish well inside the default budget
    }
    return args;
}

std::map<std::string, std::vector<uint8_t>> dir_contents(const fs::path& dir) {
    std::map<std::string, std::vector<uint8_t>> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file()) {
            out[e.path().filename().string()] = read_file(e.path().string());
        }
    }
    return out;
}

Outcome check_goldens() {
    Outcome o;
    const fs::path golden(g_golden_dir);
    const fs::path inputs = golden / "inputs";

    if (g_regen) {
        fs::create_directories(inputs);
        Rng pair_rng(0xC7);
        const auto [s, t] = make_differing_pair({32, 32}, pair_rng);
        write_png((inputs / "start.png").string(), s);
        write_png((inputs / "target.png").string(), t);
    }

    const fs::path scratch =
        fs::temp_directory_path() / ("evotrans_golden_" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    int64_t files_checked = 0;
    for (const Scheme scheme : kAllSchemes) {
        const std::string name(scheme_name(scheme));
        const fs::path stored = golden / name;
        const std::string run_a = (scratch / (name + "_a")).string();
        const std::string run_b = (scratch / (name + "_b")).string();
        std::ostringstream sink;
        if (cli::run(transition_args(scheme, run_a, inputs), sink, sink) != 0 ||
            cli::run(transition_args(scheme, run_b, inputs), sink, sink) != 0) {
            o.pass = false;
            o.detail = "transition failed for scheme " + name;
            break;
        }
        const auto a = dir_contents(run_a);
        const auto b = dir_contents(run_b);
        if (a != b) {
            o.pass = false;
            o.detail = "two runs differ for scheme " + name;
            break;
        }
        if (g_regen) {
            fs::remove_all(stored);
            fs::create_directories(stored);
            for (const auto& [file, bytes] : a) {
                write_file((stored / file).string(), bytes);
            }
        } else {
            if (!fs::exists(stored)) {
                o.pass = false;
                o.detail = "missing stored artifacts for scheme " + name;
                break;
            }
            const auto want = dir_contents(stored);
            if (a != want) {
                o.pass = false;
                o.detail = "artifacts differ from stored copies for scheme " + name;
                break;
            }
            files_checked += static_cast<int64_t>(want.size());
        }
    }
    fs::remove_all(scratch);
    if (o.pass) {
        o.detail = g_regen ? "stored artifacts regenerated"
                           : std::to_string(files_checked) +
                                 " files byte-identical across two runs and "
                                 "the stored copies";
    }
    return o;
}

// ---------------------------------------------------------------------------
// 8. A single scripted walk crossing several milestone fractions captures
//    them all with one generation index.
// ---------------------------------------------------------------------------
Outcome check_milestone_batch() {
    Outcome o;
    Rng pair_rng(0xC8);
    const auto [s, t] = make_differing_pair({4, 4}, pair_rng);
    RunConfig cfg;
    cfg.op.scheme = Scheme::EAUniformWalk;
    cfg.op.t_max = 2000;  // one mutation covers the 16-pixel torus
    // Scripted stream: pin the walk start and its first moves; the remaining
    // words fall back to a seeded engine.
    Rng scripted = Rng::scripted(
        {word_for_index(5, 16), word_for_index(0, 4), word_for_index(2, 4),
         word_for_index(1, 4), word_for_index(3, 4)},
        0xC8 + 1);
    const RunResult r = run(s, t, cfg, {}, std::move(scripted));
    if (r.milestone_frames.size() != 4) {
        o.pass = false;
        o.detail = "expected 4 milestone captures, got " +
                   std::to_string(r.milestone_frames.size());
        return o;
    }
    const MilestoneFrame& first = r.milestone_frames.begin()->second;
    for (const auto& [fraction, frame] : r.milestone_frames) {
        if (frame.generation != 1 || !(frame.image == first.image)) {
            o.pass = false;
            o.detail = "milestone " + fmt(fraction) + " not captured at the "
                       "crossing generation";
            return o;
        }
    }
    o.detail = "all milestone fractions captured at generation 1 with one image";
    return o;
}

// ---------------------------------------------------------------------------
// 9. Incremental side counts equal a brute-force recount after 1e4 random
//    operator applications.
// ---------------------------------------------------------------------------
Outcome check_count_oracle() {
    Outcome o;
    Rng pair_rng(0xC9);
    auto [s, t] = make_differing_pair({8, 8}, pair_rng);
    // A second pair with frozen pixels exercises the excluded positions.
    Image s2 = s, t2 = t;
    for (int32_t i = 0; i < 16; ++i) t2.pixels()[i] = s2.pixels()[i];

    Rng rng(derive_stream_seed(0xC9, 1));
    for (const auto& [S, T] : {std::pair{s, t}, {s2, t2}}) {
        TransitionState st(S, T);
        OperatorConfig alt;
        alt.scheme = Scheme::AsymUniformWalk;
        alt.asym = {3.0, 2.0};
        alt.t_max = 10;
        alt.tau = 2;
        for (int i = 0; i < 10000; ++i) {
            switch (rng.uniform_index(5)) {
                case 0: standard_mutation(st, rng); break;
                case 1: asymmetric_mutation(st, {3.0, 2.0}, rng); break;
                case 2: walk_mutation(st, WalkKind::Uniform, 20, rng); break;
                case 3: walk_mutation(st, WalkKind::Biased, 20, rng); break;
                default: alternating_step(st, alt, static_cast<uint64_t>(i), rng);
            }
            const int64_t recount = st.recount_target();
            if (st.count_target() != recount ||
                st.count_start() != st.pixel_count() - recount) {
                o.pass = false;
                o.detail = "cached counts diverged after operation " +
                           std::to_string(i);
                return o;
            }
            if (st.complete()) st = TransitionState(S, T);
        }
    }
    o.detail = "counts equal brute-force recounts across 2e4 operator applications";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--golden-dir" && i + 1 < argc) {
            g_golden_dir = argv[++i];
        } else if (arg == "--regen") {
            g_regen = true;
        } else {
            std::cerr << "unknown argument: " << arg << "\n";
            return 64;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
        {"elitism keeps fitness monotone for every scheme", check_elitism},
        {"asymmetric mutation flips cs/2 and ct/2 in expectation", check_asym_means},
        {"runtime scales linearly (asym) and like n log n (standard)", check_scaling},
        {"one-step drift: k/n signature (standard), flat (asym)", check_drift},
        {"uniform-walk cover time vs 4n^2(ln n)^2/pi", check_cover},
        {"biased step distribution equals normalised weights", check_biased_distribution},
        {"golden artifacts replay byte-identically", check_goldens},
        {"batched milestone crossings share one generation", check_milestone_batch},
        {"incremental counts match brute-force recounts", check_count_oracle},
    };

    int failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = checks[i].second();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (!o.pass) ++failures;
        std::printf("[%zu/%zu] %-58s %s (%.1f s)\n", i + 1, checks.size(),
                    checks[i].first.c_str(), o.pass ? "PASS" : "FAIL", secs);
        if (!o.detail.empty()) std::printf("      %s\n", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu checks passed\n", checks.size() - failures, checks.size());
    return failures;
}
