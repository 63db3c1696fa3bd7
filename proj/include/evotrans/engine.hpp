#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "evotrans/combined.hpp"
#include "evotrans/fitness.hpp"

namespace evotrans {

// Which generations (beyond milestone captures) are emitted to the frame
// sink.
enum class FramePolicy { MilestonesOnly, EveryK, All };

struct RunConfig {
    OperatorConfig op;
    uint64_t seed = 0;

    // Composite-step budget. Unset: the safety default of 10 * m * n.
    // Zero: unbounded.
    std::optional<uint64_t> max_generations;

    // Target-pixel fractions whose first crossing is captured; strictly
    // increasing, each in (0, 1].
    std::vector<double> milestones = {0.125, 0.375, 0.625, 0.875};

    // When the budget expires with fewer than c_t/2 start pixels left,
    // finish the transition by snapping them to target (one extra
    // generation).
    bool snap_final = false;

    FramePolicy frame_policy = FramePolicy::MilestonesOnly;
    uint64_t frame_every = 1;  // cadence for FramePolicy::EveryK

    // Pure-walk schemes: fixed start position; unset draws one uniformly at
    // random when the walk begins.
    std::optional<Position> walk_start;

    // Benches turn this off; milestone capture is unaffected.
    bool collect_metrics = true;
};

struct MetricsRecord {
    uint64_t generation = 0;
    int64_t fitness = 0;
    int64_t missing = 0;          // k = m*n - fitness
    int64_t flips_to_target = 0;  // applied this generation
    int64_t flips_to_start = 0;
    bool accepted = false;

    friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct RunMetrics {
    std::vector<MetricsRecord> records;  // one per executed generation
};

struct MilestoneFrame {
    uint64_t generation = 0;
    Image image;

    friend bool operator==(const MilestoneFrame&, const MilestoneFrame&) = default;
};

struct RunResult {
    TransitionState final_state;
    std::map<double, MilestoneFrame> milestone_frames;
    RunMetrics metrics;
    bool completed = false;
    uint64_t generations = 0;
};

// Invoked for every captured milestone frame (with its fraction) and for
// every frame the policy selects (without one). Generation 0 is the initial
// composite.
using FrameSink =
    std::function<void(uint64_t generation, const Image& frame,
                       std::optional<double> milestone_fraction)>;

// First-crossing milestone bookkeeping over a non-decreasing target count.
class MilestoneTracker {
  public:
    // Throws ConfigError unless fractions are strictly increasing and in
    // (0, 1].
    MilestoneTracker(std::vector<double> fractions, int64_t total_pixels);

    // Fractions newly reached at this count, in increasing order; each is
    // reported exactly once per run.
    std::vector<double> crossed(int64_t count_target);

  private:
    std::vector<double> fractions_;
    std::vector<int64_t> thresholds_;
    std::size_t next_ = 0;
};

// The (1+1) elitist run loop: applies the configured scheme until the
// composite equals the target or the budget is exhausted, capturing each
// milestone the first time its fraction is reached.
//
// Replay contract: all randomness comes from one stream seeded with
// cfg.seed. Per generation the draw order is
//   asym/standard   start count, start picks, target count, target picks
//   walk mutation   start position, then one word per step
//   alternating     asymmetric proposal first, then the walk when due
//   pure walk       start position (generation 1, only when walk_start is
//                   unset), then one word per subsequent generation
RunResult run(const Image& start, const Image& target, const RunConfig& cfg,
              const FrameSink& sink = {});

// Same loop over a caller-supplied stream (cfg.seed is ignored); lets tests
// drive a run with a scripted Rng.
RunResult run(const Image& start, const Image& target, const RunConfig& cfg,
              const FrameSink& sink, Rng rng);

}  // namespace evotrans
