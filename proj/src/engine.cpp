#include "evotrans/engine.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace evotrans {

MilestoneTracker::MilestoneTracker(std::vector<double> fractions,
                                   int64_t total_pixels)
    : fractions_(std::move(fractions)) {
    double prev = 0.0;
    for (const double f : fractions_) {
        if (f <= prev || f > 1.0) {
            throw ConfigError(
                "milestones must be strictly increasing and in (0, 1], got " +
                std::to_string(f));
        }
        prev = f;
        // First count with count/total >= f; the slack absorbs the binary
        // representation of fractions like 0.1.
        thresholds_.push_back(static_cast<int64_t>(
            std::ceil(f * static_cast<double>(total_pixels) - 1e-6)));
    }
}

std::vector<double> MilestoneTracker::crossed(int64_t count_target) {
    std::vector<double> out;
    while (next_ < fractions_.size() && count_target >= thresholds_[next_]) {
        out.push_back(fractions_[next_]);
        ++next_;
    }
    return out;
}

namespace {

void validate(const RunConfig& cfg) {
    if (cfg.op.tau < 1) {
        throw ConfigError("tau must be at least 1, got " + std::to_string(cfg.op.tau));
    }
    if (cfg.op.t_max < 0) {
        throw ConfigError("t_max must be non-negative, got " +
                          std::to_string(cfg.op.t_max));
    }
    if (cfg.op.asym.c_s < 0.0 || cfg.op.asym.c_t < 0.0) {
        throw ConfigError("c_s and c_t must be non-negative");
    }
    if (cfg.frame_policy == FramePolicy::EveryK && cfg.frame_every < 1) {
        throw ConfigError("frame cadence must be at least 1");
    }
}

class Runner {
  public:
    Runner(const Image& start, const Image& target, const RunConfig& cfg,
           const FrameSink& sink, Rng rng)
        : cfg_(cfg),
          sink_(sink),
          state_(start, target),
          rng_(std::move(rng)),
          tracker_(cfg.milestones, state_.pixel_count()) {
        if (cfg_.walk_start) {
            const Position p = *cfg_.walk_start;
            if (p.row < 0 || p.row >= state_.rows() || p.col < 0 ||
                p.col >= state_.cols()) {
                throw ConfigError("walk start position out of bounds");
            }
        }
    }

    RunResult go() {
        const int64_t total = state_.pixel_count();
        const uint64_t budget = cfg_.max_generations
                                    ? *cfg_.max_generations
                                    : 10ull * static_cast<uint64_t>(total);
        const bool unbounded = cfg_.max_generations && *cfg_.max_generations == 0;

        RunMetrics metrics;
        capture(0);
        policy_frame(0);

        uint64_t gen = 0;
        while (!state_.complete() && (unbounded || gen < budget)) {
            ++gen;
            const StepOutcome out = step(gen);
            if (cfg_.collect_metrics) {
                metrics.records.push_back({gen, state_.count_target(),
                                           total - state_.count_target(),
                                           out.flips_to_target, out.flips_to_start,
                                           out.accepted});
            }
            capture(gen);
            policy_frame(gen);
        }

        if (!state_.complete() && cfg_.snap_final &&
            static_cast<double>(state_.count_start()) < cfg_.op.asym.c_t / 2.0) {
            // Endgame shortcut: finish the handful of pixels the asymmetric
            // tail would grind on, as one final composite step.
            ++gen;
            const int64_t rest = state_.count_start();
            state_.snap_to_target();
            if (cfg_.collect_metrics) {
                metrics.records.push_back({gen, total, 0, rest, 0, true});
            }
            capture(gen);
            policy_frame(gen);
        }

        RunResult result{std::move(state_), std::move(milestones_),
                         std::move(metrics), /*completed=*/false, gen};
        result.completed = result.final_state.complete();
        return result;
    }

  private:
    StepOutcome step(uint64_t gen) {
        switch (cfg_.op.scheme) {
            case Scheme::Asym:
            case Scheme::Standard: {
                FlipLog log;
                const MutationResult m =
                    cfg_.op.scheme == Scheme::Asym
                        ? asymmetric_mutation(state_, cfg_.op.asym, rng_, &log)
                        : standard_mutation(state_, rng_, &log);
                if (m.delta() < 0) {
                    state_.undo(log);
                    return {0, 0, false};
                }
                return {m.flips_to_target, m.flips_to_start, true};
            }
            case Scheme::EAUniformWalk:
            case Scheme::EABiasedWalk:
                return walk_mutation(state_, scheme_walk_kind(cfg_.op.scheme),
                                     cfg_.op.t_max, rng_);
            case Scheme::AsymUniformWalk:
            case Scheme::AsymBiasedWalk:
                return alternating_step(state_, cfg_.op, gen, rng_);
            case Scheme::PureUniformWalk:
            case Scheme::PureBiasedWalk:
                return pure_walk_step(gen);
        }
        return {};
    }

    StepOutcome pure_walk_step(uint64_t gen) {
        if (gen == 1) {
            // Generation 1 places the cursor; each generation after advances
            // it one move.
            const Position start =
                cfg_.walk_start
                    ? *cfg_.walk_start
                    : state_.position_of(static_cast<int32_t>(
                          rng_.uniform_index(state_.pixel_count())));
            cursor_ = WalkCursor{start, scheme_walk_kind(cfg_.op.scheme), 0};
            const bool conv = state_.convert_to_target(state_.index_of(start));
            return {conv ? 1 : 0, 0, true};
        }
        const Position p = walk_step(*cursor_, state_.target_image(), rng_);
        const bool conv = state_.convert_to_target(state_.index_of(p));
        return {conv ? 1 : 0, 0, true};
    }

    void capture(uint64_t gen) {
        const auto crossed = tracker_.crossed(state_.count_target());
        if (crossed.empty()) return;
        const Image img = state_.compose();
        for (const double f : crossed) {
            milestones_.emplace(f, MilestoneFrame{gen, img});
            if (sink_) sink_(gen, img, f);
        }
    }

    void policy_frame(uint64_t gen) {
        if (!sink_) return;
        const bool due = cfg_.frame_policy == FramePolicy::All ||
                         (cfg_.frame_policy == FramePolicy::EveryK &&
                          gen % cfg_.frame_every == 0);
        if (due) sink_(gen, state_.compose(), std::nullopt);
    }

    const RunConfig& cfg_;
    const FrameSink& sink_;
    TransitionState state_;
    Rng rng_;
    MilestoneTracker tracker_;
    std::map<double, MilestoneFrame> milestones_;
    std::optional<WalkCursor> cursor_;
};

}  // namespace

RunResult run(const Image& start, const Image& target, const RunConfig& cfg,
              const FrameSink& sink, Rng rng) {
    validate(cfg);
    return Runner(start, target, cfg, sink, std::move(rng)).go();
}

RunResult run(const Image& start, const Image& target, const RunConfig& cfg,
              const FrameSink& sink) {
    return run(start, target, cfg, sink, Rng(cfg.seed));
}

}  // namespace evotrans
