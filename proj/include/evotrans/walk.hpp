#pragma once

#include <array>

#include "evotrans/state.hpp"

namespace evotrans {

enum class WalkKind { Uniform, Biased };

// Bookkeeping for a walk that persists across engine generations.
struct WalkCursor {
    Position pos;
    WalkKind kind = WalkKind::Uniform;
    uint64_t steps_taken = 0;
};

// One uniform move: each neighbour slot with probability 1/4. Duplicate
// neighbours on degenerate grids keep their double weight.
Position uniform_step(Position current, Dims dims, Rng& rng);

// Move weights at `from`: the color_distance of each torus neighbour of the
// target image, in up/down/left/right slot order.
std::array<int32_t, 4> neighbor_weights(const Image& target, Position from);

// Slot probabilities of the biased walk; all-zero weights fall back to the
// uniform distribution.
std::array<double, 4> biased_step_distribution(const Image& target, Position from);

// One biased move: a neighbour slot with probability proportional to its
// weight, by exact integer arithmetic, so zero-weight neighbours are never
// chosen. The walk reads only the target image.
Position biased_step(Position current, const Image& target, Rng& rng);

// Single cursor move of the cursor's kind.
Position walk_step(WalkCursor& cursor, const Image& target, Rng& rng);

// Converts the start pixel, then takes `steps` moves converting every
// visited pixel. Returns how many pixels changed state; fitness never
// decreases.
int64_t run_walk(TransitionState& state, Position start, int64_t steps,
                 WalkKind kind, Rng& rng);

}  // namespace evotrans
