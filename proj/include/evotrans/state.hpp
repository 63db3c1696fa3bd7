#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "evotrans/image.hpp"
#include "evotrans/rng.hpp"

namespace evotrans {

// Which source image a composite pixel currently shows.
enum class PixelState : uint8_t { Start = 0, Target = 1 };

// Pixel indices toggled by one proposal, in application order.
using FlipLog = std::vector<int32_t>;

// The evolving composite: a per-pixel start/target mask over a fixed image
// pair, with incrementally maintained counts and O(1) uniform sampling from
// either flippable side.
//
// Pixels where start == target are frozen: they count as target state from
// generation 0 and no operator ever flips them.
class TransitionState {
  public:
    // Throws ConfigError when the two images differ in size.
    TransitionState(Image start, Image target);

    Dims dims() const { return start_.dims(); }
    int32_t rows() const { return start_.rows(); }
    int32_t cols() const { return start_.cols(); }
    int64_t pixel_count() const { return start_.pixel_count(); }

    int64_t count_start() const { return pixel_count() - count_target_; }
    int64_t count_target() const { return count_target_; }
    int64_t frozen_count() const { return frozen_count_; }
    // Target-side pixels an operator may flip back (frozen ones excluded).
    int64_t flippable_target_count() const {
        return static_cast<int64_t>(pool_.size()) - start_end_;
    }

    bool complete() const { return count_target_ == pixel_count(); }

    PixelState state_at(Position p) const {
        return in_target_[start_.index(p.row, p.col)] ? PixelState::Target
                                                      : PixelState::Start;
    }
    bool frozen_at(Position p) const { return slot_[start_.index(p.row, p.col)] < 0; }

    const Image& start_image() const { return start_; }
    const Image& target_image() const { return target_; }

    // The current composite X: start pixel where the mask says start, target
    // pixel where it says target.
    Image compose() const;

    int32_t index_of(Position p) const {
        return static_cast<int32_t>(start_.index(p.row, p.col));
    }
    Position position_of(int32_t pixel) const {
        return {pixel / start_.cols(), pixel % start_.cols()};
    }

    // --- operator toolkit -------------------------------------------------

    // Toggles one non-frozen pixel between the two states.
    void toggle(int32_t pixel, FlipLog* log = nullptr);

    // Walk conversion: start -> target if flippable, otherwise a no-op.
    // Returns whether the mask changed.
    bool convert_to_target(int32_t pixel, FlipLog* log = nullptr);

    // Reverses the logged toggles (used to reject a proposal) and clears the
    // log.
    void undo(FlipLog& log);

    // Forces every remaining pixel to target state.
    void snap_to_target();

    // Draw k distinct pixels uniformly from one side. Exactly k
    // uniform_index words; the selection order is part of the replay
    // contract. Selections reflect the side's membership at call time, so
    // callers sample both sides before applying any flips.
    void sample_start_side(int64_t k, Rng& rng, std::vector<int32_t>& out);
    void sample_target_side(int64_t k, Rng& rng, std::vector<int32_t>& out);

    // O(m*n) recount of the mask; oracle for the incremental counters.
    int64_t recount_target() const;

    // Whether two states evolve the same image pair.
    bool same_pair(const TransitionState& other) const {
        return start_ == other.start_ && target_ == other.target_;
    }

    friend bool operator==(const TransitionState&, const TransitionState&) = default;

  private:
    void swap_pool_slots(int64_t a, int64_t b);

    Image start_;
    Image target_;
    std::vector<uint8_t> in_target_;
    int64_t count_target_ = 0;
    int64_t frozen_count_ = 0;

    // Non-frozen pixel ids, partitioned so [0, start_end_) is the start side
    // and [start_end_, size) the flippable target side. slot_ is the inverse
    // map; frozen pixels hold -1.
    std::vector<int32_t> pool_;
    std::vector<int64_t> slot_;
    int64_t start_end_ = 0;
};

}  // namespace evotrans
