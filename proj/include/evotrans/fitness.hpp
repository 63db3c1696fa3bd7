#pragma once

#include <compare>

#include "evotrans/state.hpp"

namespace evotrans {

// f(X, T): the number of pixels where the composite shows the target.
struct Fitness {
    int64_t agree_count = 0;

    friend auto operator<=>(const Fitness&, const Fitness&) = default;
};

// O(1) via the state's cached count. Debug builds cross-check against a
// full recount.
inline Fitness fitness(const TransitionState& state) {
    assert(state.count_target() == state.recount_target());
    return {state.count_target()};
}

// Elitist (1+1) acceptance: the proposal replaces the current state iff its
// fitness is at least as high. Ties are accepted, which is load-bearing for
// the asymmetric operator's drift. Throws std::logic_error when the states
// do not share an image pair.
const TransitionState& accept(const TransitionState& current,
                              const TransitionState& proposal);

}  // namespace evotrans
