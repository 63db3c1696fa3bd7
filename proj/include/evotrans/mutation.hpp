#pragma once

#include "evotrans/state.hpp"

namespace evotrans {

// Constants scaling the asymmetric flip rates. The analysed operator is
// c_s = c_t = 1; the showcase preset is c_s = 100, c_t = 50. Zero disables a
// side (both zero makes the operator the identity, drawing nothing).
struct AsymmetricParams {
    double c_s = 1.0;
    double c_t = 1.0;
};

struct MutationResult {
    int64_t flips_to_target = 0;
    int64_t flips_to_start = 0;

    // Fitness change of the proposal relative to its parent.
    int64_t delta() const { return flips_to_target - flips_to_start; }
};

// Standard (1+1) mutation: every non-frozen pixel toggles independently with
// probability 1/(m*n). Applied in place; pass a log to make it revertible.
MutationResult standard_mutation(TransitionState& state, Rng& rng,
                                 FlipLog* log = nullptr);

// Asymmetric mutation: start-side pixels flip with probability
// min(1, c_s/(2|X|_S)), non-frozen target-side pixels with probability
// min(1, c_t/(2|X|_T)). Both rates use the counts as they were when the call
// began, so all decisions within one invocation are independent.
MutationResult asymmetric_mutation(TransitionState& state,
                                   const AsymmetricParams& params, Rng& rng,
                                   FlipLog* log = nullptr);

}  // namespace evotrans
