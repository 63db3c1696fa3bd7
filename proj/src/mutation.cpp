#include "evotrans/mutation.hpp"

#include <algorithm>

namespace evotrans {

namespace {

// Flip each start-side pixel with probability p_s and each flippable
// target-side pixel with probability p_t, all decisions independent.
// Sampling a Binomial count and then a uniform distinct subset realises
// exactly the product of per-pixel Bernoullis.
//
// Word order: start count, start picks, target count, target picks. Both
// sides are selected before any flip is applied so the selections are
// functions of the pre-invocation state.
MutationResult two_sided_flip(TransitionState& state, double p_s, double p_t,
                              Rng& rng, FlipLog* log) {
    const int64_t k_s = rng.binomial(state.count_start(), p_s);
    std::vector<int32_t> picks;
    picks.reserve(k_s);
    state.sample_start_side(k_s, rng, picks);

    const int64_t k_t = rng.binomial(state.flippable_target_count(), p_t);
    picks.reserve(k_s + k_t);
    state.sample_target_side(k_t, rng, picks);

    for (const int32_t pixel : picks) {
        state.toggle(pixel, log);
    }
    return {k_s, k_t};
}

}  // namespace

MutationResult standard_mutation(TransitionState& state, Rng& rng, FlipLog* log) {
    const double p = 1.0 / static_cast<double>(state.pixel_count());
    return two_sided_flip(state, p, p, rng, log);
}

MutationResult asymmetric_mutation(TransitionState& state,
                                   const AsymmetricParams& params, Rng& rng,
                                   FlipLog* log) {
    const int64_t n_s = state.count_start();
    const int64_t n_t = state.count_target();
    const double p_s =
        n_s > 0 ? std::min(1.0, params.c_s / (2.0 * static_cast<double>(n_s))) : 0.0;
    const double p_t =
        n_t > 0 ? std::min(1.0, params.c_t / (2.0 * static_cast<double>(n_t))) : 0.0;
    return two_sided_flip(state, p_s, p_t, rng, log);
}

}  // namespace evotrans
