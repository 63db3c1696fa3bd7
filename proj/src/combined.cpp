#include "evotrans/combined.hpp"

namespace evotrans {

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Asym: return "asym";
        case Scheme::Standard: return "standard";
        case Scheme::PureUniformWalk: return "uniform-walk";
        case Scheme::PureBiasedWalk: return "biased-walk";
        case Scheme::EAUniformWalk: return "ea-uniform-walk";
        case Scheme::EABiasedWalk: return "ea-biased-walk";
        case Scheme::AsymUniformWalk: return "asym-uniform-walk";
        case Scheme::AsymBiasedWalk: return "asym-biased-walk";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    for (const Scheme s : kAllSchemes) {
        if (scheme_name(s) == name) return s;
    }
    return std::nullopt;
}

bool scheme_is_pure_walk(Scheme s) {
    return s == Scheme::PureUniformWalk || s == Scheme::PureBiasedWalk;
}

bool scheme_has_asym(Scheme s) {
    return s == Scheme::Asym || s == Scheme::AsymUniformWalk ||
           s == Scheme::AsymBiasedWalk;
}

bool scheme_has_walk_mutation(Scheme s) {
    return s == Scheme::EAUniformWalk || s == Scheme::EABiasedWalk ||
           s == Scheme::AsymUniformWalk || s == Scheme::AsymBiasedWalk;
}

WalkKind scheme_walk_kind(Scheme s) {
    switch (s) {
        case Scheme::PureBiasedWalk:
        case Scheme::EABiasedWalk:
        case Scheme::AsymBiasedWalk:
            return WalkKind::Biased;
        default:
            return WalkKind::Uniform;
    }
}

StepOutcome walk_mutation(TransitionState& state, WalkKind kind, int64_t t_max,
                          Rng& rng) {
    const int32_t start =
        static_cast<int32_t>(rng.uniform_index(state.pixel_count()));
    const int64_t converted =
        run_walk(state, state.position_of(start), t_max, kind, rng);
    // Walks only add target pixels, so the elitist rule accepts.
    return {converted, 0, true};
}

StepOutcome alternating_step(TransitionState& state, const OperatorConfig& cfg,
                             uint64_t generation, Rng& rng) {
    FlipLog log;
    const MutationResult m = asymmetric_mutation(state, cfg.asym, rng, &log);
    StepOutcome out;
    if (m.delta() >= 0) {
        out.flips_to_target = m.flips_to_target;
        out.flips_to_start = m.flips_to_start;
        out.accepted = true;
    } else {
        state.undo(log);
    }
    if (generation % static_cast<uint64_t>(cfg.tau) == 0) {
        const StepOutcome w =
            walk_mutation(state, scheme_walk_kind(cfg.scheme), cfg.t_max, rng);
        out.flips_to_target += w.flips_to_target;
        out.accepted = true;
    }
    return out;
}

}  // namespace evotrans
