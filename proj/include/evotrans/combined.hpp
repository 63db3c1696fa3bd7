#pragma once

#include <optional>
#include <string_view>

#include "evotrans/mutation.hpp"
#include "evotrans/walk.hpp"

namespace evotrans {

// The eight transition processes the tool exposes. The pure walks run one
// continuous walk; the EA-walk schemes use a fresh bounded walk as the
// mutation of every generation; the Asym-walk schemes alternate asymmetric
// mutation with a walk mutation every tau generations.
enum class Scheme {
    Asym,
    Standard,
    PureUniformWalk,
    PureBiasedWalk,
    EAUniformWalk,
    EABiasedWalk,
    AsymUniformWalk,
    AsymBiasedWalk,
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::Asym,           Scheme::Standard,      Scheme::PureUniformWalk,
    Scheme::PureBiasedWalk, Scheme::EAUniformWalk, Scheme::EABiasedWalk,
    Scheme::AsymUniformWalk, Scheme::AsymBiasedWalk,
};

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

bool scheme_is_pure_walk(Scheme s);
bool scheme_has_asym(Scheme s);
// Whether the scheme uses walk mutations (EA-walk and Asym-walk families).
bool scheme_has_walk_mutation(Scheme s);
// Walk flavour for any scheme that walks; meaningless otherwise.
WalkKind scheme_walk_kind(Scheme s);

struct OperatorConfig {
    Scheme scheme = Scheme::Asym;
    AsymmetricParams asym{100.0, 50.0};
    int64_t t_max = 0;  // walk steps per walk mutation
    int64_t tau = 1;    // walk cadence of the alternating schemes
};

struct StepOutcome {
    int64_t flips_to_target = 0;  // applied to X (rejected proposals excluded)
    int64_t flips_to_start = 0;
    bool accepted = false;
};

// One random-walk mutation: a start position uniform over all m*n pixels,
// then a t_max-step walk. The proposal goes through the elitist rule, which
// a walk always passes.
StepOutcome walk_mutation(TransitionState& state, WalkKind kind, int64_t t_max,
                          Rng& rng);

// One generation of the alternating schemes: an asymmetric proposal through
// the elitist rule, then a walk mutation on generations divisible by tau.
// Generations count from 1, so tau = 1 walks every generation.
StepOutcome alternating_step(TransitionState& state, const OperatorConfig& cfg,
                             uint64_t generation, Rng& rng);

}  // namespace evotrans
