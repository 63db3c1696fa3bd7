#include "evotrans/walk.hpp"

namespace evotrans {

Position uniform_step(Position current, Dims dims, Rng& rng) {
    return torus_neighbors(current, dims)[rng.uniform_index(4)];
}

std::array<int32_t, 4> neighbor_weights(const Image& target, Position from) {
    const auto nb = torus_neighbors(from, target.dims());
    std::array<int32_t, 4> w;
    for (int i = 0; i < 4; ++i) {
        w[i] = color_distance(target, from, nb[i]);
    }
    return w;
}

std::array<double, 4> biased_step_distribution(const Image& target, Position from) {
    const auto w = neighbor_weights(target, from);
    const int64_t total = int64_t{w[0]} + w[1] + w[2] + w[3];
    if (total == 0) {
        return {0.25, 0.25, 0.25, 0.25};
    }
    std::array<double, 4> p;
    for (int i = 0; i < 4; ++i) {
        p[i] = static_cast<double>(w[i]) / static_cast<double>(total);
    }
    return p;
}

Position biased_step(Position current, const Image& target, Rng& rng) {
    const auto nb = torus_neighbors(current, target.dims());
    const auto w = neighbor_weights(target, current);
    const int64_t total = int64_t{w[0]} + w[1] + w[2] + w[3];
    if (total == 0) {
        // 0/0 in the weight normalisation: a constant-colour neighbourhood
        // degenerates to the uniform walk.
        return nb[rng.uniform_index(4)];
    }
    int64_t r = static_cast<int64_t>(rng.uniform_index(total));
    for (int i = 0; i < 3; ++i) {
        r -= w[i];
        if (r < 0) return nb[i];
    }
    return nb[3];
}

Position walk_step(WalkCursor& cursor, const Image& target, Rng& rng) {
    cursor.pos = cursor.kind == WalkKind::Uniform
                     ? uniform_step(cursor.pos, target.dims(), rng)
                     : biased_step(cursor.pos, target, rng);
    ++cursor.steps_taken;
    return cursor.pos;
}

int64_t run_walk(TransitionState& state, Position start, int64_t steps,
                 WalkKind kind, Rng& rng) {
    int64_t converted = state.convert_to_target(state.index_of(start)) ? 1 : 0;
    WalkCursor cursor{start, kind, 0};
    for (int64_t i = 0; i < steps; ++i) {
        const Position p = walk_step(cursor, state.target_image(), rng);
        converted += state.convert_to_target(state.index_of(p)) ? 1 : 0;
    }
    return converted;
}

}  // namespace evotrans
