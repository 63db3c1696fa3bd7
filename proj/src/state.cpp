#include "evotrans/state.hpp"

#include <string>

namespace evotrans {

namespace {

std::string dims_str(Dims d) {
    return std::to_string(d.cols) + "x" + std::to_string(d.rows);
}

}  // namespace

TransitionState::TransitionState(Image start, Image target)
    : start_(std::move(start)), target_(std::move(target)) {
    if (start_.dims() != target_.dims()) {
        throw ConfigError("start image is " + dims_str(start_.dims()) +
                          " but target image is " + dims_str(target_.dims()) +
                          "; the pair must match");
    }
    const int64_t total = pixel_count();
    in_target_.assign(total, 0);
    slot_.assign(total, -1);
    pool_.reserve(total);

    // Frozen pixels (start == target) begin in target state and stay out of
    // the sampling pool; everything else starts on the start side.
    for (int64_t i = 0; i < total; ++i) {
        if (start_.pixels()[i] == target_.pixels()[i]) {
            in_target_[i] = 1;
            ++count_target_;
            ++frozen_count_;
        } else {
            slot_[i] = static_cast<int64_t>(pool_.size());
            pool_.push_back(static_cast<int32_t>(i));
        }
    }
    start_end_ = static_cast<int64_t>(pool_.size());
}

Image TransitionState::compose() const {
    Image out(rows(), cols());
    const auto& s = start_.pixels();
    const auto& t = target_.pixels();
    auto& o = out.pixels();
    for (int64_t i = 0; i < pixel_count(); ++i) {
        o[i] = in_target_[i] ? t[i] : s[i];
    }
    return out;
}

void TransitionState::swap_pool_slots(int64_t a, int64_t b) {
    if (a == b) return;
    std::swap(pool_[a], pool_[b]);
    slot_[pool_[a]] = a;
    slot_[pool_[b]] = b;
}

void TransitionState::toggle(int32_t pixel, FlipLog* log) {
    const int64_t s = slot_[pixel];
    assert(s >= 0 && "frozen pixels are never toggled");
    if (in_target_[pixel]) {
        assert(s >= start_end_);
        swap_pool_slots(s, start_end_);
        ++start_end_;
        in_target_[pixel] = 0;
        --count_target_;
    } else {
        assert(s < start_end_);
        swap_pool_slots(s, start_end_ - 1);
        --start_end_;
        in_target_[pixel] = 1;
        ++count_target_;
    }
    if (log) log->push_back(pixel);
}

bool TransitionState::convert_to_target(int32_t pixel, FlipLog* log) {
    if (slot_[pixel] < 0 || in_target_[pixel]) return false;
    toggle(pixel, log);
    return true;
}

void TransitionState::undo(FlipLog& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        toggle(*it);
    }
    log.clear();
}

void TransitionState::snap_to_target() {
    while (start_end_ > 0) {
        toggle(pool_[start_end_ - 1]);
    }
}

void TransitionState::sample_start_side(int64_t k, Rng& rng, std::vector<int32_t>& out) {
    assert(k <= start_end_);
    // Partial Fisher-Yates confined to the start region: selections move to
    // the region's tail, so each pick is uniform over the pixels not yet
    // chosen.
    for (int64_t i = 0; i < k; ++i) {
        const int64_t pick = static_cast<int64_t>(rng.uniform_index(start_end_ - i));
        const int64_t tail = start_end_ - 1 - i;
        swap_pool_slots(pick, tail);
        out.push_back(pool_[tail]);
    }
}

void TransitionState::sample_target_side(int64_t k, Rng& rng, std::vector<int32_t>& out) {
    const int64_t size = flippable_target_count();
    assert(k <= size);
    const int64_t end = static_cast<int64_t>(pool_.size());
    for (int64_t i = 0; i < k; ++i) {
        const int64_t pick = start_end_ + static_cast<int64_t>(rng.uniform_index(size - i));
        const int64_t tail = end - 1 - i;
        swap_pool_slots(pick, tail);
        out.push_back(pool_[tail]);
    }
}

int64_t TransitionState::recount_target() const {
    int64_t n = 0;
    for (const uint8_t v : in_target_) n += v;
    return n;
}

}  // namespace evotrans
