#include "evotrans/fitness.hpp"

#include <stdexcept>

namespace evotrans {

const TransitionState& accept(const TransitionState& current,
                              const TransitionState& proposal) {
    if (!current.same_pair(proposal)) {
        throw std::logic_error("accept: states evolve different image pairs");
    }
    return fitness(proposal) >= fitness(current) ? proposal : current;
}

}  // namespace evotrans
