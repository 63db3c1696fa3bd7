#include <doctest.h>

#include <stdexcept>

#include "evotrans/fitness.hpp"
#include "support.hpp"

using namespace evotrans;

TEST_CASE("fitness counts target-state pixels") {
    auto [s, t] = testsupport::differing_pair(4, 4, 10);
    TransitionState st(s, t);
    CHECK(fitness(st).agree_count == 0);

    for (const int32_t p : {0, 3, 7, 9, 15}) st.convert_to_target(p);
    // Independent oracle: count composite pixels that equal the target.
    const Image x = st.compose();
    int64_t agree = 0;
    for (int64_t i = 0; i < x.pixel_count(); ++i) {
        if (x.pixels()[i] == t.pixels()[i]) ++agree;
    }
    CHECK(agree == 5);
    CHECK(fitness(st).agree_count == 5);

    st.snap_to_target();
    CHECK(fitness(st).agree_count == 16);
}

TEST_CASE("acceptance keeps ties and improvements, rejects decreases") {
    auto [s, t] = testsupport::differing_pair(3, 3, 11);
    TransitionState a(s, t);
    a.convert_to_target(0);
    a.convert_to_target(1);

    TransitionState tie(s, t);
    tie.convert_to_target(4);
    tie.convert_to_target(5);
    CHECK(&accept(a, tie) == &tie);  // equal fitness: proposal wins

    TransitionState worse(s, t);
    worse.convert_to_target(4);
    CHECK(&accept(a, worse) == &a);

    TransitionState better(s, t);
    for (const int32_t p : {0, 1, 2, 3, 4}) better.convert_to_target(p);
    CHECK(&accept(a, better) == &better);
}

TEST_CASE("acceptance refuses states from different pairs") {
    auto [s1, t1] = testsupport::differing_pair(3, 3, 12);
    auto [s2, t2] = testsupport::differing_pair(3, 3, 13);
    TransitionState a(s1, t1), b(s2, t2);
    CHECK_THROWS_AS(accept(a, b), std::logic_error);
}
