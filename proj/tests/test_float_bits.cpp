#include <doctest.h>

#include <cmath>

#include "actcheck/float_bits.hpp"

using namespace actcheck;

TEST_CASE("field decomposition round-trips every pattern shape") {
    RandomStream rng(1);
    for (int i = 0; i < 1000000; ++i) {
        const FloatWord w{rng.next()};
        const FloatWord back = FloatWord::compose(w.sign(), w.exponent(), w.significand());
        REQUIRE(back == w);
    }
    // value reinterpretation commutes for finite numbers
    const FloatWord one = FloatWord::from_double(1.0);
    CHECK(one.raw == 0x3FF0000000000000ull);
    CHECK(one.to_double() == 1.0);
}

TEST_CASE("flip_bits on documented patterns") {
    const FloatWord one = FloatWord::from_double(1.0);
    CHECK(flip_bits(one, BitIndexSet{63}).to_double() == -1.0);
    CHECK(flip_bits(FloatWord::from_double(0.0), BitIndexSet{}).to_double() == 0.0);
    // setting bit 62 of 1.0 makes the exponent all-ones with zero significand
    const FloatWord inf = flip_bits(one, BitIndexSet{62});
    CHECK(inf.raw == 0x7FF0000000000000ull);
    CHECK(std::isinf(inf.to_double()));
}

TEST_CASE("stuck_at on documented patterns") {
    CHECK(stuck_at(FloatWord::from_double(-1.0), BitIndexSet{63}, 0).to_double() == 1.0);
    CHECK(stuck_at(FloatWord::from_double(1.0), BitIndexSet{63}, 0).to_double() == 1.0);
    CHECK(stuck_at(FloatWord::from_double(1.0), BitIndexSet{51}, 1).to_double() == 1.5);
}

TEST_CASE("xor involution, stuck idempotence, disjoint commutation") {
    RandomStream rng(2);
    for (int i = 0; i < 20000; ++i) {
        const FloatWord w{rng.next()};
        const BitIndexSet b1 = BitIndexSet::from_mask(rng.next());
        const BitIndexSet b2 = BitIndexSet::from_mask(rng.next() & ~b1.mask());

        CHECK(flip_bits(flip_bits(w, b1), b1) == w);

        for (int level : {0, 1}) {
            const FloatWord once = stuck_at(w, b1, level);
            CHECK(stuck_at(once, b1, level) == once);
            if (level == 1) CHECK((once.raw & b1.mask()) == b1.mask());
            if (level == 0) CHECK((once.raw & b1.mask()) == 0);
        }

        CHECK(flip_bits(flip_bits(w, b1), b2) == flip_bits(flip_bits(w, b2), b1));
    }
}

TEST_CASE("random_finite never yields NaN or infinity and is deterministic") {
    RandomStream rng(42);
    for (int i = 0; i < 100000; ++i) {
        const FloatWord w = random_finite(rng);
        CHECK(w.is_finite());
        CHECK(std::isfinite(w.to_double()));
    }
    RandomStream a(7), b(7);
    CHECK(random_finite(a) == random_finite(b));
}
