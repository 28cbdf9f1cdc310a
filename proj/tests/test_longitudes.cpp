#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"

#include <doctest.h>

using namespace mubar;

TEST_CASE("longitudes: braid route reads linking off linear terms") {
    const PeripheralData data = braid_peripheral(BraidWord(2, {1, 1}), 4);
    CHECK_EQ(data.components, 2);
    CHECK_EQ(data.degree_bound, 4);
    // 0-framed: no X_i term in longitude i; linking number on the other.
    CHECK_EQ(data.series(1).linear_coefficient(1), Int(0));
    CHECK_EQ(data.series(1).linear_coefficient(2), Int(1));
    CHECK_EQ(data.series(2).linear_coefficient(2), Int(0));
    CHECK_EQ(data.series(2).linear_coefficient(1), Int(1));
    REQUIRE(data.longitude_words[0].has_value());
    CHECK_EQ(data.longitude_words[0]->exponent_sum(1), 0);
}

TEST_CASE("longitudes: braid route requires a pure braid") {
    CHECK_THROWS_AS(braid_peripheral(BraidWord(2, {1}), 3), ValidationError);
}

TEST_CASE("longitudes: wirtinger route agrees with the braid route") {
    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    const PeripheralData via_braid = braid_peripheral(br, 4);
    const PeripheralData via_diagram = wirtinger_peripheral(closure_diagram(br), 4);
    const MuTable a(via_braid, 3);
    const MuTable b(via_diagram, 3);
    for (const auto& e : a.entries()) {
        CHECK_EQ(b.mu(e.index), e.mu);
        CHECK_EQ(b.delta(e.index), e.delta);
    }
}

TEST_CASE("longitudes: staged approximation is stable at the bound") {
    const PDCode hopf = closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential();
    CHECK(stabilization_check(hopf, 3));
    CHECK(stabilization_check(hopf, 4));
}

TEST_CASE("longitudes: word budget controls the exact-word fallback") {
    const PDCode hopf = closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential();

    WirtingerOptions tiny;
    tiny.word_letter_budget = 2;
    const PeripheralData fallback = wirtinger_peripheral(hopf, 3, tiny);
    CHECK_FALSE(fallback.longitude_words[0].has_value());
    CHECK_EQ(fallback.series(1).linear_coefficient(2), Int(1));

    tiny.require_words = true;
    CHECK_THROWS_AS(wirtinger_peripheral(hopf, 3, tiny), CapacityError);

    WirtingerOptions off;
    off.keep_words = false;
    const PeripheralData series_only = wirtinger_peripheral(hopf, 3, off);
    CHECK_FALSE(series_only.longitude_words[0].has_value());

    const PeripheralData kept = wirtinger_peripheral(hopf, 3);
    REQUIRE(kept.longitude_words[0].has_value());
    CHECK_EQ(kept.longitude_words[0]->exponent_sum(1), 0);
}
