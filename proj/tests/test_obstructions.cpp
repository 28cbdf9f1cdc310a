#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/obstructions.hpp"
#include "mubar/operators.hpp"

#include <doctest.h>

#include <optional>

using namespace mubar;

TEST_CASE("obstructions: solvability threshold") {
    // Smallest n >= 0 with 2^(n+2) - 1 >= first length.
    CHECK_EQ(solvability_obstruction(2), std::optional<int>{0});
    CHECK_EQ(solvability_obstruction(3), std::optional<int>{0});
    CHECK_EQ(solvability_obstruction(4), std::optional<int>{1});
    CHECK_EQ(solvability_obstruction(7), std::optional<int>{1});
    CHECK_EQ(solvability_obstruction(8), std::optional<int>{2});
    CHECK_EQ(solvability_obstruction(15), std::optional<int>{2});
    CHECK_EQ(solvability_obstruction(16), std::optional<int>{3});
    CHECK_FALSE(solvability_obstruction(std::nullopt).has_value());
}

TEST_CASE("obstructions: grope height threshold") {
    // Smallest height h >= 1 with 2^h >= first length.
    CHECK_EQ(grope_obstruction(2), std::optional<int>{1});
    CHECK_EQ(grope_obstruction(3), std::optional<int>{2});
    CHECK_EQ(grope_obstruction(4), std::optional<int>{2});
    CHECK_EQ(grope_obstruction(5), std::optional<int>{3});
    CHECK_EQ(grope_obstruction(8), std::optional<int>{3});
    CHECK_EQ(grope_obstruction(9), std::optional<int>{4});
    CHECK_FALSE(grope_obstruction(std::nullopt).has_value());
}

TEST_CASE("obstructions: bipolarity matches solvability") {
    for (int len = 2; len <= 20; ++len)
        CHECK_EQ(bipolarity_obstruction(len), solvability_obstruction(len));
}

TEST_CASE("obstructions: cobordism threshold") {
    // Smallest k >= 1 with 2k >= first length.
    CHECK_EQ(cobordism_obstruction(2), std::optional<int>{1});
    CHECK_EQ(cobordism_obstruction(3), std::optional<int>{2});
    CHECK_EQ(cobordism_obstruction(4), std::optional<int>{2});
    CHECK_EQ(cobordism_obstruction(6), std::optional<int>{3});
    CHECK_EQ(cobordism_obstruction(7), std::optional<int>{4});
    CHECK_FALSE(cobordism_obstruction(std::nullopt).has_value());
}

TEST_CASE("obstructions: report wires the scan through") {
    FirstNonvanishing hit;
    hit.length = 6;
    hit.witness = IndexSeq{1, 1, 2, 2, 3, 2};
    hit.value = Int(1);
    const ObstructionReport r = obstruction_report(hit, 6);
    CHECK_EQ(r.first_nonvanishing_length, std::optional<int>{6});
    CHECK_EQ(r.witness, hit.witness);
    CHECK_EQ(r.witness_value, Int(1));
    CHECK_EQ(r.scanned_max_length, 6);
    CHECK_EQ(r.solvable_excluded_from, std::optional<int>{1});
    CHECK_EQ(r.grope_excluded_from, std::optional<int>{3});
    CHECK_EQ(r.bipolar_excluded_from, std::optional<int>{1});
    CHECK_EQ(r.cobordism_excluded_from, std::optional<int>{3});

    const ObstructionReport none = obstruction_report(std::nullopt, 4);
    CHECK_FALSE(none.first_nonvanishing_length.has_value());
    CHECK_FALSE(none.solvable_excluded_from.has_value());
    CHECK_FALSE(none.grope_excluded_from.has_value());
    CHECK_FALSE(none.bipolar_excluded_from.has_value());
    CHECK_FALSE(none.cobordism_excluded_from.has_value());
    CHECK_EQ(none.scanned_max_length, 4);
}

TEST_CASE("obstructions: twist family members are not 2-cobordant") {
    const MuTable two(wirtinger_peripheral(twisted_whitehead(2), 5), 4);
    const MuTable four(wirtinger_peripheral(twisted_whitehead(4), 5), 4);

    // All invariants through length 2 agree (all linking numbers vanish).
    const auto k1 = kcobordism_check(two, four, 1);
    CHECK(k1.consistent);

    // The first length-4 invariant differs: mu(1122) is -2 against -4.
    const auto k2 = kcobordism_check(two, four, 2);
    CHECK_FALSE(k2.consistent);
    CHECK_EQ(k2.witness, IndexSeq{1, 1, 2, 2});

    const auto self = kcobordism_check(two, two, 2);
    CHECK(self.consistent);
}
