#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>

using namespace mubar;

namespace {

PeripheralData br_data(int bound = 4) {
    return braid_peripheral(BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3), bound);
}

} // namespace

TEST_CASE("milnor: index sequence text round-trips") {
    CHECK_EQ(index_seq_str(IndexSeq{1, 1, 2, 2}), "1122");
    CHECK_EQ(index_seq_str(IndexSeq{10, 1, 2}), "10.1.2");
    CHECK_EQ(parse_index_seq("1122", 2), IndexSeq{1, 1, 2, 2});
    CHECK_EQ(parse_index_seq("10.1.2", 12), IndexSeq{10, 1, 2});
    CHECK_THROWS_AS(parse_index_seq("12x", 3), ParseError);
    CHECK_THROWS_AS(parse_index_seq("124", 3), ValidationError);
    CHECK_THROWS_AS(parse_index_seq("1", 3), ValidationError);
}

TEST_CASE("milnor: scan cost counts sequences by length") {
    CHECK_EQ(scan_cost(2, 2), 4);
    CHECK_EQ(scan_cost(2, 3), 12);
    CHECK_EQ(scan_cost(3, 2), 9);
    CHECK_EQ(scan_cost(3, 3), 36);
    // Saturates instead of wrapping.
    const auto max = std::numeric_limits<unsigned long long>::max();
    CHECK_EQ(scan_cost(64, 64), max);
    CHECK_EQ(scan_cost(128, 128), max);
    CHECK(scan_cost(12, 12) < max);
}

TEST_CASE("milnor: indeterminacy set drops entries and rotates") {
    const auto set = indeterminacy_set(IndexSeq{1, 2, 3});
    const std::vector<IndexSeq> expect = {{1, 3}, {2, 3}, {3, 1}, {3, 2}};
    CHECK_EQ(set, expect);
    CHECK(indeterminacy_set(IndexSeq{1, 2}).empty());
}

TEST_CASE("milnor: borromean-style values on the braid closure") {
    const PeripheralData data = br_data();
    CHECK_EQ(mu(data, IndexSeq{1, 2}), Int(0));
    CHECK_EQ(mu(data, IndexSeq{1, 2, 3}), Int(1));
    CHECK_EQ(delta(data, IndexSeq{1, 2, 3}), Int(0));
    CHECK_EQ(mubar::mubar(data, IndexSeq{1, 2, 3}), Int(1));
}

TEST_CASE("milnor: residue collapses under positive indeterminacy") {
    const PeripheralData hopf = braid_peripheral(BraidWord(2, {1, 1}), 4);
    CHECK_EQ(mu(hopf, IndexSeq{1, 2}), Int(1));
    CHECK_EQ(delta(hopf, IndexSeq{1, 1, 2}), Int(1));
    CHECK_EQ(mubar::mubar(hopf, IndexSeq{1, 1, 2}), Int(0));
}

TEST_CASE("milnor: long sequences use the exact word when kept") {
    const PDCode hopf = closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential();
    const PeripheralData with_words = wirtinger_peripheral(hopf, 3);
    CHECK_NOTHROW((void)mu(with_words, IndexSeq{1, 2, 1, 2, 1}));

    WirtingerOptions off;
    off.keep_words = false;
    const PeripheralData without = wirtinger_peripheral(hopf, 3, off);
    CHECK_THROWS_AS((void)mu(without, IndexSeq{1, 2, 1, 2, 1}), ValidationError);
}

TEST_CASE("milnor: first nonvanishing scan") {
    const auto hit = first_nonvanishing(br_data(), 4);
    REQUIRE(hit.has_value());
    CHECK_EQ(hit->length, 3);
    CHECK_EQ(hit->witness, IndexSeq{1, 2, 3});
    CHECK_EQ(hit->value, Int(1));

    const PeripheralData unlink = wirtinger_peripheral(PDCode({}, {{1}, {2}, {3}}), 5);
    CHECK_FALSE(first_nonvanishing(unlink, 4).has_value());
}

TEST_CASE("milnor: scan refuses to exceed its budget") {
    try {
        (void)first_nonvanishing(br_data(), 4, 5);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK_EQ(e.budget, 5);
        CHECK(e.attempted > e.budget);
    }
}

TEST_CASE("milnor: table entries are ordered and filterable") {
    const MuTable table(br_data(), 3);
    const auto all = table.entries();
    CHECK_EQ(all.size(), 9 + 27);
    for (std::size_t k = 1; k < all.size(); ++k) {
        const auto& a = all[k - 1].index;
        const auto& b = all[k].index;
        CHECK((a.size() < b.size() || (a.size() == b.size() && a <= b)));
    }
    const auto nz = table.entries(true);
    CHECK_FALSE(nz.empty());
    for (const auto& e : nz) CHECK((e.mu != 0 || e.delta != 0));

    const auto hit = table.first_nonvanishing();
    REQUIRE(hit.has_value());
    CHECK_EQ(hit->witness, IndexSeq{1, 2, 3});

    CHECK_THROWS_AS((void)table.mu(IndexSeq{1, 2, 1, 2}), ValidationError);
    CHECK_THROWS_AS((void)table.mu(IndexSeq{1, 4}), ValidationError);
}

TEST_CASE("milnor: scan result does not depend on the thread count") {
    const PeripheralData data = br_data();
    const auto one = first_nonvanishing(data, 4, kDefaultExtractionBudget, 1);
    const auto four = first_nonvanishing(data, 4, kDefaultExtractionBudget, 4);
    REQUIRE(one.has_value());
    REQUIRE(four.has_value());
    CHECK_EQ(one->witness, four->witness);
    CHECK_EQ(one->value, four->value);

    const MuTable ta(data, 3, kDefaultExtractionBudget, 1);
    const MuTable tb(data, 3, kDefaultExtractionBudget, 4);
    const auto ea = ta.entries();
    const auto eb = tb.entries();
    REQUIRE_EQ(ea.size(), eb.size());
    for (std::size_t k = 0; k < ea.size(); ++k) {
        CHECK_EQ(ea[k].index, eb[k].index);
        CHECK_EQ(ea[k].mu, eb[k].mu);
    }
}
