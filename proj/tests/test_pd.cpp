#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/pd_code.hpp"

#include <doctest.h>

using namespace mubar;

namespace {

PDCode hopf() { return closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential(); }

} // namespace

TEST_CASE("pd: crossing slot layout follows the sign") {
    const Crossing pos = make_crossing(1, 2, 3, 4, +1);
    CHECK_EQ(pos.arcs, std::array<int, 4>{1, 4, 2, 3});
    CHECK_EQ(pos.under_in(), 1);
    CHECK_EQ(pos.under_out(), 2);
    CHECK_EQ(pos.over_in(), 3);
    CHECK_EQ(pos.over_out(), 4);

    const Crossing neg = make_crossing(1, 2, 3, 4, -1);
    CHECK_EQ(neg.arcs, std::array<int, 4>{1, 3, 2, 4});
    CHECK_EQ(neg.over_in(), 3);
    CHECK_EQ(neg.over_out(), 4);
}

TEST_CASE("pd: hopf link basics") {
    const PDCode pd = hopf();
    CHECK_EQ(pd.num_components(), 2);
    CHECK_EQ(pd.crossings().size(), 2);
    CHECK_EQ(pd.linking_number(1, 2), 1);
    CHECK_EQ(pd.linking_number(2, 1), 1);
    CHECK_EQ(pd.self_writhe(1), 0);
    CHECK_EQ(pd.linking_matrix(),
             std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    CHECK_EQ(pd.max_arc_label(), 4);
    for (const auto& cycle : pd.components())
        for (int arc : cycle) CHECK(pd.component_of(arc) >= 1);
}

TEST_CASE("pd: crossing-free circles have no passage") {
    const PDCode unlink({}, {{1}, {2}});
    CHECK_EQ(unlink.num_components(), 2);
    CHECK_FALSE(unlink.passage_from(1).has_value());
    CHECK_EQ(unlink.linking_number(1, 2), 0);
}

TEST_CASE("pd: validation rejects inconsistent data") {
    const PDCode pd = hopf();
    auto crossings = pd.crossings();
    auto components = pd.components();

    SUBCASE("arc multiplicity") {
        crossings[0].arcs[0] = crossings[0].arcs[2];
        CHECK_THROWS_AS(PDCode(crossings, components), ValidationError);
    }
    SUBCASE("sign contradicts orientations") {
        crossings[0].sign = -crossings[0].sign;
        CHECK_THROWS_AS(PDCode(crossings, components), ValidationError);
    }
    SUBCASE("component cycles do not match the passages") {
        // Splice the two 2-arc cycles into crosswise pairs.
        const std::vector<std::vector<int>> crossed = {
            {components[0][0], components[1][1]},
            {components[1][0], components[0][1]}};
        CHECK_THROWS_AS(PDCode(crossings, crossed), ValidationError);
    }
    SUBCASE("merged component cycle") {
        const std::vector<std::vector<int>> merged = {
            {components[0][0], components[0][1], components[1][0], components[1][1]}};
        CHECK_THROWS_AS(PDCode(crossings, merged), ValidationError);
    }
}

TEST_CASE("pd: from_crossings rederives declared cycles") {
    const PDCode pd = hopf();
    const PDCode derived = PDCode::from_crossings(pd.crossings());
    CHECK_EQ(derived, pd);
    const PDCode extra = PDCode::from_crossings(pd.crossings(), 2);
    CHECK_EQ(extra.num_components(), 4);
    CHECK_FALSE(extra.passage_from(extra.components()[3][0]).has_value());
}

TEST_CASE("pd: reversing a component flips mixed linking") {
    const PDCode pd = hopf();
    const PDCode rev = pd.reversed_component(1);
    CHECK_EQ(rev.linking_number(1, 2), -1);
    const PDCode back = rev.reversed_component(1);
    CHECK_EQ(back.relabeled_sequential(), pd.relabeled_sequential());
}

TEST_CASE("pd: moving a component permutes the linking matrix") {
    // Closure of s1^2 on three strands: components {1}, {2}, {3} with
    // lk(1,2) = 1 and component 3 split off.
    const PDCode pd = closure_diagram(BraidWord(3, {1, 1})).relabeled_sequential();
    REQUIRE_EQ(pd.num_components(), 3);
    CHECK_EQ(pd.linking_matrix(),
             std::vector<std::vector<long long>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    const PDCode moved = pd.with_component_moved(1, 3);
    CHECK_EQ(moved.linking_matrix(),
             std::vector<std::vector<long long>>{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
}

TEST_CASE("pd: sequential relabeling is idempotent") {
    const PDCode pd = closure_diagram(BraidWord(3, {2, -1, 2, -1})).relabeled_sequential();
    CHECK_EQ(pd.relabeled_sequential(), pd);
    int expect = 1;
    for (const auto& cycle : pd.components())
        for (int arc : cycle) CHECK_EQ(arc, expect++);
}
