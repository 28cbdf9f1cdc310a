#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/operators.hpp"

#include <doctest.h>

using namespace mubar;

namespace {

PDCode hopf() { return closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential(); }

bool zero_linking(const PDCode& pd) {
    const auto lk = pd.linking_matrix();
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = 0; j < lk.size(); ++j)
            if (i != j && lk[i][j] != 0) return false;
    return true;
}

} // namespace

TEST_CASE("operators: doubling splits every component in two") {
    const PDCode bd = bing_double(hopf());
    CHECK_EQ(bd.num_components(), 4);
    CHECK(zero_linking(bd));
}

TEST_CASE("operators: doubling a single target keeps the others") {
    DoublingSpec spec;
    spec.targets = {1};
    const PDCode bd = bing_double(hopf(), spec);
    CHECK_EQ(bd.num_components(), 3);
    CHECK(zero_linking(bd));
}

TEST_CASE("operators: doubling respects the crossing cap") {
    DoublingSpec tiny;
    tiny.max_crossings = 3;
    CHECK_THROWS_AS(bing_double(hopf(), tiny), CapacityError);
}

TEST_CASE("operators: iterated doubling scales component count") {
    const PDCode pd = hopf();
    CHECK_EQ(iterated_bing_double(pd, 0).num_components(), 2);
    CHECK_EQ(iterated_bing_double(pd, 1).num_components(), 4);
    CHECK_EQ(iterated_bing_double(pd, 2).num_components(), 8);
}

TEST_CASE("operators: both clasp handednesses give unit witnesses") {
    DoublingSpec left;
    left.clasp_sign = -1;
    const PDCode a = bing_double(hopf());
    const PDCode b = bing_double(hopf(), left);
    const auto fa = first_nonvanishing(wirtinger_peripheral(a, 5), 4);
    const auto fb = first_nonvanishing(wirtinger_peripheral(b, 5), 4);
    REQUIRE(fa.has_value());
    REQUIRE(fb.has_value());
    CHECK_EQ(fa->length, 4);
    CHECK_EQ(fb->length, 4);
    CHECK_EQ(abs(fa->value), Int(1));
    CHECK_EQ(abs(fb->value), Int(1));
}

TEST_CASE("operators: twist family endpoints") {
    const PDCode w0 = twisted_whitehead(0);
    CHECK_EQ(w0.num_components(), 2);
    CHECK(zero_linking(w0));
    CHECK_FALSE(first_nonvanishing(wirtinger_peripheral(w0, 5), 4).has_value());

    const PDCode w1 = twisted_whitehead(1);
    const PeripheralData d1 = wirtinger_peripheral(w1, 5);
    CHECK(zero_linking(w1));
    CHECK_EQ(mu(d1, IndexSeq{1, 1, 2, 2}), Int(-1));
    CHECK_EQ(mu(d1, IndexSeq{1, 2, 1, 2}), Int(2));
}

TEST_CASE("operators: twist count scales the length-four invariants") {
    for (int t : {-2, -1, 3, 5}) {
        const PeripheralData d = wirtinger_peripheral(twisted_whitehead(t), 5);
        CHECK_EQ(mu(d, IndexSeq{1, 1, 2, 2}), Int(-t));
        CHECK_EQ(mu(d, IndexSeq{1, 2, 1, 2}), Int(2 * t));
    }
}

TEST_CASE("operators: commutator braid is pure with zero linking") {
    const BraidWord c = braid_commutator_link();
    CHECK_EQ(c.strands(), 3);
    CHECK(c.is_pure());
    CHECK_EQ(c.length(), 24);
    const auto lk = closure_linking_matrix(c);
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = 0; j < lk.size(); ++j)
            if (i != j) CHECK_EQ(lk[i][j], 0);
}

TEST_CASE("operators: stacking braids composes the closures") {
    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    const BraidWord stacked = br * br;
    CHECK_EQ(stacked.length(), 12);
    CHECK(stacked.is_pure());
    const PeripheralData d = wirtinger_peripheral(closure_diagram(stacked), 4);
    CHECK_EQ(mu(d, IndexSeq{1, 2, 3}), Int(2));
}
