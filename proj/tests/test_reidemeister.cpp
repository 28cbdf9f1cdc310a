#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/operators.hpp"
#include "mubar/reidemeister.hpp"

#include <doctest.h>

using namespace mubar;

namespace {

PDCode hopf() { return closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential(); }
PDCode whitehead() { return twisted_whitehead(1).relabeled_sequential(); }

// Raw mu is only well defined where delta vanishes; delta and the residue
// mubar are compared everywhere.
bool same_invariants(const PDCode& a, const PDCode& b) {
    const MuTable ta(wirtinger_peripheral(a, 4), 3);
    const MuTable tb(wirtinger_peripheral(b, 4), 3);
    for (const auto& e : ta.entries()) {
        if (tb.delta(e.index) != e.delta || tb.mubar(e.index) != e.mubar) return false;
        if (e.delta == 0 && tb.mu(e.index) != e.mu) return false;
    }
    return true;
}

} // namespace

TEST_CASE("reidemeister: kink insertion and removal round-trip") {
    const PDCode pd = hopf();
    for (int sign : {+1, -1})
        for (bool over_first : {true, false}) {
            const PDCode kinked = r1_insert(pd, 1, sign, over_first);
            CHECK_EQ(kinked.crossings().size(), pd.crossings().size() + 1);
            CHECK_EQ(kinked.num_components(), pd.num_components());
            CHECK_EQ(kinked.self_writhe(1), sign);
            const int added = static_cast<int>(kinked.crossings().size()) - 1;
            const PDCode back = r1_remove(kinked, added);
            CHECK_EQ(back.relabeled_sequential(), pd);
        }
    CHECK_THROWS_AS(r1_remove(pd, 0), ValidationError);
}

TEST_CASE("reidemeister: poke insertion and removal round-trip") {
    const PDCode pd = whitehead();
    const PDCode poked = r2_insert(pd, 9, 6, +1);
    CHECK_EQ(poked.crossings().size(), pd.crossings().size() + 2);
    const int a = static_cast<int>(poked.crossings().size()) - 2;
    const PDCode back = r2_remove(poked, a, a + 1);
    CHECK_EQ(back.relabeled_sequential(), pd);

    CHECK_THROWS_AS(r2_insert(pd, 3, 3), ValidationError);
    CHECK_THROWS_AS(r2_remove(pd, 0, 1), ValidationError);
}

TEST_CASE("reidemeister: moves preserve low-order invariants") {
    const PDCode pd = whitehead();
    CHECK(same_invariants(pd, r1_insert(pd, 2, -1, false)));
    CHECK(same_invariants(pd, r2_insert(pd, 9, 6, +1)));
}

TEST_CASE("reidemeister: slide across a poked triangle") {
    const PDCode pd = whitehead();
    // Poking arc 9 over arc 6 opens triangular faces along both new arcs.
    const PDCode poked = r2_insert(pd, 9, 6, +1);
    for (int middle : {6, 9}) {
        const PDCode slid = r3_slide(poked, middle);
        CHECK_EQ(slid.crossings().size(), poked.crossings().size());
        CHECK_EQ(slid.num_components(), poked.num_components());
        CHECK_EQ(slid.linking_matrix(), poked.linking_matrix());
        CHECK(same_invariants(poked, slid));
    }
}

TEST_CASE("reidemeister: slide requires a genuine triangular face") {
    // Poking arc 1 over arc 4 leaves the strand of arc 12 bordering a
    // quadrilateral and a 9-gon.  Pairwise-adjacent crossings are not
    // enough: rewiring here used to change mubar(121), so the slide must
    // refuse the site outright.
    const PDCode poked = r2_insert(whitehead(), 1, 4);
    CHECK_THROWS_AS(r3_slide(poked, 12), ValidationError);
}

TEST_CASE("reidemeister: slide rejects mixed over and under strands") {
    // In the bare whitehead diagram every arc either fails the uniform
    // over/under test or lacks a triangle; no slide site exists at all.
    const PDCode pd = whitehead();
    for (int arc = 1; arc <= pd.max_arc_label(); ++arc)
        CHECK_THROWS_AS(r3_slide(pd, arc), ValidationError);
}
