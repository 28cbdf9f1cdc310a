#include "mubar/braid.hpp"
#include "mubar/errors.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace mubar;

TEST_CASE("braid: parse and str round-trip") {
    const BraidWord b = BraidWord::parse("s2 s1^-1 s2^3", 3);
    CHECK_EQ(b.letters(), std::vector<int>{2, -1, 2, 2, 2});
    CHECK_EQ(BraidWord::parse(b.str(), 3), b);
    CHECK_EQ(BraidWord::identity(3).str(), "1");
    CHECK_THROWS_AS(BraidWord::parse("t1", 3), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("s3", 3), std::invalid_argument);
}

TEST_CASE("braid: free reduction of adjacent inverses") {
    CHECK(BraidWord(3, {1, -1}).length() == 0);
    CHECK_EQ(BraidWord(3, {2, 1, -1, 2}), BraidWord(3, {2, 2}));
    const BraidWord b = BraidWord::parse("s1 s2", 3);
    CHECK((b * b.inverse()).length() == 0);
}

TEST_CASE("braid: permutation and purity") {
    const BraidWord swap = BraidWord(2, {1});
    CHECK_EQ(swap.permutation(), std::vector<int>{0, 2, 1});
    CHECK_FALSE(swap.is_pure());
    CHECK((swap * swap).is_pure());

    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    CHECK(br.is_pure());
    CHECK_EQ(br.permutation(), std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("braid: artin action on generators") {
    const BraidWord s1 = BraidWord(3, {1});
    CHECK_EQ(s1.artin_image(1), Word::parse("x1 x2 x1^-1", 3));
    CHECK_EQ(s1.artin_image(2), Word::parse("x1", 3));
    CHECK_EQ(s1.artin_image(3), Word::parse("x3", 3));

    const BraidWord s1inv = BraidWord(3, {-1});
    CHECK_EQ(s1inv.artin_image(1), Word::parse("x2", 3));
    CHECK_EQ(s1inv.artin_image(2), Word::parse("x2^-1 x1 x2", 3));
}

TEST_CASE("braid: artin action composes in reading order") {
    const BraidWord a = BraidWord(3, {1});
    const BraidWord b = BraidWord(3, {2});
    const BraidWord ab = a * b;
    // a's letters act first, then b's.
    CHECK_EQ(ab.artin_image(3), Word::parse("x2", 3));
    CHECK_EQ(ab.artin_image(2), Word::parse("x1", 3));
    for (int i : {1, 2, 3})
        CHECK_EQ(ab.artin_image(i), b.artin_image(a.artin_image(i)));
}

TEST_CASE("braid: artin action preserves products") {
    const BraidWord b = BraidWord::parse("s2 s1^-1 s2", 3);
    const Word u = Word::parse("x1 x3^-1", 3);
    const Word v = Word::parse("x2 x1", 3);
    CHECK_EQ(b.artin_image(u * v), b.artin_image(u) * b.artin_image(v));
    CHECK_EQ(b.artin_image(u.inverse()), b.artin_image(u).inverse());
}

TEST_CASE("braid: commutator and conjugation") {
    const BraidWord a = BraidWord(3, {1});
    const BraidWord b = BraidWord(3, {2});
    CHECK_EQ(commutator(a, b).letters(), std::vector<int>{1, 2, -1, -2});
    CHECK_EQ(a.conjugated_by(b), b * a * b.inverse());
    CHECK(commutator(a, a).length() == 0);
}
