#include "mubar/errors.hpp"
#include "mubar/word.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace mubar;

TEST_CASE("word: construction freely reduces") {
    CHECK(Word(2, {1, -1}).is_identity());
    CHECK(Word(2, {1, 2, -2, -1}).is_identity());
    CHECK_EQ(Word(2, {1, 2, -2, 1}), Word(2, {1, 1}));
    CHECK_EQ(Word(3, {-3, 3, 2}).letters(), std::vector<int>{2});
}

TEST_CASE("word: constructor rejects bad letters") {
    CHECK_THROWS_AS(Word(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Word(2, {3}), std::invalid_argument);
    CHECK_THROWS_AS(Word(2, {-3}), std::invalid_argument);
}

TEST_CASE("word: parse and str round-trip") {
    const Word w = Word::parse("x1 x2^-1 x1^3", 3);
    CHECK_EQ(w.letters(), std::vector<int>{1, -2, 1, 1, 1});
    CHECK_EQ(Word::parse(w.str(), 3), w);
    CHECK_EQ(Word::identity(3).str(), "1");
    CHECK_EQ(Word::parse("1", 3), Word::identity(3));
    CHECK_THROWS_AS(Word::parse("x1 y2", 3), ParseError);
    CHECK_THROWS_AS(Word::parse("x7", 3), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("x1^0", 3), ParseError);
}

TEST_CASE("word: group operations") {
    const Word u = Word::parse("x1 x2", 3);
    const Word v = Word::parse("x2^-1 x3", 3);
    CHECK_EQ((u * v).letters(), std::vector<int>{1, 3});
    CHECK((u * u.inverse()).is_identity());
    CHECK((u.inverse() * u).is_identity());
    CHECK_EQ(u.inverse().letters(), std::vector<int>{-2, -1});

    const Word c = Word::parse("x3", 3);
    CHECK_EQ(u.conjugated_by(c), c * u * c.inverse());
}

TEST_CASE("word: exponent sums") {
    const Word w = Word::parse("x1 x2^-1 x1^3 x2", 3);
    CHECK_EQ(w.exponent_sum(1), 4);
    CHECK_EQ(w.exponent_sum(2), 0);
    CHECK_EQ(w.exponent_sum(3), 0);
}

TEST_CASE("word: generator conjugate detection") {
    const Word conj = Word(3, {2, -1, 3, 1, -2});
    const auto gc = conj.generator_conjugate();
    REQUIRE(gc.has_value());
    CHECK_EQ(gc->second, 3);
    CHECK_EQ(gc->first, Word(3, {2, -1}));

    const Word plain = Word::generator(3, 2);
    const auto gp = plain.generator_conjugate();
    REQUIRE(gp.has_value());
    CHECK(gp->first.is_identity());
    CHECK_EQ(gp->second, 2);

    CHECK_FALSE(Word(3, {1, 2}).generator_conjugate().has_value());
    CHECK_FALSE(Word(3, {-1}).generator_conjugate().has_value());
    CHECK_FALSE(Word(3, {2, -1, 3, 1, -3, -2}).generator_conjugate().has_value());
}

TEST_CASE("word: commutator") {
    const Word u = Word::parse("x1", 2);
    const Word v = Word::parse("x2", 2);
    CHECK_EQ(commutator(u, v).letters(), std::vector<int>{1, 2, -1, -2});
    CHECK(commutator(u, u).is_identity());
}
