#include "mubar/series.hpp"
#include "mubar/word.hpp"

#include <doctest.h>

#include <optional>
#include <stdexcept>

using namespace mubar;

TEST_CASE("series: monomial parse and str") {
    CHECK_EQ(Monomial{{1, 1, 2, 2}}.str(), "X1X1X2X2");
    CHECK_EQ(Monomial::parse("1122").indices, std::vector<int>{1, 1, 2, 2});
    CHECK_EQ(Monomial::parse("10.1.2").indices, std::vector<int>{10, 1, 2});
    CHECK_EQ(Monomial{}.degree(), 0);
    CHECK_EQ(Monomial{}.str(), "1");
}

TEST_CASE("series: zero, one and variables") {
    const auto z = TruncatedSeries::zero(2, 4);
    const auto o = TruncatedSeries::one(2, 4);
    const auto x = TruncatedSeries::variable(2, 4, 1);
    CHECK(z.is_zero());
    CHECK(o.is_one());
    CHECK_FALSE(x.is_one());
    CHECK_EQ(x.linear_coefficient(1), Int(1));
    CHECK_EQ(x.linear_coefficient(2), Int(0));
    CHECK_EQ(x.min_positive_degree(), std::optional<int>{1});
    CHECK_FALSE(o.min_positive_degree().has_value());
}

TEST_CASE("series: product expands binomials") {
    const auto o = TruncatedSeries::one(2, 3);
    const auto x1 = TruncatedSeries::variable(2, 3, 1);
    const auto x2 = TruncatedSeries::variable(2, 3, 2);
    const auto p = (o + x1) * (o + x2);
    CHECK_EQ(p.coefficient(Monomial{}), Int(1));
    CHECK_EQ(p.coefficient(Monomial{{1}}), Int(1));
    CHECK_EQ(p.coefficient(Monomial{{2}}), Int(1));
    CHECK_EQ(p.coefficient(Monomial{{1, 2}}), Int(1));
    CHECK_EQ(p.coefficient(Monomial{{2, 1}}), Int(0));
}

TEST_CASE("series: generator images multiply to one") {
    for (int i : {1, 2, 3}) {
        const auto pos = TruncatedSeries::generator_image(3, 6, i, +1);
        const auto neg = TruncatedSeries::generator_image(3, 6, i, -1);
        CHECK((pos * neg).is_one());
        CHECK((neg * pos).is_one());
    }
    const auto neg = TruncatedSeries::generator_image(2, 4, 1, -1);
    CHECK_EQ(neg.coefficient(Monomial{{1}}), Int(-1));
    CHECK_EQ(neg.coefficient(Monomial{{1, 1}}), Int(1));
    CHECK_EQ(neg.coefficient(Monomial{{1, 1, 1}}), Int(-1));
}

TEST_CASE("series: inverse and pow") {
    const Word w = Word::parse("x1 x2 x1^-1 x2 x1", 2);
    const auto s = magnus_expand(w, 5);
    CHECK((s * s.inverse()).is_one());
    CHECK((s.inverse() * s).is_one());
    CHECK_EQ(s.pow(3), s * s * s);
    CHECK_EQ(s.pow(-2), (s * s).inverse());
    CHECK(s.pow(0).is_one());
    CHECK_THROWS_AS(TruncatedSeries::zero(2, 3).inverse(), std::invalid_argument);
}

TEST_CASE("series: truncation drops high terms") {
    const auto s = magnus_expand(Word::parse("x1 x2", 2), 5);
    CHECK_EQ(s.coefficient(Monomial{{1, 2}}), Int(1));
    const auto t3 = s.truncated(3);
    CHECK_EQ(t3.degree_bound(), 3);
    CHECK_EQ(t3.coefficient(Monomial{{1, 2}}), Int(1));
    const auto t2 = s.truncated(2);
    CHECK_EQ(t2.degree_bound(), 2);
    CHECK_EQ(t2.coefficient(Monomial{{1}}), Int(1));
    // Out-of-bound queries are refused, never silently zero.
    CHECK_THROWS_AS((void)t2.coefficient(Monomial{{1, 2}}), std::invalid_argument);
}

TEST_CASE("series: operands must share shape") {
    const auto a = TruncatedSeries::one(2, 3);
    CHECK_THROWS_AS(a + TruncatedSeries::one(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(a * TruncatedSeries::one(3, 3), std::invalid_argument);
}

TEST_CASE("series: magnus expansion of a commutator") {
    const Word c = commutator(Word::parse("x1", 2), Word::parse("x2", 2));
    const auto s = magnus_expand(c, 3);
    CHECK_EQ(s.coefficient(Monomial{}), Int(1));
    CHECK_EQ(s.coefficient(Monomial{{1}}), Int(0));
    CHECK_EQ(s.coefficient(Monomial{{2}}), Int(0));
    CHECK_EQ(s.coefficient(Monomial{{1, 2}}), Int(1));
    CHECK_EQ(s.coefficient(Monomial{{2, 1}}), Int(-1));
}

TEST_CASE("series: coefficient extraction routes agree") {
    const Word w = Word::parse("x1 x2^-1 x3 x1^2 x2 x3^-1 x1^-1", 3);
    for (const auto& mono : {Monomial{{1}}, Monomial{{1, 2}}, Monomial{{3, 1, 2}},
                             Monomial{{1, 1, 2, 3}}, Monomial{{2, 2, 2, 2}}}) {
        const Int dp = magnus_coefficient_dp(w, mono);
        const Int full = magnus_coefficient_full(w, mono);
        CHECK_EQ(dp, full);
        CHECK_EQ(magnus_coefficient(w, mono), dp);
    }
}

TEST_CASE("series: sorted terms are ordered by degree then index") {
    const auto s = magnus_expand(Word::parse("x2 x1", 2), 3);
    const auto terms = s.sorted_terms();
    REQUIRE_FALSE(terms.empty());
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const auto& a = terms[k - 1].first;
        const auto& b = terms[k].first;
        const bool ordered =
            a.degree() < b.degree() || (a.degree() == b.degree() && a.indices < b.indices);
        CHECK(ordered);
    }
}

TEST_CASE("series: lower central series residue degrees") {
    const Word x1 = Word::parse("x1", 3);
    const Word x2 = Word::parse("x2", 3);
    CHECK_EQ(lcs_residue_degree(x1, 5), std::optional<int>{1});
    CHECK_EQ(lcs_residue_degree(commutator(x1, x2), 5), std::optional<int>{2});
    CHECK_FALSE(lcs_residue_degree(Word::identity(3), 5).has_value());
}
