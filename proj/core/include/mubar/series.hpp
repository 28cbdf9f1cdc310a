#pragma once

#include "mubar/numeric.hpp"
#include "mubar/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mubar {

/// Noncommutative monomial X_{i_1} X_{i_2} ... X_{i_d}, leftmost factor
/// first.  Indices are 1-based variable numbers.
struct Monomial {
    std::vector<int> indices;

    int degree() const { return static_cast<int>(indices.size()); }
    bool operator==(const Monomial&) const = default;
    /// "X1X2X1"; empty monomial prints as "1".
    std::string str() const;
    /// Parses a digit string like "1122" (single-digit indices) or
    /// dot-separated "10.1.2" for larger variable numbers.
    static Monomial parse(const std::string& text);
};

/// Element of the power-series ring Z<<X_1..X_m>> truncated at total degree
/// q (exclusive: terms of degree >= q are dropped).  Sparse: only nonzero
/// coefficients are stored, grouped by degree, keyed by a fixed-width bit
/// packing of the index sequence.  The truncation degree is carried by the
/// value and must agree between operands of any binary operation.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int vars, int degree_bound);

    static TruncatedSeries zero(int vars, int degree_bound) { return {vars, degree_bound}; }
    static TruncatedSeries one(int vars, int degree_bound);
    /// The single monomial X_i.
    static TruncatedSeries variable(int vars, int degree_bound, int i);
    /// Magnus image of a generator: x_i -> 1 + X_i,
    /// x_i^-1 -> 1 - X_i + X_i^2 - ... (alternating, up to the bound).
    static TruncatedSeries generator_image(int vars, int degree_bound, int i, int sign);

    int vars() const { return vars_; }
    int degree_bound() const { return degree_bound_; }

    bool is_zero() const;
    bool is_one() const;
    /// Smallest degree >= 1 with a nonzero term, if any.
    std::optional<int> min_positive_degree() const;

    Int coefficient(const Monomial& m) const;
    /// Degree-1 coefficient of X_i.
    Int linear_coefficient(int i) const;
    void set_coefficient(const Monomial& m, Int value);

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    /// Multiplicative inverse; requires constant term +1 or -1.
    TruncatedSeries inverse() const;
    /// Integer power, negative allowed when invertible.
    TruncatedSeries pow(long long n) const;

    /// Copy truncated to a smaller bound.
    TruncatedSeries truncated(int new_bound) const;

    /// Terms sorted by (degree, lexicographic index sequence).
    std::vector<std::pair<Monomial, Int>> sorted_terms() const;

    /// Stable debug form, e.g. "1 + 2*X1X2 - 1*X2X1"; zero prints as "0".
    std::string str() const;

    bool operator==(const TruncatedSeries& rhs) const;

private:
    void check_compatible(const TruncatedSeries& rhs) const;
    void add_term(int degree, std::uint64_t key, const Int& c);

    int vars_ = 0;
    int degree_bound_ = 0;
    int bits_ = 0;
    // terms_[d] maps packed index sequences of length d to coefficients.
    std::vector<std::unordered_map<std::uint64_t, Int>> terms_;

    friend class MagnusOps;
};

/// Magnus expansion of a free-group word, truncated at degree_bound.
TruncatedSeries magnus_expand(const Word& w, int degree_bound);

/// Coefficient of `mono` in magnus_expand(w, mono.degree()+1), computed by
/// dynamic programming over prefixes of w and of mono without materializing
/// the series.  Always exact.
Int magnus_coefficient_dp(const Word& w, const Monomial& mono);

/// Same value through the full-series route.
Int magnus_coefficient_full(const Word& w, const Monomial& mono);

/// Hybrid dispatch: uses the full series when the estimated expansion cost
/// |w| * (#monomials of degree <= deg) is below kFullSeriesCostThreshold,
/// the DP otherwise.  Both routes agree exactly (tested property).
Int magnus_coefficient(const Word& w, const Monomial& mono);

inline constexpr unsigned long long kFullSeriesCostThreshold = 1ull << 22;

/// Smallest positive degree with a nonzero term in the Magnus expansion of
/// w below degree_bound, or nullopt when every such term vanishes (meaning
/// the residue degree is >= degree_bound).  For w in the k-th lower central
/// series term, the result is >= k.
std::optional<int> lcs_residue_degree(const Word& w, int degree_bound);

} // namespace mubar
