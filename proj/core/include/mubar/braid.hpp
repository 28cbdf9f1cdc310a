#pragma once

#include "mubar/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mubar {

/// Braid word on a fixed strand count, letters +-k for the Artin generator
/// s_k (k in 1..strands-1).  Words are freely reduced (adjacent s_k s_k^-1
/// pairs cancel); no further braid relations are applied.
///
/// Conventions, fixed project-wide:
///   * Strands are oriented downward and numbered 1..s left to right at the
///     top; the word reads top to bottom, so multiply(a, b) stacks a above b.
///   * The Artin action of s_k on the free group F(x_1..x_s) is
///       x_k |-> x_k x_{k+1} x_k^-1,   x_{k+1} |-> x_k,
///     and a braid word acts letter by letter in reading order:
///     artin_image(a * b, i) applies a's letters first, then b's.
class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int strands, std::vector<int> letters);

    /// Parses "s2 s1^-1 s2^3"; whitespace-separated, exponents optional.
    static BraidWord parse(std::string_view text, int strands);
    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    /// Inverse of parse; identity prints as "1".
    std::string str() const;

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    BraidWord operator*(const BraidWord& rhs) const;
    BraidWord inverse() const;
    /// c * (*this) * c^-1
    BraidWord conjugated_by(const BraidWord& c) const;

    /// permutation()[i] is the bottom position of the strand entering at top
    /// position i (1-based, entry 0 unused).
    std::vector<int> permutation() const;
    bool is_pure() const;

    /// Image of x_i under the Artin action of this braid word.
    Word artin_image(int i) const;
    /// Applies the action to an arbitrary word letter by letter.
    Word artin_image(const Word& w) const;

    bool operator==(const BraidWord&) const = default;

private:
    int strands_ = 0;
    std::vector<int> letters_;
};

/// [a, b] = a b a^-1 b^-1
BraidWord commutator(const BraidWord& a, const BraidWord& b);

} // namespace mubar
