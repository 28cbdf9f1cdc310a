#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mubar {

/// Freely reduced word in the free group on generators x_1..x_m.
///
/// Letters are stored as signed indices: +i for x_i, -i for x_i^-1,
/// 1 <= i <= generators().  Every constructor and operation reduces, so a
/// Word is always in normal form and equality is plain letter equality.
class Word {
public:
    Word() = default;

    /// Reduces `letters` on construction.  Throws std::invalid_argument on a
    /// zero letter or an index outside 1..generators.
    Word(int generators, std::vector<int> letters);

    static Word identity(int generators) { return Word(generators, {}); }
    static Word generator(int generators, int index, int sign = +1);

    /// Parses the textual form "x1 x2^-1 x1^3".  Exponents are optional and
    /// may be any nonzero integer; whitespace separates letters.
    static Word parse(std::string_view text, int generators);

    /// Inverse of parse; round-trips exactly.  Identity prints as "1".
    std::string str() const;

    int generators() const { return generators_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    /// c * (*this) * c^-1
    Word conjugated_by(const Word& c) const;

    /// Sum of exponents of x_index.
    int exponent_sum(int index) const;

    /// If this word equals w * x_i * w^-1 for some w and i (sign +1 on the
    /// middle letter), returns (w, i).  Reduced conjugates of a generator are
    /// exactly the odd-length palindromic-inverse words, so this is a scan.
    std::optional<std::pair<Word, int>> generator_conjugate() const;

    bool operator==(const Word&) const = default;

private:
    int generators_ = 0;
    std::vector<int> letters_;
};

/// [u, v] = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

} // namespace mubar
