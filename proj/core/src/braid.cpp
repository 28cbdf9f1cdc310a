#include "mubar/braid.hpp"

#include "mubar/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mubar {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter)
        out.pop_back();
    else
        out.push_back(letter);
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
    if (strands < 1)
        throw std::invalid_argument("BraidWord: strand count must be >= 1");
    letters_.reserve(letters.size());
    for (int letter : letters) {
        int idx = letter < 0 ? -letter : letter;
        if (idx == 0 || idx >= strands_)
            throw std::invalid_argument("BraidWord: generator " + std::to_string(letter) +
                                        " outside 1.." + std::to_string(strands_ - 1));
        push_reduced(letters_, letter);
    }
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
    std::vector<int> letters;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] == '1' && (pos + 1 == n || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            continue;
        }
        if (text[pos] != 's')
            throw ParseError("braid parse: expected 's' at offset " + std::to_string(pos));
        ++pos;
        int index = 0;
        auto [p1, ec1] = std::from_chars(text.data() + pos, text.data() + n, index);
        if (ec1 != std::errc{} || index <= 0)
            throw ParseError("braid parse: bad generator index at offset " + std::to_string(pos));
        pos = static_cast<std::size_t>(p1 - text.data());
        int exponent = 1;
        if (pos < n && text[pos] == '^') {
            ++pos;
            auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + n, exponent);
            if (ec2 != std::errc{} || exponent == 0)
                throw ParseError("braid parse: bad exponent at offset " + std::to_string(pos));
            pos = static_cast<std::size_t>(p2 - text.data());
        }
        if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError("braid parse: unexpected character at offset " + std::to_string(pos));
        const int letter = exponent > 0 ? index : -index;
        for (int k = 0; k < std::abs(exponent); ++k)
            letters.push_back(letter);
    }
    return BraidWord(strands, std::move(letters));
}

std::string BraidWord::str() const {
    if (letters_.empty())
        return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size();) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i])
            ++j;
        const int idx = std::abs(letters_[i]);
        const long long exp = static_cast<long long>(j - i) * (letters_[i] > 0 ? 1 : -1);
        if (i)
            out << ' ';
        out << 's' << idx;
        if (exp != 1)
            out << '^' << exp;
        i = j;
    }
    return out.str();
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (strands_ != rhs.strands_)
        throw std::invalid_argument("BraidWord: mismatched strand counts");
    BraidWord result;
    result.strands_ = strands_;
    result.letters_ = letters_;
    for (int letter : rhs.letters_)
        push_reduced(result.letters_, letter);
    return result;
}

BraidWord BraidWord::inverse() const {
    BraidWord result;
    result.strands_ = strands_;
    result.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        result.letters_.push_back(-*it);
    return result;
}

BraidWord BraidWord::conjugated_by(const BraidWord& c) const { return c * *this * c.inverse(); }

std::vector<int> BraidWord::permutation() const {
    std::vector<int> strand_at(static_cast<std::size_t>(strands_) + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int letter : letters_) {
        const int k = std::abs(letter);
        std::swap(strand_at[static_cast<std::size_t>(k)], strand_at[static_cast<std::size_t>(k) + 1]);
    }
    std::vector<int> perm(static_cast<std::size_t>(strands_) + 1, 0);
    for (int p = 1; p <= strands_; ++p)
        perm[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])] = p;
    return perm;
}

bool BraidWord::is_pure() const {
    const auto perm = permutation();
    for (int i = 1; i <= strands_; ++i)
        if (perm[static_cast<std::size_t>(i)] != i)
            return false;
    return true;
}

namespace {

// Substitution for one braid letter applied to one word letter, appended to
// `out` with free reduction.
void apply_letter(std::vector<int>& out, int braid_letter, int word_letter) {
    const int k = std::abs(braid_letter);
    const int i = std::abs(word_letter);
    const bool pos = word_letter > 0;
    auto push = [&out](int l) { push_reduced(out, l); };
    if (braid_letter > 0) {
        if (i == k) {
            // x_k -> x_k x_{k+1} x_k^-1
            if (pos) { push(k); push(k + 1); push(-k); }
            else     { push(k); push(-(k + 1)); push(-k); }
        } else if (i == k + 1) {
            // x_{k+1} -> x_k
            push(pos ? k : -k);
        } else {
            push(word_letter);
        }
    } else {
        if (i == k) {
            // x_k -> x_{k+1}
            push(pos ? k + 1 : -(k + 1));
        } else if (i == k + 1) {
            // x_{k+1} -> x_{k+1}^-1 x_k x_{k+1}
            if (pos) { push(-(k + 1)); push(k); push(k + 1); }
            else     { push(-(k + 1)); push(-k); push(k + 1); }
        } else {
            push(word_letter);
        }
    }
}

} // namespace

Word BraidWord::artin_image(const Word& w) const {
    if (w.generators() != strands_)
        throw std::invalid_argument("artin_image: word generator count must equal strand count");
    std::vector<int> current(w.letters());
    std::vector<int> next;
    for (int braid_letter : letters_) {
        next.clear();
        next.reserve(current.size() * 3);
        for (int word_letter : current)
            apply_letter(next, braid_letter, word_letter);
        current.swap(next);
    }
    return Word(strands_, std::move(current));
}

Word BraidWord::artin_image(int i) const { return artin_image(Word::generator(strands_, i)); }

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
    return a * b * a.inverse() * b.inverse();
}

} // namespace mubar
