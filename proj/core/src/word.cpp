#include "mubar/word.hpp"

#include "mubar/errors.hpp"

#include <charconv>
#include <cstdlib>
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

Word::Word(int generators, std::vector<int> letters) : generators_(generators) {
    if (generators < 0)
        throw std::invalid_argument("Word: negative generator count");
    letters_.reserve(letters.size());
    for (int letter : letters) {
        int idx = letter < 0 ? -letter : letter;
        if (idx == 0 || idx > generators_)
            throw std::invalid_argument("Word: letter index " + std::to_string(letter) +
                                        " outside 1.." + std::to_string(generators_));
        push_reduced(letters_, letter);
    }
}

Word Word::generator(int generators, int index, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("Word::generator: sign must be +-1");
    return Word(generators, {sign * index});
}

Word Word::parse(std::string_view text, int generators) {
    std::vector<int> letters;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] == '1' && (pos + 1 == n || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
            // identity token
            ++pos;
            continue;
        }
        if (text[pos] != 'x')
            throw ParseError("word parse: expected 'x' at offset " + std::to_string(pos));
        ++pos;
        int index = 0;
        auto [p1, ec1] = std::from_chars(text.data() + pos, text.data() + n, index);
        if (ec1 != std::errc{} || index <= 0)
            throw ParseError("word parse: bad generator index at offset " + std::to_string(pos));
        pos = static_cast<std::size_t>(p1 - text.data());
        int exponent = 1;
        if (pos < n && text[pos] == '^') {
            ++pos;
            auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + n, exponent);
            if (ec2 != std::errc{} || exponent == 0)
                throw ParseError("word parse: bad exponent at offset " + std::to_string(pos));
            pos = static_cast<std::size_t>(p2 - text.data());
        }
        if (pos < n && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError("word parse: unexpected character at offset " + std::to_string(pos));
        const int letter = exponent > 0 ? index : -index;
        for (int k = 0; k < std::abs(exponent); ++k)
            letters.push_back(letter);
    }
    return Word(generators, std::move(letters));
}

std::string Word::str() const {
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
        out << 'x' << idx;
        if (exp != 1)
            out << '^' << exp;
        i = j;
    }
    return out.str();
}

Word Word::operator*(const Word& rhs) const {
    if (generators_ != rhs.generators_)
        throw std::invalid_argument("Word: mismatched generator counts");
    Word result;
    result.generators_ = generators_;
    result.letters_ = letters_;
    for (int letter : rhs.letters_)
        push_reduced(result.letters_, letter);
    return result;
}

Word Word::inverse() const {
    Word result;
    result.generators_ = generators_;
    result.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        result.letters_.push_back(-*it);
    return result;
}

Word Word::conjugated_by(const Word& c) const { return c * *this * c.inverse(); }

int Word::exponent_sum(int index) const {
    int sum = 0;
    for (int letter : letters_) {
        if (letter == index)
            ++sum;
        else if (letter == -index)
            --sum;
    }
    return sum;
}

std::optional<std::pair<Word, int>> Word::generator_conjugate() const {
    if (letters_.size() % 2 == 0)
        return std::nullopt;
    const std::size_t half = letters_.size() / 2;
    const int mid = letters_[half];
    if (mid < 0)
        return std::nullopt;
    for (std::size_t i = 0; i < half; ++i)
        if (letters_[i] != -letters_[letters_.size() - 1 - i])
            return std::nullopt;
    Word prefix;
    prefix.generators_ = generators_;
    prefix.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(half));
    return std::make_pair(prefix, mid);
}

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

} // namespace mubar
