#include "mubar/series.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mubar {

std::string Monomial::str() const {
    if (indices.empty())
        return "1";
    std::ostringstream out;
    for (int i : indices)
        out << 'X' << i;
    return out.str();
}

Monomial Monomial::parse(const std::string& text) {
    Monomial m;
    if (text.find('.') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t dot = text.find('.', pos);
            if (dot == std::string::npos)
                dot = text.size();
            int v = 0;
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + dot, v);
            if (ec != std::errc{} || p != text.data() + dot || v <= 0)
                throw ParseError("monomial parse: bad index in '" + text + "'");
            m.indices.push_back(v);
            pos = dot + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError("monomial parse: bad digit in '" + text + "'");
            m.indices.push_back(c - '0');
        }
    }
    return m;
}

namespace {

int bits_for(int vars) {
    int b = 1;
    while ((1 << b) < vars)
        ++b;
    return b;
}

} // namespace

TruncatedSeries::TruncatedSeries(int vars, int degree_bound)
    : vars_(vars), degree_bound_(degree_bound), bits_(bits_for(vars)) {
    if (vars < 1)
        throw std::invalid_argument("TruncatedSeries: need at least one variable");
    if (degree_bound < 1)
        throw std::invalid_argument("TruncatedSeries: degree bound must be >= 1");
    if (static_cast<long long>(degree_bound - 1) * bits_ > 64)
        throw CapacityError("TruncatedSeries: degree bound " + std::to_string(degree_bound) +
                            " with " + std::to_string(vars) + " variables exceeds the packed-key capacity");
    terms_.resize(static_cast<std::size_t>(degree_bound));
}

TruncatedSeries TruncatedSeries::one(int vars, int degree_bound) {
    TruncatedSeries s(vars, degree_bound);
    s.terms_[0][0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::variable(int vars, int degree_bound, int i) {
    TruncatedSeries s(vars, degree_bound);
    if (i < 1 || i > vars)
        throw std::invalid_argument("TruncatedSeries::variable: index out of range");
    if (degree_bound > 1)
        s.terms_[1][static_cast<std::uint64_t>(i - 1)] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::generator_image(int vars, int degree_bound, int i, int sign) {
    TruncatedSeries s = one(vars, degree_bound);
    if (i < 1 || i > vars)
        throw std::invalid_argument("TruncatedSeries::generator_image: index out of range");
    if (sign == +1) {
        if (degree_bound > 1)
            s.terms_[1][static_cast<std::uint64_t>(i - 1)] = 1;
        return s;
    }
    if (sign != -1)
        throw std::invalid_argument("TruncatedSeries::generator_image: sign must be +-1");
    std::uint64_t key = 0;
    for (int d = 1; d < degree_bound; ++d) {
        key |= static_cast<std::uint64_t>(i - 1) << (s.bits_ * (d - 1));
        s.terms_[static_cast<std::size_t>(d)][key] = (d % 2 == 0) ? 1 : -1;
    }
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& level : terms_)
        if (!level.empty())
            return false;
    return true;
}

bool TruncatedSeries::is_one() const {
    if (terms_.empty())
        return false;
    auto it = terms_[0].find(0);
    if (it == terms_[0].end() || it->second != 1)
        return false;
    for (std::size_t d = 1; d < terms_.size(); ++d)
        if (!terms_[d].empty())
            return false;
    return true;
}

std::optional<int> TruncatedSeries::min_positive_degree() const {
    for (std::size_t d = 1; d < terms_.size(); ++d)
        if (!terms_[d].empty())
            return static_cast<int>(d);
    return std::nullopt;
}

namespace {

std::uint64_t pack_indices(const std::vector<int>& indices, int vars, int bits) {
    std::uint64_t key = 0;
    for (std::size_t p = 0; p < indices.size(); ++p) {
        const int i = indices[p];
        if (i < 1 || i > vars)
            throw std::invalid_argument("monomial index out of range");
        key |= static_cast<std::uint64_t>(i - 1) << (bits * p);
    }
    return key;
}

} // namespace

Int TruncatedSeries::coefficient(const Monomial& m) const {
    const int d = m.degree();
    if (d >= degree_bound_)
        throw std::invalid_argument("TruncatedSeries::coefficient: degree " + std::to_string(d) +
                                    " not below bound " + std::to_string(degree_bound_));
    const auto& level = terms_[static_cast<std::size_t>(d)];
    auto it = level.find(pack_indices(m.indices, vars_, bits_));
    return it == level.end() ? Int(0) : it->second;
}

Int TruncatedSeries::linear_coefficient(int i) const {
    return coefficient(Monomial{{i}});
}

void TruncatedSeries::set_coefficient(const Monomial& m, Int value) {
    const int d = m.degree();
    if (d >= degree_bound_)
        throw std::invalid_argument("TruncatedSeries::set_coefficient: degree out of range");
    auto& level = terms_[static_cast<std::size_t>(d)];
    const std::uint64_t key = pack_indices(m.indices, vars_, bits_);
    if (value == 0)
        level.erase(key);
    else
        level[key] = std::move(value);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
    if (vars_ != rhs.vars_ || degree_bound_ != rhs.degree_bound_)
        throw std::invalid_argument("TruncatedSeries: mismatched variable count or degree bound");
}

void TruncatedSeries::add_term(int degree, std::uint64_t key, const Int& c) {
    auto& level = terms_[static_cast<std::size_t>(degree)];
    auto [it, inserted] = level.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            level.erase(it);
    } else if (it->second == 0) {
        level.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (int d = 0; d < degree_bound_; ++d)
        for (const auto& [key, c] : rhs.terms_[static_cast<std::size_t>(d)])
            add_term(d, key, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    check_compatible(rhs);
    for (int d = 0; d < degree_bound_; ++d)
        for (const auto& [key, c] : rhs.terms_[static_cast<std::size_t>(d)])
            add_term(d, key, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    TruncatedSeries r = *this;
    r += rhs;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    TruncatedSeries r = *this;
    r -= rhs;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    check_compatible(rhs);
    TruncatedSeries r(vars_, degree_bound_);
    for (int da = 0; da < degree_bound_; ++da) {
        const auto& la = terms_[static_cast<std::size_t>(da)];
        if (la.empty())
            continue;
        for (int db = 0; da + db < degree_bound_; ++db) {
            const auto& lb = rhs.terms_[static_cast<std::size_t>(db)];
            if (lb.empty())
                continue;
            const int shift = bits_ * da;
            for (const auto& [ka, ca] : la)
                for (const auto& [kb, cb] : lb)
                    r.add_term(da + db, ka | (kb << shift), ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    auto it = terms_[0].find(0);
    if (it == terms_[0].end() || (it->second != 1 && it->second != -1))
        throw std::invalid_argument("TruncatedSeries::inverse: constant term must be +-1");
    const Int c0 = it->second;
    // (c0 + N)^-1 = c0^-1 (1 + c0^-1 N)^-1 = c0 sum_k (-c0 N)^k for c0 = +-1.
    TruncatedSeries n = *this;
    n.terms_[0].clear();
    TruncatedSeries result = one(vars_, degree_bound_);
    TruncatedSeries power = one(vars_, degree_bound_);
    for (int k = 1; k < degree_bound_; ++k) {
        power = power * n;
        if (power.is_zero())
            break;
        TruncatedSeries signed_power = power;
        // (c0 + N)^-1 = c0 * sum_k (-c0)^k N^k; for c0 = -1 the inner signs
        // are all +1 and the global c0 factor is applied below.
        const bool negate = (c0 == 1) && (k % 2 == 1);
        if (negate)
            for (auto& level : signed_power.terms_)
                for (auto& [key, c] : level)
                    c = -c;
        result += signed_power;
    }
    if (c0 == -1)
        for (auto& level : result.terms_)
            for (auto& [key, c] : level)
                c = -c;
    return result;
}

TruncatedSeries TruncatedSeries::pow(long long n) const {
    TruncatedSeries base = n < 0 ? inverse() : *this;
    unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    TruncatedSeries result = one(vars_, degree_bound_);
    while (e) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
    if (new_bound > degree_bound_)
        throw std::invalid_argument("TruncatedSeries::truncated: cannot raise the bound");
    TruncatedSeries r(vars_, new_bound);
    for (int d = 0; d < new_bound; ++d)
        r.terms_[static_cast<std::size_t>(d)] = terms_[static_cast<std::size_t>(d)];
    return r;
}

std::vector<std::pair<Monomial, Int>> TruncatedSeries::sorted_terms() const {
    std::vector<std::pair<Monomial, Int>> out;
    for (int d = 0; d < degree_bound_; ++d) {
        const auto& level = terms_[static_cast<std::size_t>(d)];
        std::vector<std::pair<std::vector<int>, Int>> batch;
        batch.reserve(level.size());
        for (const auto& [key, c] : level) {
            std::vector<int> indices(static_cast<std::size_t>(d));
            for (int p = 0; p < d; ++p)
                indices[static_cast<std::size_t>(p)] =
                    static_cast<int>((key >> (bits_ * p)) & ((1u << bits_) - 1)) + 1;
            batch.emplace_back(std::move(indices), c);
        }
        std::sort(batch.begin(), batch.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [indices, c] : batch)
            out.emplace_back(Monomial{std::move(indices)}, std::move(c));
    }
    return out;
}

std::string TruncatedSeries::str() const {
    const auto terms = sorted_terms();
    if (terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg)
                out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mono.degree() == 0)
            out << mag.str();
        else
            out << mag.str() << '*' << mono.str();
    }
    return out.str();
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
    if (vars_ != rhs.vars_ || degree_bound_ != rhs.degree_bound_)
        return false;
    for (int d = 0; d < degree_bound_; ++d)
        if (terms_[static_cast<std::size_t>(d)] != rhs.terms_[static_cast<std::size_t>(d)])
            return false;
    return true;
}

TruncatedSeries magnus_expand(const Word& w, int degree_bound) {
    TruncatedSeries s = TruncatedSeries::one(w.generators(), degree_bound);
    for (int letter : w.letters()) {
        const int i = letter < 0 ? -letter : letter;
        const int sign = letter < 0 ? -1 : +1;
        s = s * TruncatedSeries::generator_image(w.generators(), degree_bound, i, sign);
    }
    return s;
}

Int magnus_coefficient_dp(const Word& w, const Monomial& mono) {
    const int d = mono.degree();
    for (int i : mono.indices)
        if (i < 1 || i > w.generators())
            throw std::invalid_argument("magnus_coefficient: monomial index out of range");
    // dp[j] = coefficient of the first j letters of mono in the expansion of
    // the processed prefix of w.
    std::vector<Int> dp(static_cast<std::size_t>(d) + 1);
    dp[0] = 1;
    for (int letter : w.letters()) {
        const int i = letter < 0 ? -letter : letter;
        if (letter > 0) {
            // multiply by 1 + X_i: new[j] = dp[j] + dp[j-1]*[mono_j == i]
            for (int j = d; j >= 1; --j)
                if (mono.indices[static_cast<std::size_t>(j - 1)] == i)
                    dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - 1)];
        } else {
            // multiply by 1 - X_i + X_i^2 - ...:
            // new[j] = sum_t (-1)^t dp[j-t] over runs mono[j-t+1..j] == i.
            for (int j = d; j >= 1; --j) {
                Int acc = 0;
                int sign = -1;
                for (int t = 1; t <= j; ++t) {
                    if (mono.indices[static_cast<std::size_t>(j - t)] != i)
                        break;
                    if (sign > 0)
                        acc += dp[static_cast<std::size_t>(j - t)];
                    else
                        acc -= dp[static_cast<std::size_t>(j - t)];
                    sign = -sign;
                }
                dp[static_cast<std::size_t>(j)] += acc;
            }
        }
    }
    return dp[static_cast<std::size_t>(d)];
}

namespace {

unsigned long long full_series_cost(const Word& w, int degree) {
    unsigned long long monomials = 1;  // sum over e <= degree of m^e
    unsigned long long power = 1;
    for (int e = 1; e <= degree; ++e) {
        power *= static_cast<unsigned long long>(w.generators());
        monomials += power;
        if (monomials > (1ull << 40))
            return 1ull << 40;
    }
    const unsigned long long cost = monomials * std::max<std::size_t>(w.length(), 1);
    return cost;
}

} // namespace

Int magnus_coefficient_full(const Word& w, const Monomial& mono) {
    return magnus_expand(w, mono.degree() + 1).coefficient(mono);
}

Int magnus_coefficient(const Word& w, const Monomial& mono) {
    if (full_series_cost(w, mono.degree()) <= kFullSeriesCostThreshold)
        return magnus_coefficient_full(w, mono);
    return magnus_coefficient_dp(w, mono);
}

std::optional<int> lcs_residue_degree(const Word& w, int degree_bound) {
    return magnus_expand(w, degree_bound).min_positive_degree();
}

} // namespace mubar
