#include "mubar/milnor.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

namespace mubar {

namespace {

void check_index(const IndexSeq& I, int components) {
    if (I.size() < 2)
        throw ValidationError("index sequence must have length >= 2");
    for (int i : I)
        if (i < 1 || i > components)
            throw ValidationError("index entry " + std::to_string(i) +
                                  " outside 1.." + std::to_string(components));
}

int thread_count(int requested) {
    if (requested <= 0) {
        if (const char* env = std::getenv("MUBAR_THREADS"))
            requested = std::atoi(env);
    }
    if (requested <= 0)
        requested = 1;
    return std::min(requested, 256);
}

unsigned long long pow_saturating(unsigned long long base, int exp) {
    const auto cap = std::numeric_limits<unsigned long long>::max();
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base)
            return cap;
        r *= base;
    }
    return r;
}

IndexSeq seq_of_rank(unsigned long long rank, int length, int m) {
    IndexSeq seq(static_cast<std::size_t>(length));
    for (int pos = length - 1; pos >= 0; --pos) {
        seq[static_cast<std::size_t>(pos)] = static_cast<int>(rank % static_cast<unsigned>(m)) + 1;
        rank /= static_cast<unsigned>(m);
    }
    return seq;
}

Monomial prefix_monomial(const IndexSeq& I) {
    return Monomial{std::vector<int>(I.begin(), I.end() - 1)};
}

} // namespace

std::string index_seq_str(const IndexSeq& I) {
    const bool single = std::all_of(I.begin(), I.end(), [](int i) { return i >= 1 && i <= 9; });
    std::string out;
    for (std::size_t p = 0; p < I.size(); ++p) {
        if (!single && p > 0)
            out += '.';
        out += std::to_string(I[p]);
    }
    return out;
}

IndexSeq parse_index_seq(const std::string& text, int components) {
    IndexSeq seq;
    if (text.find('.') != std::string::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t dot = text.find('.', start);
            const std::string part = text.substr(start, dot == std::string::npos ? dot : dot - start);
            try {
                seq.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw ParseError("bad index sequence entry '" + part + "'");
            }
            if (dot == std::string::npos)
                break;
            start = dot + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw ParseError(std::string("bad index sequence digit '") + ch + "'");
            seq.push_back(ch - '0');
        }
    }
    check_index(seq, components);
    return seq;
}

unsigned long long scan_cost(int components, int max_length) {
    const auto cap = std::numeric_limits<unsigned long long>::max();
    unsigned long long total = 0;
    for (int l = 2; l <= max_length; ++l) {
        const unsigned long long c = pow_saturating(static_cast<unsigned long long>(components), l);
        total = (total > cap - c) ? cap : total + c;
    }
    return total;
}

Int mu(const PeripheralData& data, const IndexSeq& I) {
    check_index(I, data.components);
    const int k = static_cast<int>(I.size());
    const int target = I.back();
    if (k <= data.degree_bound)
        return data.series(target).coefficient(prefix_monomial(I));
    const auto& word = data.longitude_words[static_cast<std::size_t>(target - 1)];
    if (!word)
        throw ValidationError("mu: |I| = " + std::to_string(k) + " exceeds series degree bound " +
                              std::to_string(data.degree_bound) +
                              " and no exact longitude word is available");
    return magnus_coefficient(*word, prefix_monomial(I));
}

std::vector<IndexSeq> indeterminacy_set(const IndexSeq& I) {
    const int k = static_cast<int>(I.size());
    std::set<IndexSeq> out;
    // subsets of the first k-1 positions to delete, at least one
    const unsigned mask_end = 1u << (k - 1);
    for (unsigned mask = 1; mask < mask_end; ++mask) {
        IndexSeq kept;
        for (int p = 0; p < k; ++p)
            if (p == k - 1 || !(mask & (1u << p)))
                kept.push_back(I[static_cast<std::size_t>(p)]);
        if (kept.size() < 2)
            continue;
        IndexSeq rot = kept;
        for (std::size_t r = 0; r < kept.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            out.insert(rot);
        }
    }
    return {out.begin(), out.end()};
}

Int delta(const PeripheralData& data, const IndexSeq& I) {
    check_index(I, data.components);
    Int g = 0;
    for (const IndexSeq& J : indeterminacy_set(I))
        g = gcd(g, mu(data, J));
    return abs(g);
}

Int mubar(const PeripheralData& data, const IndexSeq& I) {
    const Int m = mu(data, I);
    const Int d = delta(data, I);
    if (d == 0)
        return m;
    return ((m % d) + d) % d;
}

namespace {

// Scans ranks [0, total) at one length, returning the smallest rank with a
// nonzero mu.  Charges `charged` per extraction and stops past `budget`.
std::optional<unsigned long long> scan_length(const PeripheralData& data, int length,
                                              unsigned long long total, int threads,
                                              std::atomic<unsigned long long>& charged,
                                              unsigned long long budget, bool& exceeded) {
    const int m = data.components;
    std::atomic<unsigned long long> best{total};
    std::atomic<bool> over{false};

    auto worker = [&](unsigned long long lo, unsigned long long hi) {
        for (unsigned long long r = lo; r < hi; ++r) {
            if (r >= best.load(std::memory_order_relaxed))
                return;
            if (charged.fetch_add(1, std::memory_order_relaxed) >= budget) {
                over.store(true, std::memory_order_relaxed);
                return;
            }
            const IndexSeq seq = seq_of_rank(r, length, m);
            if (mu(data, seq) != 0) {
                unsigned long long cur = best.load(std::memory_order_relaxed);
                while (r < cur && !best.compare_exchange_weak(cur, r)) {
                }
                return;
            }
        }
    };

    if (threads <= 1 || total < 4096) {
        worker(0, total);
    } else {
        const auto n = static_cast<unsigned long long>(threads);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (unsigned long long t = 0; t < n; ++t)
            pool.emplace_back(worker, total * t / n, total * (t + 1) / n);
        for (auto& th : pool)
            th.join();
    }
    if (over.load())
        exceeded = true;
    const unsigned long long found = best.load();
    if (found < total)
        return found;
    return std::nullopt;
}

} // namespace

std::optional<FirstNonvanishing> first_nonvanishing(const PeripheralData& data, int max_length,
                                                    unsigned long long budget, int threads) {
    if (max_length < 2)
        throw ValidationError("first_nonvanishing: max length must be >= 2");
    const int m = data.components;
    const int workers = thread_count(threads);
    std::atomic<unsigned long long> charged{0};

    for (int length = 2; length <= max_length; ++length) {
        const unsigned long long total = pow_saturating(static_cast<unsigned long long>(m), length);
        bool exceeded = false;
        const auto rank = scan_length(data, length, total, workers, charged, budget, exceeded);
        if (exceeded)
            throw BudgetError("first_nonvanishing: extraction budget exhausted at length " +
                                  std::to_string(length),
                              charged.load(), budget);
        if (rank) {
            FirstNonvanishing result;
            result.length = length;
            result.witness = seq_of_rank(*rank, length, m);
            result.value = mu(data, result.witness);
            return result;
        }
    }
    return std::nullopt;
}

MuTable::MuTable(const PeripheralData& data, int max_length, unsigned long long budget,
                 int threads) {
    if (max_length < 2)
        throw ValidationError("MuTable: max length must be >= 2");
    if (max_length > data.degree_bound &&
        std::any_of(data.longitude_words.begin(), data.longitude_words.end(),
                    [](const auto& w) { return !w.has_value(); }))
        throw ValidationError("MuTable: max length exceeds the peripheral degree bound");
    components_ = data.components;
    max_length_ = max_length;

    const unsigned long long cost = scan_cost(components_, max_length);
    if (cost > budget)
        throw BudgetError("MuTable: exhaustive table needs " + std::to_string(cost) +
                              " extractions, budget is " + std::to_string(budget),
                          cost, budget);

    const int workers = thread_count(threads);
    by_length_.resize(static_cast<std::size_t>(max_length) + 1);
    for (int length = 2; length <= max_length; ++length) {
        const auto total = pow_saturating(static_cast<unsigned long long>(components_), length);
        auto& values = by_length_[static_cast<std::size_t>(length)];
        values.resize(static_cast<std::size_t>(total));
        auto fill = [&](unsigned long long lo, unsigned long long hi) {
            for (unsigned long long r = lo; r < hi; ++r)
                values[static_cast<std::size_t>(r)] = ::mubar::mu(data, seq_of_rank(r, length, components_));
        };
        if (workers <= 1 || total < 4096) {
            fill(0, total);
        } else {
            const auto n = static_cast<unsigned long long>(workers);
            std::vector<std::thread> pool;
            for (unsigned long long t = 0; t < n; ++t)
                pool.emplace_back(fill, total * t / n, total * (t + 1) / n);
            for (auto& th : pool)
                th.join();
        }
    }

    // Well-definedness: at the first length with any nonzero mu, every
    // nonzero entry must have vanishing indeterminacy.
    if (const auto first = first_nonvanishing()) {
        const auto& values = by_length_[static_cast<std::size_t>(first->length)];
        for (unsigned long long r = 0; r < values.size(); ++r)
            if (values[static_cast<std::size_t>(r)] != 0) {
                const IndexSeq seq = seq_of_rank(r, first->length, components_);
                if (delta(seq) != 0)
                    throw ValidationError("MuTable: first nonvanishing entry " + index_seq_str(seq) +
                                          " has nonzero indeterminacy");
            }
    }
}

const Int& MuTable::stored(const IndexSeq& I) const {
    check_index(I, components_);
    const int length = static_cast<int>(I.size());
    if (length > max_length_)
        throw ValidationError("MuTable: sequence longer than table depth");
    unsigned long long rank = 0;
    for (int i : I)
        rank = rank * static_cast<unsigned>(components_) + static_cast<unsigned>(i - 1);
    return by_length_[static_cast<std::size_t>(length)][static_cast<std::size_t>(rank)];
}

Int MuTable::mu(const IndexSeq& I) const { return stored(I); }

Int MuTable::delta(const IndexSeq& I) const {
    Int g = 0;
    for (const IndexSeq& J : indeterminacy_set(I))
        g = gcd(g, stored(J));
    return abs(g);
}

Int MuTable::mubar(const IndexSeq& I) const {
    const Int m = stored(I);
    const Int d = delta(I);
    if (d == 0)
        return m;
    return ((m % d) + d) % d;
}

std::optional<FirstNonvanishing> MuTable::first_nonvanishing() const {
    for (int length = 2; length <= max_length_; ++length) {
        const auto& values = by_length_[static_cast<std::size_t>(length)];
        for (unsigned long long r = 0; r < values.size(); ++r)
            if (values[static_cast<std::size_t>(r)] != 0) {
                FirstNonvanishing result;
                result.length = length;
                result.witness = seq_of_rank(r, length, components_);
                result.value = values[static_cast<std::size_t>(r)];
                return result;
            }
    }
    return std::nullopt;
}

std::vector<MuTable::Entry> MuTable::entries(bool nonzero_only) const {
    std::vector<Entry> out;
    for (int length = 2; length <= max_length_; ++length) {
        const auto& values = by_length_[static_cast<std::size_t>(length)];
        for (unsigned long long r = 0; r < values.size(); ++r) {
            Entry e;
            e.index = seq_of_rank(r, length, components_);
            e.mu = values[static_cast<std::size_t>(r)];
            e.delta = delta(e.index);
            if (nonzero_only && e.mu == 0 && e.delta == 0)
                continue;
            e.mubar = (e.delta == 0) ? e.mu : ((e.mu % e.delta) + e.delta) % e.delta;
            out.push_back(std::move(e));
        }
    }
    return out;
}

} // namespace mubar
