#pragma once

#include "mubar/longitudes.hpp"
#include "mubar/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mubar {

// Index sequence (i_1, ..., i_k), entries 1-based component numbers.  The
// last entry selects the longitude; the first k-1 entries form the monomial
// X_{i_1}...X_{i_{k-1}} whose coefficient is extracted.
using IndexSeq = std::vector<int>;

// "1122", or dot-separated "10.1.2" when some component number needs more
// than one digit.
std::string index_seq_str(const IndexSeq& I);
IndexSeq parse_index_seq(const std::string& text, int components);

inline constexpr unsigned long long kDefaultExtractionBudget = 10'000'000ull;

// Cost in coefficient extractions of the exhaustive scan over all sequences
// of lengths 2..max_length on `components` components; saturates instead of
// overflowing.
unsigned long long scan_cost(int components, int max_length);

// Raw mu(I).  Sequences no longer than the series bound are read straight
// off the stored longitude series; longer ones fall back to DP extraction on
// the exact longitude word when one is kept, and throw otherwise.
Int mu(const PeripheralData& data, const IndexSeq& I);

// The shorter sequences whose mu values pin down the indeterminacy of I:
// delete at least one entry, never the last, then take all cyclic rotations;
// only lengths >= 2 count.  Deduplicated, sorted.
std::vector<IndexSeq> indeterminacy_set(const IndexSeq& I);

// gcd of mu over indeterminacy_set(I); empty set gives 0.
Int delta(const PeripheralData& data, const IndexSeq& I);

// mu reduced into [0, delta) when delta > 0, mu itself when delta == 0.
Int mubar(const PeripheralData& data, const IndexSeq& I);

struct FirstNonvanishing {
    int length = 0;
    IndexSeq witness;  // lexicographically least among the first length
    Int value;         // mu(witness) == mubar(witness), its delta being 0
};

// Exhaustive scan by increasing length.  nullopt means every mu with
// |I| <= max_length vanishes.  Work is capped by `budget` coefficient
// extractions (BudgetError beyond it).  threads = 0 reads MUBAR_THREADS,
// defaulting to 1; the result does not depend on the schedule.
std::optional<FirstNonvanishing> first_nonvanishing(
    const PeripheralData& data, int max_length,
    unsigned long long budget = kDefaultExtractionBudget, int threads = 0);

// All mu/delta/mubar values for sequences of length 2..max_length.
class MuTable {
public:
    MuTable(const PeripheralData& data, int max_length,
            unsigned long long budget = kDefaultExtractionBudget, int threads = 0);

    int components() const { return components_; }
    int max_length() const { return max_length_; }

    Int mu(const IndexSeq& I) const;
    Int delta(const IndexSeq& I) const;
    Int mubar(const IndexSeq& I) const;

    std::optional<FirstNonvanishing> first_nonvanishing() const;

    struct Entry {
        IndexSeq index;
        Int mu;
        Int delta;
        Int mubar;
    };
    // Entries in (length, lexicographic) order; optionally only those with
    // nonzero mu or nonzero delta.
    std::vector<Entry> entries(bool nonzero_only = false) const;

private:
    const Int& stored(const IndexSeq& I) const;

    int components_ = 0;
    int max_length_ = 0;
    std::vector<std::vector<Int>> by_length_;  // [length] -> rank-indexed values
};

} // namespace mubar
