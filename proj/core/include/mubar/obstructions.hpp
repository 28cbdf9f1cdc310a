#pragma once

#include "mubar/milnor.hpp"

#include <optional>

namespace mubar {

// Filtration non-membership statements derived from the first nonvanishing
// mu length.  Each bound is the smallest excluded level; the link then fails
// that level and every deeper one.  Nothing here ever certifies membership.
struct ObstructionReport {
    std::optional<int> first_nonvanishing_length;  // nullopt: all vanish <= scanned depth
    IndexSeq witness;
    Int witness_value;
    int scanned_max_length = 0;

    std::optional<int> solvable_excluded_from;   // smallest n with 2^{n+2}-1 >= length
    std::optional<int> grope_excluded_from;      // smallest height h with 2^h >= length
    std::optional<int> bipolar_excluded_from;    // same threshold as solvable
    std::optional<int> cobordism_excluded_from;  // smallest k with 2k >= length
};

// Smallest n >= 0 with 2^{n+2} - 1 >= first_length: the link is not
// (n)-solvable for that n or any larger one.  nullopt in, nullopt out.
std::optional<int> solvability_obstruction(std::optional<int> first_length);

// Smallest height h >= 1 with 2^h >= first_length: the components cannot
// bound disjoint gropes of that height.
std::optional<int> grope_obstruction(std::optional<int> first_length);

// Identical threshold to solvability_obstruction (not n-bipolar).
std::optional<int> bipolarity_obstruction(std::optional<int> first_length);

// Smallest k >= 1 with 2k >= first_length: not null k-cobordant.
std::optional<int> cobordism_obstruction(std::optional<int> first_length);

ObstructionReport obstruction_report(const std::optional<FirstNonvanishing>& scan,
                                     int scanned_max_length);

// Compares mubar together with its indeterminacy for every sequence of
// length <= 2k.  Any disagreement certifies that the two links are not
// k-cobordant; agreement is merely consistent, never a certificate.
struct CobordismComparison {
    bool consistent = true;
    IndexSeq witness;  // first disagreement in (length, lexicographic) order
};

CobordismComparison kcobordism_check(const MuTable& a, const MuTable& b, int k);

} // namespace mubar
