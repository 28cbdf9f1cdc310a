#pragma once

#include "mubar/braid.hpp"
#include "mubar/pd_code.hpp"

#include <cstddef>
#include <vector>

namespace mubar {

struct DoublingSpec {
    // Components to double, 1-based; empty means all of them.
    std::vector<int> targets;
    // Over/under handedness of the clasp tile; the figures only pin |mu|.
    int clasp_sign = +1;
    // Output size cap; doubling grows diagrams exponentially under iteration,
    // so blowing the cap throws CapacityError rather than grinding on.
    std::size_t max_crossings = 100000;
};

// Replaces each targeted component C by its doubled pattern: a blackboard
// 2-cable of C (parallel and antiparallel lane), -w(C) full twists to cancel
// the diagram framing, and a clasp tile where both lanes fold back through a
// fresh ring component.  The band replaces C at its position; rings are
// appended after the original components in target order.  Every pairwise
// linking number of the output vanishes by construction.
PDCode bing_double(const PDCode& pd, const DoublingSpec& spec = {});

// times-fold doubling of every component; component count scales by 2^times.
PDCode iterated_bing_double(const PDCode& pd, int times, const DoublingSpec& spec = {});

// The two-component twist family: a ring, and a loop passing through it
// twice antiparallel (four mixed crossings, pairing off to lk = 0) closed
// with t full twists between its two strands, the innermost twist acting as
// the clasp.  t = +1 is the standard Whitehead link, t = 0 the unlink, and
// the emitted orientation has mu(1122) = -t and mu(1212) = 2t as the first
// nonvanishing invariants.
PDCode twisted_whitehead(int t);

// The 3-strand pure braid [BR, s1 BR s1^-1] built on BR = (s2 s1^-1)^3,
// whose closure has all linking numbers zero.
BraidWord braid_commutator_link();

} // namespace mubar
