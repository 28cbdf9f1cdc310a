#pragma once

#include "mubar/pd_code.hpp"

namespace mubar {

/// Local Reidemeister moves on PD codes.  This is a test harness for
/// invariance checks, not an equivalence engine: each function performs one
/// move at an explicitly named site, validating the local pattern and
/// throwing ValidationError when the site does not fit.  For R3 the caller
/// is responsible for naming a genuinely embeddable triangle (e.g. one
/// created by a preceding R2 poke); only the combinatorial pattern is
/// checked.

/// R1: inserts a kink on `arc`.  `sign` is the writhe contribution of the
/// new crossing; `over_first` picks whether the strand passes over or under
/// itself first along its orientation.  New arcs get labels above the
/// current maximum.
PDCode r1_insert(const PDCode& pd, int arc, int sign, bool over_first = true);

/// Removes the kink at crossing index `crossing` (0-based).  The crossing
/// must have its two passages chained through a middle arc.
PDCode r1_remove(const PDCode& pd, int crossing);

/// R2: pokes `over_arc` across `under_arc`, creating two crossings of
/// opposite sign; `sign_first` is the sign of the first crossing along the
/// over-arc's orientation.  The two arcs must be distinct.
PDCode r2_insert(const PDCode& pd, int over_arc, int under_arc, int sign_first = +1);

/// Removes a cancelling pair of crossings (0-based indices) that form an R2
/// bigon: same over strand on consecutive arcs, same under strand on
/// consecutive arcs, opposite signs.
PDCode r2_remove(const PDCode& pd, int crossing_a, int crossing_b);

/// R3: slides the strand of `middle_arc` across the crossing formed by the
/// two strands it currently crosses at its endpoints.  `middle_arc` must be
/// the over strand at both endpoint crossings, or the under strand at both;
/// the third crossing (between the other two strands) must be adjacent to
/// both endpoints through single arcs (the triangle).  Crossing signs and
/// component cycles are preserved; only the passage wiring changes.
PDCode r3_slide(const PDCode& pd, int middle_arc);

} // namespace mubar
