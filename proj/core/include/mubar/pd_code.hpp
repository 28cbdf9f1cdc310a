#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mubar {

/// One crossing of a planar diagram.
///
/// arcs = (a, b, c, d) lists the four incident arc labels counterclockwise
/// starting at the incoming under-arc a; the under-strand runs a -> c.  The
/// crossing sign is stored explicitly, and the storage convention ties it to
/// the over-strand direction: sign +1 means the over-strand enters at d and
/// leaves at b, sign -1 the reverse.  (Equivalently: for a positive crossing
/// the arc counterclockwise-next from the incoming under-arc is the outgoing
/// over-arc.)
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 0;

    int under_in() const { return arcs[0]; }
    int under_out() const { return arcs[2]; }
    int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
    int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }

    bool operator==(const Crossing&) const = default;
};

/// Builds a crossing from its two passages and sign, choosing the slot
/// layout mandated by the sign convention above.
Crossing make_crossing(int under_in, int under_out, int over_in, int over_out, int sign);

/// Where an arc is consumed: the crossing it runs into and on which strand.
struct Passage {
    int crossing = -1;
    bool under = false;
};

/// Oriented link diagram as a PD code with explicit crossing signs and
/// explicit component cycles.
///
/// Arcs are the edges of the 4-valent diagram graph: every passage through a
/// crossing (over or under) ends one arc and starts the next.  Components
/// are ordered, and each is given as its cycle of arc labels in orientation
/// order.  A crossing-free unknot component is a one-arc cycle whose arc
/// appears in no crossing; every other arc label appears exactly twice
/// across all crossings (once entering one, once leaving one).
///
/// Construction validates everything: arc multiplicities, agreement of the
/// declared cycles with the cycles derived from the crossing passages (this
/// is also what checks the stored signs against the declared orientations,
/// since the sign determines which over slot is the entering one), and index
/// ranges.  Failures throw ValidationError with the offending arc/crossing.
class PDCode {
public:
    PDCode() = default;
    PDCode(std::vector<Crossing> crossings, std::vector<std::vector<int>> components);

    /// Derives the component cycles from the crossings alone (each cycle
    /// rotated to start at its smallest arc, cycles ordered by that arc).
    /// `extra_circles` appends crossing-free unknot components at the end.
    static PDCode from_crossings(std::vector<Crossing> crossings, int extra_circles = 0);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::vector<int>>& components() const { return components_; }
    int num_components() const { return static_cast<int>(components_.size()); }

    /// 1-based component index owning this arc.
    int component_of(int arc) const;
    /// Crossing consuming this arc, if any (crossing-free circles have none).
    std::optional<Passage> passage_from(int arc) const;

    /// Half the signed count of crossings between the two components.
    /// Requires i != j.
    long long linking_number(int i, int j) const;
    /// Full matrix, diagonal filled with self_writhe.
    std::vector<std::vector<long long>> linking_matrix() const;
    /// Signed count of self-crossings of component i.
    long long self_writhe(int i) const;

    /// The same diagram with component i's orientation reversed: its cycle
    /// is reversed, its passages swap entry/exit, and the sign of every
    /// crossing it meets exactly once is flipped.
    PDCode reversed_component(int i) const;

    /// Moves component `from` (1-based) to position `to`, shifting others.
    PDCode with_component_moved(int from, int to) const;

    /// Relabels arcs sequentially (1..n) following each component cycle from
    /// its listed start, components in order.  Deterministic normal form for
    /// golden files.
    PDCode relabeled_sequential() const;

    int max_arc_label() const;

    bool operator==(const PDCode&) const = default;

private:
    void validate() const;

    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> components_;
};

} // namespace mubar
