#include "mubar/reidemeister.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <optional>

namespace mubar {

namespace {

// Replaces `from` with `to` in every crossing slot.
void relabel_slots(std::vector<Crossing>& crossings, int from, int to) {
    for (auto& c : crossings)
        for (int& arc : c.arcs)
            if (arc == from)
                arc = to;
}

// Inserts labels after `arc` in its component cycle.
void insert_after(std::vector<std::vector<int>>& components, int arc, std::vector<int> labels) {
    for (auto& cycle : components) {
        auto it = std::find(cycle.begin(), cycle.end(), arc);
        if (it != cycle.end()) {
            cycle.insert(it + 1, labels.begin(), labels.end());
            return;
        }
    }
    throw ValidationError("reidemeister: arc " + std::to_string(arc) + " not in any component");
}

void erase_arcs(std::vector<std::vector<int>>& components, const std::vector<int>& labels) {
    for (auto& cycle : components)
        std::erase_if(cycle, [&labels](int a) {
            return std::find(labels.begin(), labels.end(), a) != labels.end();
        });
}

// Rewrites the in-slot of arc's consumer from `arc` to `replacement`,
// returning false when the arc has no consumer (crossing-free circle).
bool redirect_consumer(const PDCode& pd, std::vector<Crossing>& crossings, int arc, int replacement) {
    const auto passage = pd.passage_from(arc);
    if (!passage)
        return false;
    Crossing& c = crossings[static_cast<std::size_t>(passage->crossing)];
    if (passage->under) {
        c.arcs[0] = replacement;
    } else {
        if (c.sign > 0)
            c.arcs[3] = replacement;
        else
            c.arcs[1] = replacement;
    }
    return true;
}

} // namespace

PDCode r1_insert(const PDCode& pd, int arc, int sign, bool over_first) {
    auto crossings = pd.crossings();
    auto components = pd.components();
    const int k = pd.max_arc_label() + 1;

    const bool has_consumer = pd.passage_from(arc).has_value();
    if (has_consumer) {
        const int tail = pd.max_arc_label() + 2;
        redirect_consumer(pd, crossings, arc, tail);
        crossings.push_back(over_first ? make_crossing(k, tail, arc, k, sign)
                                       : make_crossing(arc, k, k, tail, sign));
        insert_after(components, arc, {k, tail});
    } else {
        // kink on a crossing-free circle: two arcs suffice
        crossings.push_back(over_first ? make_crossing(k, arc, arc, k, sign)
                                       : make_crossing(arc, k, k, arc, sign));
        insert_after(components, arc, {k});
    }
    return PDCode(std::move(crossings), std::move(components));
}

PDCode r1_remove(const PDCode& pd, int crossing) {
    if (crossing < 0 || crossing >= static_cast<int>(pd.crossings().size()))
        throw ValidationError("r1_remove: crossing index out of range");
    const Crossing c = pd.crossings()[static_cast<std::size_t>(crossing)];
    int first = 0, mid = 0, last = 0;
    if (c.under_out() == c.over_in()) {
        first = c.under_in();
        mid = c.under_out();
        last = c.over_out();
    } else if (c.over_out() == c.under_in()) {
        first = c.over_in();
        mid = c.over_out();
        last = c.under_out();
    } else {
        throw ValidationError("r1_remove: crossing " + std::to_string(crossing) + " is not a kink");
    }

    auto crossings = pd.crossings();
    crossings.erase(crossings.begin() + crossing);
    auto components = pd.components();
    if (last == first) {
        // the component was a one-crossing kinked circle
        erase_arcs(components, {mid});
    } else {
        relabel_slots(crossings, last, first);
        erase_arcs(components, {mid, last});
    }
    return PDCode(std::move(crossings), std::move(components));
}

PDCode r2_insert(const PDCode& pd, int over_arc, int under_arc, int sign_first) {
    if (over_arc == under_arc)
        throw ValidationError("r2_insert: over and under arc must differ");
    if (sign_first != 1 && sign_first != -1)
        throw ValidationError("r2_insert: sign must be +-1");

    auto crossings = pd.crossings();
    auto components = pd.components();
    int next = pd.max_arc_label() + 1;

    const int mo = next++;
    int o2 = over_arc;
    if (redirect_consumer(pd, crossings, over_arc, next))
        o2 = next++;
    const int mu = next++;
    int u2 = under_arc;
    if (redirect_consumer(pd, crossings, under_arc, next))
        u2 = next++;

    crossings.push_back(make_crossing(under_arc, mu, over_arc, mo, sign_first));
    crossings.push_back(make_crossing(mu, u2, mo, o2, -sign_first));

    insert_after(components, over_arc, o2 == over_arc ? std::vector<int>{mo} : std::vector<int>{mo, o2});
    insert_after(components, under_arc, u2 == under_arc ? std::vector<int>{mu} : std::vector<int>{mu, u2});
    return PDCode(std::move(crossings), std::move(components));
}

PDCode r2_remove(const PDCode& pd, int crossing_a, int crossing_b) {
    const int n = static_cast<int>(pd.crossings().size());
    if (crossing_a < 0 || crossing_a >= n || crossing_b < 0 || crossing_b >= n || crossing_a == crossing_b)
        throw ValidationError("r2_remove: bad crossing indices");

    auto matches = [&pd](int ka, int kb) {
        const Crossing& a = pd.crossings()[static_cast<std::size_t>(ka)];
        const Crossing& b = pd.crossings()[static_cast<std::size_t>(kb)];
        return a.over_out() == b.over_in() && a.under_out() == b.under_in() && a.sign == -b.sign;
    };

    int ka = crossing_a, kb = crossing_b;
    if (!matches(ka, kb)) {
        std::swap(ka, kb);
        if (!matches(ka, kb))
            throw ValidationError("r2_remove: crossings do not form a cancelling bigon");
    }
    const Crossing a = pd.crossings()[static_cast<std::size_t>(ka)];
    const Crossing b = pd.crossings()[static_cast<std::size_t>(kb)];
    const int mo = a.over_out(), mu = a.under_out();
    const int o = a.over_in(), o2 = b.over_out();
    const int u = a.under_in(), u2 = b.under_out();

    auto crossings = pd.crossings();
    crossings.erase(crossings.begin() + std::max(ka, kb));
    crossings.erase(crossings.begin() + std::min(ka, kb));
    auto components = pd.components();

    std::vector<int> dead{mo, mu};
    if (o2 != o) {
        relabel_slots(crossings, o2, o);
        dead.push_back(o2);
    }
    if (u2 != u) {
        relabel_slots(crossings, u2, u);
        dead.push_back(u2);
    }
    erase_arcs(components, dead);
    return PDCode(std::move(crossings), std::move(components));
}

namespace {

struct StrandPassage {
    int in = 0;
    int out = 0;
};

StrandPassage other_passage(const Crossing& c, bool t_under) {
    // the passage of the strand that is not the sliding strand
    if (t_under)
        return {c.over_in(), c.over_out()};
    return {c.under_in(), c.under_out()};
}

// One of the two places an arc label appears among the crossing slots.
struct SlotRef {
    int crossing = -1;
    int slot = -1;
    bool operator==(const SlotRef&) const = default;
};

} // namespace

PDCode r3_slide(const PDCode& pd, int middle_arc) {
    // locate the sliding strand's two crossings
    int c1 = -1, c2 = -1;
    bool t_under_at_c1 = false, t_under_at_c2 = false;
    for (std::size_t k = 0; k < pd.crossings().size(); ++k) {
        const Crossing& c = pd.crossings()[k];
        if (c.under_out() == middle_arc) { c1 = static_cast<int>(k); t_under_at_c1 = true; }
        else if (c.over_out() == middle_arc) { c1 = static_cast<int>(k); t_under_at_c1 = false; }
        if (c.under_in() == middle_arc) { c2 = static_cast<int>(k); t_under_at_c2 = true; }
        else if (c.over_in() == middle_arc) { c2 = static_cast<int>(k); t_under_at_c2 = false; }
    }
    if (c1 < 0 || c2 < 0 || c1 == c2)
        throw ValidationError("r3_slide: arc " + std::to_string(middle_arc) +
                              " does not join two distinct crossings");
    if (t_under_at_c1 != t_under_at_c2)
        throw ValidationError("r3_slide: strand is not uniformly over or under at both crossings");
    const bool t_under = t_under_at_c1;

    const Crossing& C1 = pd.crossings()[static_cast<std::size_t>(c1)];
    const Crossing& C2 = pd.crossings()[static_cast<std::size_t>(c2)];
    const int t0 = t_under ? C1.under_in() : C1.over_in();
    const int t1 = t_under ? C2.under_out() : C2.over_out();
    const StrandPassage m = other_passage(C1, t_under);  // strand M at C1
    const StrandPassage b = other_passage(C2, t_under);  // strand B at C2

    // The slide is only legal across a triangular face, so trace the two
    // faces bordering the middle arc.  Slots are stored counterclockwise,
    // which makes faces the orbits of "arrive at slot s, leave at slot s+1":
    // three pairwise-adjacent crossings are not enough, since the disk they
    // would bound can have other strands running through it.
    std::vector<std::array<SlotRef, 2>> occurrences(
        static_cast<std::size_t>(pd.max_arc_label()) + 1, {SlotRef{}, SlotRef{}});
    for (std::size_t k = 0; k < pd.crossings().size(); ++k)
        for (int s = 0; s < 4; ++s) {
            auto& occ = occurrences[static_cast<std::size_t>(pd.crossings()[k].arcs[s])];
            if (occ[0].crossing < 0)
                occ[0] = {static_cast<int>(k), s};
            else
                occ[1] = {static_cast<int>(k), s};
        }
    const auto other_end = [&occurrences](int arc, SlotRef here) {
        const auto& occ = occurrences[static_cast<std::size_t>(arc)];
        return occ[0] == here ? occ[1] : occ[0];
    };

    // Sides of the face entered by arriving at `start`, each with the slot
    // it leaves from and the slot it arrives at; the middle arc comes last.
    struct FaceSide {
        int arc = -1;
        SlotRef from;
        SlotRef to;
    };
    const auto face_sides = [&](SlotRef start) {
        std::vector<FaceSide> sides;
        SlotRef at = start;
        const std::size_t limit = 4 * pd.crossings().size() + 4;
        do {
            const SlotRef from{at.crossing, (at.slot + 1) % 4};
            const int arc =
                pd.crossings()[static_cast<std::size_t>(from.crossing)].arcs[from.slot];
            at = other_end(arc, from);
            sides.push_back({arc, from, at});
            if (sides.size() > limit)
                throw ValidationError("r3_slide: face walk does not close");
        } while (!(at == start));
        return sides;
    };

    const SlotRef at_c1 = occurrences[static_cast<std::size_t>(middle_arc)][0].crossing == c1
                              ? occurrences[static_cast<std::size_t>(middle_arc)][0]
                              : occurrences[static_cast<std::size_t>(middle_arc)][1];
    const SlotRef at_c2 = other_end(middle_arc, at_c1);

    for (const SlotRef start : {at_c1, at_c2}) {
        const auto sides = face_sides(start);
        if (sides.size() != 3 || sides[2].arc != middle_arc)
            continue;
        // The walk leaves the start crossing along the far strand there,
        // passes the third crossing, and returns along the middle arc, so
        // the side roles follow from which end of the middle arc we began.
        const int c3 = sides[0].to.crossing;
        int ms_arc = -1, bs_arc = -1;
        if (start.crossing == c2) {
            bs_arc = sides[0].arc;
            ms_arc = sides[1].arc;
        } else {
            ms_arc = sides[0].arc;
            bs_arc = sides[1].arc;
        }
        if (c3 == c1 || c3 == c2 || ms_arc == bs_arc || ms_arc == middle_arc ||
            bs_arc == middle_arc)
            continue;
        if (!(ms_arc == m.in || ms_arc == m.out) || !(bs_arc == b.in || bs_arc == b.out))
            continue;

        const Crossing& C3 = pd.crossings()[static_cast<std::size_t>(c3)];
        const bool ms_downstream = ms_arc == m.out;  // M flows C1 -> C3
        const bool bs_downstream = bs_arc == b.out;  // B flows C2 -> C3
        const bool m_under_at_c3 = C3.under_in() == ms_arc || C3.under_out() == ms_arc;
        const bool b_under_at_c3 = C3.under_in() == bs_arc || C3.under_out() == bs_arc;
        if (m_under_at_c3 == b_under_at_c3)
            continue;

        // M in flow order x -> (first crossing) -> alpha -> (second) -> y
        const int m_x = ms_downstream ? m.in : (m_under_at_c3 ? C3.under_in() : C3.over_in());
        const int m_y = ms_downstream ? (m_under_at_c3 ? C3.under_out() : C3.over_out()) : m.out;
        const int b_x = bs_downstream ? b.in : (b_under_at_c3 ? C3.under_in() : C3.over_in());
        const int b_y = bs_downstream ? (b_under_at_c3 ? C3.under_out() : C3.over_out()) : b.out;

        // After the slide the T strand meets B first, then M, each on the
        // far side of C3; C3 takes the near sides.  Signs are preserved.
        StrandPassage b_at_t, b_at_c3, m_at_t, m_at_c3;
        if (bs_downstream) {
            // B met T first before; now C3 first, T second
            b_at_c3 = {b_x, bs_arc};
            b_at_t = {bs_arc, b_y};
        } else {
            b_at_t = {b_x, bs_arc};
            b_at_c3 = {bs_arc, b_y};
        }
        if (ms_downstream) {
            m_at_c3 = {m_x, ms_arc};
            m_at_t = {ms_arc, m_y};
        } else {
            m_at_t = {m_x, ms_arc};
            m_at_c3 = {ms_arc, m_y};
        }

        Crossing d1 = t_under ? make_crossing(t0, middle_arc, b_at_t.in, b_at_t.out, C2.sign)
                              : make_crossing(b_at_t.in, b_at_t.out, t0, middle_arc, C2.sign);
        Crossing d2 = t_under ? make_crossing(middle_arc, t1, m_at_t.in, m_at_t.out, C1.sign)
                              : make_crossing(m_at_t.in, m_at_t.out, middle_arc, t1, C1.sign);
        Crossing d3 = m_under_at_c3
                          ? make_crossing(m_at_c3.in, m_at_c3.out, b_at_c3.in, b_at_c3.out, C3.sign)
                          : make_crossing(b_at_c3.in, b_at_c3.out, m_at_c3.in, m_at_c3.out, C3.sign);

        auto crossings = pd.crossings();
        crossings[static_cast<std::size_t>(c1)] = d1;
        crossings[static_cast<std::size_t>(c2)] = d2;
        crossings[static_cast<std::size_t>(c3)] = d3;
        return PDCode(std::move(crossings), pd.components());
    }
    throw ValidationError("r3_slide: no triangular face at arc " + std::to_string(middle_arc));
}

} // namespace mubar
