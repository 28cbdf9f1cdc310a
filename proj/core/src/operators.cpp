#include "mubar/operators.hpp"

#include "mubar/errors.hpp"
#include "mubar/link.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace mubar {

namespace {

// Handedness of the framing-correction twists: a self-crossing of sign s
// already carries one s-opposed full twist between the lanes inside its
// cable tile, so the correction tiles must run with the kink, not against
// it.  Fixed by the regression anchor that doubling a kinked unknot (either
// kink sign) still yields the unlink.
constexpr int kBingTwistHandedness = -1;

// Lane labels carried by one original arc after cabling.  P runs parallel to
// the arc, A antiparallel.  p_out/a_in attach to the tile producing the arc,
// p_in/a_out to the tile consuming it; the pairs differ only on the arc that
// hosts the twist/clasp tiles (or when the component is a bare circle).
struct LaneLabels {
    int p_in = 0, p_out = 0, a_in = 0, a_out = 0;
    int single = 0; // undoubled components keep their one lane
    bool doubled = false;
};

// Boundary labels of the tile chain inserted along a doubled component's
// base arc: p_link[i] is the P-lane arc between tile i and tile i+1 (index 0
// = producer side, index k = consumer side), a_link[i] the A-lane arc at the
// same boundary.  For a crossing-free circle the chain closes on itself.
struct Chain {
    std::vector<int> p_link;
    std::vector<int> a_link;
    int twist_tiles = 0;
    int handedness = 0;
};

// One full twist between the antiparallel lanes: two equal-sign crossings
// with the over role alternating between the lanes.  h = +1 gives two
// positive crossings, h = -1 the mirror image.
void emit_full_twist(std::vector<Crossing>& out, int& next_label, int h,
                     int p_top, int p_bottom, int a_top, int a_bottom) {
    const int p_mid = next_label++;
    const int a_mid = next_label++;
    if (h > 0) {
        out.push_back(make_crossing(p_top, p_mid, a_mid, a_top, +1));
        out.push_back(make_crossing(a_bottom, a_mid, p_mid, p_bottom, +1));
    } else {
        out.push_back(make_crossing(a_mid, a_top, p_top, p_mid, -1));
        out.push_back(make_crossing(p_mid, p_bottom, a_bottom, a_mid, -1));
    }
}

// The clasp tile: both lanes of the band fold back inside a fresh ring
// component.  The P lane enters from above (alpha), folds, and leaves upward
// on the A lane (theta); the A lane enters from below (eps), folds, and
// leaves downward on the P lane (delta).  The ring is hooked through each
// fold with alternating over/under, and the two hooks carry opposite signs,
// so lk(band, ring) = 0 while neither fold can slide free.  Returns the ring
// cycle.
std::vector<int> emit_clasp(std::vector<Crossing>& out, int& next_label, int clasp_sign,
                            int alpha, int delta, int theta, int eps) {
    const int f_top = next_label++;
    const int f_bot = next_label++;
    const int r1 = next_label++;
    const int r2 = next_label++;
    const int r3 = next_label++;
    const int r4 = next_label++;
    if (clasp_sign >= 0) {
        out.push_back(make_crossing(alpha, f_top, r4, r1, +1));
        out.push_back(make_crossing(r1, r2, f_top, theta, +1));
        out.push_back(make_crossing(r2, r3, eps, f_bot, -1));
        out.push_back(make_crossing(f_bot, delta, r3, r4, -1));
    } else {
        out.push_back(make_crossing(r4, r1, alpha, f_top, -1));
        out.push_back(make_crossing(f_top, theta, r1, r2, -1));
        out.push_back(make_crossing(eps, f_bot, r2, r3, +1));
        out.push_back(make_crossing(r3, r4, f_bot, delta, +1));
    }
    return {r1, r2, r3, r4};
}

// Arc-successor map over a crossing list: every passage ends one arc and
// starts the next along the same component.
std::unordered_map<int, int> successor_map(const std::vector<Crossing>& crossings) {
    std::unordered_map<int, int> succ;
    succ.reserve(crossings.size() * 2);
    for (const Crossing& c : crossings) {
        succ[c.under_in()] = c.under_out();
        succ[c.over_in()] = c.over_out();
    }
    return succ;
}

std::vector<int> walk_cycle(const std::unordered_map<int, int>& succ, int start) {
    std::vector<int> cycle;
    int arc = start;
    do {
        cycle.push_back(arc);
        auto it = succ.find(arc);
        if (it == succ.end())
            throw ValidationError("doubling produced a dangling arc " + std::to_string(arc));
        arc = it->second;
    } while (arc != start && cycle.size() <= succ.size());
    if (arc != start)
        throw ValidationError("doubling produced a non-closed strand at arc " + std::to_string(start));
    return cycle;
}

} // namespace

PDCode bing_double(const PDCode& pd, const DoublingSpec& spec) {
    const int m = pd.num_components();
    if (m == 0)
        throw ValidationError("cannot double an empty diagram");

    std::vector<int> targets = spec.targets;
    if (targets.empty()) {
        targets.resize(static_cast<std::size_t>(m));
        std::iota(targets.begin(), targets.end(), 1);
    } else {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        if (targets.front() < 1 || targets.back() > m)
            throw ValidationError("doubling target out of range");
    }
    std::vector<char> doubled(static_cast<std::size_t>(m) + 1, 0);
    for (int t : targets) doubled[static_cast<std::size_t>(t)] = 1;

    // Size guard before any allocation.
    std::size_t expected = 0;
    for (const Crossing& c : pd.crossings()) {
        const bool du = doubled[static_cast<std::size_t>(pd.component_of(c.under_in()))];
        const bool dv = doubled[static_cast<std::size_t>(pd.component_of(c.over_in()))];
        expected += (du && dv) ? 4 : (du || dv) ? 2 : 1;
    }
    for (int t : targets) {
        const long long w = pd.self_writhe(t);
        expected += 2 * static_cast<std::size_t>(w < 0 ? -w : w) + 4;
    }
    if (expected > spec.max_crossings)
        throw CapacityError("doubled diagram would need " + std::to_string(expected) +
                            " crossings, over the cap of " + std::to_string(spec.max_crossings));

    int next_label = 1;
    std::map<int, LaneLabels> lanes;
    std::map<int, Chain> chains; // component -> chain on its base arc

    for (int ci = 1; ci <= m; ++ci) {
        const auto& cycle = pd.components()[static_cast<std::size_t>(ci - 1)];
        if (!doubled[static_cast<std::size_t>(ci)]) {
            for (int arc : cycle) {
                LaneLabels l;
                l.single = next_label++;
                lanes[arc] = l;
            }
            continue;
        }
        const int base = *std::min_element(cycle.begin(), cycle.end());
        const long long w = pd.self_writhe(ci);
        Chain ch;
        ch.twist_tiles = static_cast<int>(w < 0 ? -w : w);
        ch.handedness = (w > 0 ? -1 : +1) * kBingTwistHandedness;
        const int k = ch.twist_tiles + 1; // twists then the clasp
        ch.p_link.resize(static_cast<std::size_t>(k) + 1);
        ch.a_link.resize(static_cast<std::size_t>(k) + 1);
        const bool circle = !pd.passage_from(base).has_value();
        for (int i = 0; i < k; ++i) {
            ch.p_link[static_cast<std::size_t>(i)] = next_label++;
            ch.a_link[static_cast<std::size_t>(i)] = next_label++;
        }
        ch.p_link[static_cast<std::size_t>(k)] = circle ? ch.p_link[0] : next_label++;
        ch.a_link[static_cast<std::size_t>(k)] = circle ? ch.a_link[0] : next_label++;

        for (int arc : cycle) {
            LaneLabels l;
            l.doubled = true;
            if (arc == base) {
                l.p_out = ch.p_link.front();
                l.p_in = ch.p_link.back();
                l.a_in = ch.a_link.front();
                l.a_out = ch.a_link.back();
            } else {
                l.p_in = l.p_out = next_label++;
                l.a_in = l.a_out = next_label++;
            }
            lanes[arc] = l;
        }
        chains[ci] = std::move(ch);
    }

    std::vector<Crossing> out;
    out.reserve(expected);

    // Cable tiles over the original crossings.  Under-lanes run vertically
    // (P down), and the branch on the original sign tracks which over-lane
    // they meet first; sub-crossing signs are the original sign times the
    // lane direction product.
    for (const Crossing& c : pd.crossings()) {
        const int s = c.sign;
        const LaneLabels& ui = lanes.at(c.under_in());
        const LaneLabels& uo = lanes.at(c.under_out());
        const LaneLabels& oi = lanes.at(c.over_in());
        const LaneLabels& oo = lanes.at(c.over_out());
        if (ui.doubled && oi.doubled) {
            const int i_up = next_label++;
            const int i_ua = next_label++;
            const int i_vp = next_label++;
            const int i_va = next_label++;
            if (s > 0) {
                out.push_back(make_crossing(ui.p_in, i_up, i_va, oi.a_out, -s));
                out.push_back(make_crossing(i_up, uo.p_out, oi.p_in, i_vp, s));
                out.push_back(make_crossing(uo.a_in, i_ua, i_vp, oo.p_out, -s));
                out.push_back(make_crossing(i_ua, ui.a_out, oo.a_in, i_va, s));
            } else {
                out.push_back(make_crossing(ui.p_in, i_up, i_vp, oo.p_out, s));
                out.push_back(make_crossing(i_up, uo.p_out, oo.a_in, i_va, -s));
                out.push_back(make_crossing(uo.a_in, i_ua, i_va, oi.a_out, s));
                out.push_back(make_crossing(i_ua, ui.a_out, oi.p_in, i_vp, -s));
            }
        } else if (ui.doubled) {
            const int i_v = next_label++;
            if (s > 0) {
                out.push_back(make_crossing(ui.p_in, uo.p_out, oi.single, i_v, s));
                out.push_back(make_crossing(uo.a_in, ui.a_out, i_v, oo.single, -s));
            } else {
                out.push_back(make_crossing(uo.a_in, ui.a_out, oi.single, i_v, -s));
                out.push_back(make_crossing(ui.p_in, uo.p_out, i_v, oo.single, s));
            }
        } else if (oi.doubled) {
            const int i_u = next_label++;
            if (s > 0) {
                out.push_back(make_crossing(ui.single, i_u, oo.a_in, oi.a_out, -s));
                out.push_back(make_crossing(i_u, uo.single, oi.p_in, oo.p_out, s));
            } else {
                out.push_back(make_crossing(ui.single, i_u, oi.p_in, oo.p_out, s));
                out.push_back(make_crossing(i_u, uo.single, oo.a_in, oi.a_out, -s));
            }
        } else {
            out.push_back(make_crossing(ui.single, uo.single, oi.single, oo.single, s));
        }
    }

    // Twist and clasp tiles along each doubled component's base arc.
    std::map<int, std::vector<int>> ring_cycles;
    for (int t : targets) {
        const Chain& ch = chains.at(t);
        const int k = ch.twist_tiles + 1;
        for (int i = 1; i <= ch.twist_tiles; ++i) {
            emit_full_twist(out, next_label, ch.handedness,
                            ch.p_link[static_cast<std::size_t>(i - 1)],
                            ch.p_link[static_cast<std::size_t>(i)],
                            ch.a_link[static_cast<std::size_t>(i - 1)],
                            ch.a_link[static_cast<std::size_t>(i)]);
        }
        ring_cycles[t] = emit_clasp(out, next_label, spec.clasp_sign,
                                    ch.p_link[static_cast<std::size_t>(k - 1)],
                                    ch.p_link[static_cast<std::size_t>(k)],
                                    ch.a_link[static_cast<std::size_t>(k - 1)],
                                    ch.a_link[static_cast<std::size_t>(k)]);
    }

    // Assemble components: band (or untouched component) at each original
    // position, then the rings in target order.
    const auto succ = successor_map(out);
    std::vector<std::vector<int>> components;
    components.reserve(static_cast<std::size_t>(m) + targets.size());
    for (int ci = 1; ci <= m; ++ci) {
        const auto& cycle = pd.components()[static_cast<std::size_t>(ci - 1)];
        if (doubled[static_cast<std::size_t>(ci)]) {
            components.push_back(walk_cycle(succ, chains.at(ci).p_link.front()));
        } else if (!pd.passage_from(cycle.front()).has_value()) {
            components.push_back({lanes.at(cycle.front()).single});
        } else {
            components.push_back(walk_cycle(succ, lanes.at(cycle.front()).single));
        }
    }
    for (int t : targets) components.push_back(ring_cycles.at(t));

    return PDCode(std::move(out), std::move(components)).relabeled_sequential();
}

PDCode iterated_bing_double(const PDCode& pd, int times, const DoublingSpec& spec) {
    if (times < 0)
        throw ValidationError("iterated doubling count must be nonnegative");
    PDCode result = pd;
    DoublingSpec all = spec;
    all.targets.clear();
    for (int i = 0; i < times; ++i) result = bing_double(result, all);
    return result;
}

PDCode twisted_whitehead(int t) {
    // Closure of the three-strand braid s1^-1 s2 s1^-(2t-1) s2 s1^-1: the
    // flanking letters are the four mixed crossings where the loop passes
    // through the ring (two opposite-sign pairs, so lk = 0), and the middle
    // box holds 2t-1 half twists between the loop's two strands, t full
    // twists with the innermost acting as the clasp.  At t = 0 the box
    // carries one positive half twist and the word reduces through the braid
    // relation and cyclic moves to s2 alone, the two-component unlink.
    std::vector<int> letters = {-1, 2};
    const int half_twists = 2 * t - 1;
    const int s = half_twists >= 0 ? -1 : +1;
    for (int i = std::abs(half_twists); i > 0; --i) letters.push_back(s);
    letters.push_back(2);
    letters.push_back(-1);
    return closure_diagram(BraidWord(3, std::move(letters)));
}

BraidWord braid_commutator_link() {
    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    const BraidWord s1 = BraidWord::parse("s1", 3);
    return commutator(br, br.conjugated_by(s1));
}

} // namespace mubar
