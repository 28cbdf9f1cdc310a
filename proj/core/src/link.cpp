#include "mubar/link.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mubar {

PDCode closure_diagram(const BraidWord& braid) {
    const int s = braid.strands();
    std::vector<int> current(static_cast<std::size_t>(s) + 1);
    std::iota(current.begin(), current.end(), 0);  // current[p] = arc now at position p
    int fresh = s + 1;

    std::vector<Crossing> crossings;
    crossings.reserve(braid.letters().size());
    for (int letter : braid.letters()) {
        const int k = letter > 0 ? letter : -letter;
        const int a = current[static_cast<std::size_t>(k)];      // enters from the left
        const int b = current[static_cast<std::size_t>(k) + 1];  // enters from the right
        const int out_a = fresh++;
        const int out_b = fresh++;
        if (letter > 0)
            crossings.push_back(make_crossing(a, out_a, b, out_b, +1));
        else
            crossings.push_back(make_crossing(b, out_b, a, out_a, -1));
        // strands swap positions: b's continuation lands on the left
        current[static_cast<std::size_t>(k)] = out_b;
        current[static_cast<std::size_t>(k) + 1] = out_a;
    }

    // close up: the bottom arc at position p is the top arc p
    int circles = 0;
    for (int p = 1; p <= s; ++p) {
        const int bottom = current[static_cast<std::size_t>(p)];
        if (bottom == p)
            ++circles;  // the strand met no crossing
        else
            for (auto& c : crossings)
                for (int& arc : c.arcs)
                    if (arc == bottom)
                        arc = p;
    }
    return PDCode::from_crossings(crossings, circles);
}

namespace {

// Permutation cycles of the braid, as sorted strand lists ordered by
// smallest strand.  Strand p is the strand entering top position p.
std::vector<std::vector<int>> strand_cycles(const BraidWord& braid) {
    const auto perm = braid.permutation();
    const int s = braid.strands();
    std::vector<bool> seen(static_cast<std::size_t>(s) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int p = 1; p <= s; ++p) {
        if (seen[static_cast<std::size_t>(p)])
            continue;
        std::vector<int> cycle;
        int q = p;
        while (!seen[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            cycle.push_back(q);
            q = perm[static_cast<std::size_t>(q)];
        }
        std::sort(cycle.begin(), cycle.end());
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

} // namespace

std::vector<std::vector<int>> closure_components(const BraidWord& braid) {
    return strand_cycles(braid);
}

std::vector<std::vector<long long>> closure_linking_matrix(const BraidWord& braid) {
    const auto cycles = strand_cycles(braid);
    const int s = braid.strands();
    std::vector<int> comp_of(static_cast<std::size_t>(s) + 1, -1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int strand : cycles[c])
            comp_of[static_cast<std::size_t>(strand)] = static_cast<int>(c);

    const std::size_t m = cycles.size();
    std::vector<std::vector<long long>> signed_counts(m, std::vector<long long>(m, 0));
    std::vector<int> strand_at(static_cast<std::size_t>(s) + 1);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int letter : braid.letters()) {
        const int k = letter > 0 ? letter : -letter;
        const int u = strand_at[static_cast<std::size_t>(k)];
        const int v = strand_at[static_cast<std::size_t>(k) + 1];
        const int sign = letter > 0 ? 1 : -1;
        const int cu = comp_of[static_cast<std::size_t>(u)];
        const int cv = comp_of[static_cast<std::size_t>(v)];
        signed_counts[static_cast<std::size_t>(cu)][static_cast<std::size_t>(cv)] += sign;
        if (cu != cv)
            signed_counts[static_cast<std::size_t>(cv)][static_cast<std::size_t>(cu)] += sign;
        std::swap(strand_at[static_cast<std::size_t>(k)], strand_at[static_cast<std::size_t>(k) + 1]);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) {
                if (signed_counts[i][j] % 2 != 0)
                    throw ValidationError("closure_linking_matrix: odd crossing count between components");
                signed_counts[i][j] /= 2;
            }
    return signed_counts;
}

const BraidWord& Link::braid() const {
    if (!from_braid())
        throw ValidationError("Link: not a braid presentation");
    return std::get<BraidWord>(repr_);
}

const PDCode& Link::pd() const {
    if (from_braid())
        throw ValidationError("Link: not a diagram presentation");
    return std::get<PDCode>(repr_);
}

PDCode Link::diagram() const {
    if (from_braid())
        return closure_diagram(std::get<BraidWord>(repr_));
    return std::get<PDCode>(repr_);
}

int Link::component_count() const {
    if (from_braid())
        return static_cast<int>(strand_cycles(std::get<BraidWord>(repr_)).size());
    return static_cast<int>(std::get<PDCode>(repr_).components().size());
}

std::vector<std::vector<long long>> Link::linking_matrix() const {
    if (from_braid())
        return closure_linking_matrix(std::get<BraidWord>(repr_));
    return std::get<PDCode>(repr_).linking_matrix();
}

} // namespace mubar
