#pragma once

#include "mubar/braid.hpp"
#include "mubar/pd_code.hpp"

#include <variant>
#include <vector>

namespace mubar {

// Planar diagram of the closure of a braid.  Strands run downward and the
// closure joins each bottom endpoint back to the top endpoint at the same
// position.  The top arc at position p is labelled p, so meridians of the
// closure correspond to braid strands position for position.  A positive
// letter crosses the strand entering from the right over the one entering
// from the left, producing a positive crossing.
PDCode closure_diagram(const BraidWord& braid);

// Components of the closure, one sorted strand list per component, ordered
// by smallest strand.  Strands are numbered by their top position.
std::vector<std::vector<int>> closure_components(const BraidWord& braid);

// Linking matrix of the closure, indexed by closure component.  Off-diagonal
// entries are linking numbers; diagonal entries are diagram self-writhes
// (zero for pure braids, whose strands never cross themselves).
std::vector<std::vector<long long>> closure_linking_matrix(const BraidWord& braid);

// A link given either as a braid closure or as an explicit diagram.
class Link {
public:
    explicit Link(BraidWord braid) : repr_(std::move(braid)) {}
    explicit Link(PDCode pd) : repr_(std::move(pd)) {}

    bool from_braid() const { return std::holds_alternative<BraidWord>(repr_); }
    const BraidWord& braid() const;
    const PDCode& pd() const;

    // The underlying diagram: the stored one, or the braid closure.
    PDCode diagram() const;

    int component_count() const;
    std::vector<std::vector<long long>> linking_matrix() const;

private:
    std::variant<BraidWord, PDCode> repr_;
};

} // namespace mubar
