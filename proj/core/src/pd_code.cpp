#include "mubar/pd_code.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mubar {

Crossing make_crossing(int under_in, int under_out, int over_in, int over_out, int sign) {
    if (sign != 1 && sign != -1)
        throw ValidationError("make_crossing: sign must be +-1");
    Crossing c;
    c.sign = sign;
    c.arcs[0] = under_in;
    c.arcs[2] = under_out;
    if (sign > 0) {
        c.arcs[3] = over_in;
        c.arcs[1] = over_out;
    } else {
        c.arcs[1] = over_in;
        c.arcs[3] = over_out;
    }
    return c;
}

namespace {

// successor map induced by the two passages of every crossing
std::map<int, int> passage_successors(const std::vector<Crossing>& crossings) {
    std::map<int, int> succ;
    auto add = [&succ](int in, int out, int crossing_index) {
        auto [it, inserted] = succ.try_emplace(in, out);
        if (!inserted)
            throw ValidationError("PD code: arc " + std::to_string(in) +
                                  " enters more than one passage (crossing " +
                                  std::to_string(crossing_index) + ")");
    };
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        const Crossing& c = crossings[k];
        add(c.under_in(), c.under_out(), static_cast<int>(k));
        add(c.over_in(), c.over_out(), static_cast<int>(k));
    }
    return succ;
}

std::vector<std::vector<int>> derive_cycles(const std::vector<Crossing>& crossings) {
    const auto succ = passage_successors(crossings);
    std::set<int> seen;
    std::vector<std::vector<int>> cycles;
    for (const auto& [start, next] : succ) {
        if (seen.count(start))
            continue;
        std::vector<int> cycle;
        int arc = start;
        while (true) {
            if (seen.count(arc))
                throw ValidationError("PD code: arc " + std::to_string(arc) +
                                      " reached from two different cycles");
            seen.insert(arc);
            cycle.push_back(arc);
            auto it = succ.find(arc);
            if (it == succ.end())
                throw ValidationError("PD code: arc " + std::to_string(arc) +
                                      " leaves a crossing but never enters one");
            arc = it->second;
            if (arc == start)
                break;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<int> rotated_to_min(std::vector<int> cycle) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    return cycle;
}

} // namespace

PDCode::PDCode(std::vector<Crossing> crossings, std::vector<std::vector<int>> components)
    : crossings_(std::move(crossings)), components_(std::move(components)) {
    validate();
}

PDCode PDCode::from_crossings(std::vector<Crossing> crossings, int extra_circles) {
    auto cycles = derive_cycles(crossings);
    for (auto& cycle : cycles)
        cycle = rotated_to_min(cycle);
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    int next_label = 1;
    for (const auto& c : crossings)
        for (int arc : c.arcs)
            next_label = std::max(next_label, arc + 1);
    for (int k = 0; k < extra_circles; ++k)
        cycles.push_back({next_label++});
    return PDCode(std::move(crossings), std::move(cycles));
}

void PDCode::validate() const {
    std::map<int, int> slot_count;
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
        const Crossing& c = crossings_[k];
        if (c.sign != 1 && c.sign != -1)
            throw ValidationError("PD code: crossing " + std::to_string(k) + " has sign " +
                                  std::to_string(c.sign));
        for (int arc : c.arcs) {
            if (arc <= 0)
                throw ValidationError("PD code: crossing " + std::to_string(k) +
                                      " has non-positive arc label");
            ++slot_count[arc];
        }
    }

    std::map<int, int> owner;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        const auto& cycle = components_[ci];
        if (cycle.empty())
            throw ValidationError("PD code: component " + std::to_string(ci + 1) + " is empty");
        for (int arc : cycle) {
            if (arc <= 0)
                throw ValidationError("PD code: component " + std::to_string(ci + 1) +
                                      " has non-positive arc label");
            auto [it, inserted] = owner.try_emplace(arc, static_cast<int>(ci + 1));
            if (!inserted)
                throw ValidationError("PD code: arc " + std::to_string(arc) +
                                      " appears in more than one component cycle");
        }
    }

    for (const auto& [arc, count] : slot_count) {
        if (count != 2)
            throw ValidationError("PD code: arc " + std::to_string(arc) + " fills " +
                                  std::to_string(count) + " crossing slots, expected 2");
        if (!owner.count(arc))
            throw ValidationError("PD code: arc " + std::to_string(arc) +
                                  " appears in crossings but in no component");
    }

    // Declared cycles must match the passage-derived ones.  This is also the
    // sign/orientation consistency check: a wrong sign swaps an over
    // passage's direction and breaks the cycle match.
    const auto derived = derive_cycles(crossings_);
    std::map<std::vector<int>, int> derived_index;
    for (std::size_t k = 0; k < derived.size(); ++k)
        derived_index[rotated_to_min(derived[k])] = static_cast<int>(k);

    std::size_t matched = 0;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        const auto& cycle = components_[ci];
        const bool in_crossings = slot_count.count(cycle.front()) > 0;
        if (!in_crossings) {
            if (cycle.size() != 1)
                throw ValidationError("PD code: component " + std::to_string(ci + 1) +
                                      " has crossing-free arcs in a multi-arc cycle");
            continue;
        }
        auto it = derived_index.find(rotated_to_min(cycle));
        if (it == derived_index.end())
            throw ValidationError("PD code: component " + std::to_string(ci + 1) +
                                  " does not match the cycle derived from its crossings "
                                  "(orientation inconsistency)");
        ++matched;
    }
    if (matched != derived.size())
        throw ValidationError("PD code: crossings describe " + std::to_string(derived.size()) +
                              " cycles but components declare " + std::to_string(matched));
}

int PDCode::component_of(int arc) const {
    for (std::size_t ci = 0; ci < components_.size(); ++ci)
        for (int a : components_[ci])
            if (a == arc)
                return static_cast<int>(ci + 1);
    throw ValidationError("PD code: arc " + std::to_string(arc) + " not in any component");
}

std::optional<Passage> PDCode::passage_from(int arc) const {
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
        if (crossings_[k].under_in() == arc)
            return Passage{static_cast<int>(k), true};
        if (crossings_[k].over_in() == arc)
            return Passage{static_cast<int>(k), false};
    }
    return std::nullopt;
}

long long PDCode::linking_number(int i, int j) const {
    if (i == j)
        throw std::invalid_argument("linking_number: components must differ");
    long long total = 0;
    for (const Crossing& c : crossings_) {
        const int cu = component_of(c.under_in());
        const int co = component_of(c.over_in());
        if ((cu == i && co == j) || (cu == j && co == i))
            total += c.sign;
    }
    if (total % 2 != 0)
        throw ValidationError("linking_number: odd signed crossing count between components " +
                              std::to_string(i) + " and " + std::to_string(j));
    return total / 2;
}

long long PDCode::self_writhe(int i) const {
    long long total = 0;
    for (const Crossing& c : crossings_)
        if (component_of(c.under_in()) == i && component_of(c.over_in()) == i)
            total += c.sign;
    return total;
}

std::vector<std::vector<long long>> PDCode::linking_matrix() const {
    const int m = num_components();
    std::vector<std::vector<long long>> lk(static_cast<std::size_t>(m),
                                           std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                (i == j) ? self_writhe(i) : linking_number(i, j);
    return lk;
}

PDCode PDCode::reversed_component(int i) const {
    std::vector<Crossing> crossings;
    crossings.reserve(crossings_.size());
    for (const Crossing& c : crossings_) {
        const int cu = component_of(c.under_in());
        const int co = component_of(c.over_in());
        const bool ru = cu == i;
        const bool ro = co == i;
        int under_in = c.under_in(), under_out = c.under_out();
        int over_in = c.over_in(), over_out = c.over_out();
        if (ru)
            std::swap(under_in, under_out);
        if (ro)
            std::swap(over_in, over_out);
        const int sign = (ru != ro) ? -c.sign : c.sign;
        crossings.push_back(make_crossing(under_in, under_out, over_in, over_out, sign));
    }
    auto components = components_;
    auto& cycle = components[static_cast<std::size_t>(i - 1)];
    std::reverse(cycle.begin() + 1, cycle.end());
    return PDCode(std::move(crossings), std::move(components));
}

PDCode PDCode::with_component_moved(int from, int to) const {
    auto components = components_;
    if (from < 1 || from > num_components() || to < 1 || to > num_components())
        throw std::invalid_argument("with_component_moved: index out of range");
    auto cycle = components[static_cast<std::size_t>(from - 1)];
    components.erase(components.begin() + (from - 1));
    components.insert(components.begin() + (to - 1), std::move(cycle));
    return PDCode(crossings_, std::move(components));
}

PDCode PDCode::relabeled_sequential() const {
    std::map<int, int> relabel;
    int next = 1;
    for (const auto& cycle : components_)
        for (int arc : cycle)
            relabel[arc] = next++;
    std::vector<Crossing> crossings = crossings_;
    for (auto& c : crossings)
        for (int& arc : c.arcs)
            arc = relabel.at(arc);
    std::vector<std::vector<int>> components = components_;
    for (auto& cycle : components)
        for (int& arc : cycle)
            arc = relabel.at(arc);
    return PDCode(std::move(crossings), std::move(components));
}

int PDCode::max_arc_label() const {
    int label = 0;
    for (const auto& cycle : components_)
        for (int arc : cycle)
            label = std::max(label, arc);
    for (const auto& c : crossings_)
        for (int arc : c.arcs)
            label = std::max(label, arc);
    return label;
}

} // namespace mubar
