#include "mubar/longitudes.hpp"

#include "mubar/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace mubar {

const TruncatedSeries& PeripheralData::series(int component) const {
    if (component < 1 || component > components)
        throw ValidationError("PeripheralData: component out of range");
    return longitude_series[static_cast<std::size_t>(component - 1)];
}

PeripheralData braid_peripheral(const BraidWord& braid, int degree_bound) {
    if (degree_bound < 1)
        throw ValidationError("braid_peripheral: degree bound must be >= 1");
    const int m = braid.strands();
    PeripheralData data;
    data.components = m;
    data.degree_bound = degree_bound;
    for (int i = 1; i <= m; ++i) {
        const Word image = braid.artin_image(i);
        const auto conj = image.generator_conjugate();
        if (!conj || conj->second != i)
            throw ValidationError("braid_peripheral: braid is not pure (strand " +
                                  std::to_string(i) + " does not return)");
        const Word& w = conj->first;
        const int e = w.exponent_sum(i);
        std::vector<int> framing(static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? i : -i);
        const Word longitude = Word(m, std::move(framing)) * w;
        data.longitude_series.push_back(magnus_expand(longitude, degree_bound));
        data.longitude_words.push_back(longitude);
    }
    return data;
}

namespace {

// One arc of a component traversal: the arc label, the meridian variable of
// its component, and the crossing data where the arc terminates (if it ends
// in an underpass, the canonical over arc and the crossing sign).
struct ArcStep {
    int arc = 0;
    bool ends_under = false;
    int over_arc = 0;
    int sign = 0;
};

struct DiagramWalk {
    int components = 0;
    std::vector<std::vector<ArcStep>> steps;      // per component, from base arc
    std::unordered_set<int> needed;               // arcs used as over arcs
    std::unordered_map<int, int> meridian_of_arc; // arc -> component (1-based)
};

DiagramWalk build_walk(const PDCode& pd) {
    DiagramWalk walk;
    walk.components = static_cast<int>(pd.components().size());
    walk.steps.resize(pd.components().size());
    for (const Crossing& c : pd.crossings())
        walk.needed.insert(c.over_in());

    for (std::size_t ci = 0; ci < pd.components().size(); ++ci) {
        const auto& cycle = pd.components()[ci];
        const auto base = std::min_element(cycle.begin(), cycle.end());
        std::vector<int> rotated(base, cycle.end());
        rotated.insert(rotated.end(), cycle.begin(), base);
        for (int arc : rotated) {
            walk.meridian_of_arc[arc] = static_cast<int>(ci) + 1;
            ArcStep step;
            step.arc = arc;
            if (const auto passage = pd.passage_from(arc); passage && passage->under) {
                const Crossing& c = pd.crossings()[static_cast<std::size_t>(passage->crossing)];
                step.ends_under = true;
                step.over_arc = c.over_in();
                step.sign = c.sign;
            }
            walk.steps[ci].push_back(step);
        }
    }
    return walk;
}

std::vector<Word> word_longitudes(const DiagramWalk& walk, int stages,
                                  std::size_t letter_budget) {
    const int m = walk.components;
    std::unordered_map<int, Word> rho;
    for (int arc : walk.needed)
        rho.emplace(arc, Word::generator(m, walk.meridian_of_arc.at(arc)));

    auto charge = [letter_budget](std::size_t letters) {
        if (letters > letter_budget)
            throw CapacityError("wirtinger longitudes: stage words exceed " +
                                std::to_string(letter_budget) + " letters");
    };

    for (int stage = 0; stage < stages; ++stage) {
        std::unordered_map<int, Word> next;
        next.reserve(rho.size());
        std::size_t total = 0;
        for (const auto& steps : walk.steps) {
            Word v = Word::identity(m);
            for (const ArcStep& step : steps) {
                if (walk.needed.count(step.arc)) {
                    Word value = Word::generator(m, walk.meridian_of_arc.at(step.arc))
                                     .conjugated_by(v);
                    total += value.length();
                    charge(total);
                    next.emplace(step.arc, std::move(value));
                }
                if (step.ends_under) {
                    const Word& r = rho.at(step.over_arc);
                    v = (step.sign > 0 ? r.inverse() : r) * v;
                    charge(v.length());
                }
            }
        }
        rho = std::move(next);
    }

    std::vector<Word> longitudes;
    longitudes.reserve(walk.steps.size());
    for (std::size_t ci = 0; ci < walk.steps.size(); ++ci) {
        Word l = Word::identity(m);
        for (const ArcStep& step : walk.steps[ci])
            if (step.ends_under) {
                const Word& r = rho.at(step.over_arc);
                l = l * (step.sign > 0 ? r : r.inverse());
                charge(l.length());
            }
        const int i = static_cast<int>(ci) + 1;
        const int e = l.exponent_sum(i);
        std::vector<int> framing(static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? i : -i);
        longitudes.push_back(Word(m, std::move(framing)) * l);
    }
    return longitudes;
}

std::vector<TruncatedSeries> series_longitudes(const DiagramWalk& walk, int stages,
                                               int degree_bound) {
    const int m = walk.components;
    auto meridian = [m, degree_bound](int i) {
        return TruncatedSeries::generator_image(m, degree_bound, i, +1);
    };

    std::unordered_map<int, TruncatedSeries> rho;
    for (int arc : walk.needed)
        rho.emplace(arc, meridian(walk.meridian_of_arc.at(arc)));

    for (int stage = 0; stage < stages; ++stage) {
        std::unordered_map<int, TruncatedSeries> inv;
        inv.reserve(rho.size());
        auto inverse_of = [&rho, &inv](int arc) -> const TruncatedSeries& {
            if (const auto it = inv.find(arc); it != inv.end())
                return it->second;
            return inv.emplace(arc, rho.at(arc).inverse()).first->second;
        };

        std::unordered_map<int, TruncatedSeries> next;
        next.reserve(rho.size());
        for (const auto& steps : walk.steps) {
            TruncatedSeries v = TruncatedSeries::one(m, degree_bound);
            TruncatedSeries v_inv = v;
            for (const ArcStep& step : steps) {
                if (walk.needed.count(step.arc))
                    next.emplace(step.arc,
                                 v * meridian(walk.meridian_of_arc.at(step.arc)) * v_inv);
                if (step.ends_under) {
                    if (step.sign > 0) {
                        v = inverse_of(step.over_arc) * v;
                        v_inv = v_inv * rho.at(step.over_arc);
                    } else {
                        v = rho.at(step.over_arc) * v;
                        v_inv = v_inv * inverse_of(step.over_arc);
                    }
                }
            }
        }
        rho = std::move(next);
    }

    std::unordered_map<int, TruncatedSeries> inv;
    std::vector<TruncatedSeries> longitudes;
    longitudes.reserve(walk.steps.size());
    for (std::size_t ci = 0; ci < walk.steps.size(); ++ci) {
        TruncatedSeries l = TruncatedSeries::one(m, degree_bound);
        for (const ArcStep& step : walk.steps[ci])
            if (step.ends_under) {
                if (step.sign > 0) {
                    l = l * rho.at(step.over_arc);
                } else {
                    auto it = inv.find(step.over_arc);
                    if (it == inv.end())
                        it = inv.emplace(step.over_arc, rho.at(step.over_arc).inverse()).first;
                    l = l * it->second;
                }
            }
        const int i = static_cast<int>(ci) + 1;
        const auto e = to_int64(l.linear_coefficient(i));
        if (!e)
            throw CapacityError("wirtinger longitudes: framing exponent out of range");
        longitudes.push_back(meridian(i).pow(-*e) * l);
    }
    return longitudes;
}

} // namespace

PeripheralData wirtinger_peripheral(const PDCode& pd, int degree_bound,
                                    const WirtingerOptions& options) {
    if (degree_bound < 1)
        throw ValidationError("wirtinger_peripheral: degree bound must be >= 1");
    const DiagramWalk walk = build_walk(pd);

    PeripheralData data;
    data.components = walk.components;
    data.degree_bound = degree_bound;

    if (options.keep_words || options.require_words) {
        try {
            auto words = word_longitudes(walk, degree_bound, options.word_letter_budget);
            for (auto& w : words) {
                data.longitude_series.push_back(magnus_expand(w, degree_bound));
                data.longitude_words.push_back(std::move(w));
            }
            return data;
        } catch (const CapacityError&) {
            if (options.require_words)
                throw;
        }
    }

    data.longitude_series = series_longitudes(walk, degree_bound, degree_bound);
    data.longitude_words.assign(static_cast<std::size_t>(walk.components), std::nullopt);
    return data;
}

bool stabilization_check(const PDCode& pd, int degree_bound, const WirtingerOptions& options) {
    const PeripheralData base = wirtinger_peripheral(pd, degree_bound, options);
    const PeripheralData deeper = wirtinger_peripheral(pd, degree_bound + 1, options);
    for (int i = 1; i <= base.components; ++i)
        if (!(deeper.series(i).truncated(degree_bound) == base.series(i)))
            return false;
    return true;
}

} // namespace mubar
