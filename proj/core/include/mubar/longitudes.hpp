#pragma once

#include "mubar/braid.hpp"
#include "mubar/pd_code.hpp"
#include "mubar/series.hpp"
#include "mubar/word.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mubar {

// Meridian-longitude data of a link, truncated for invariant extraction.
// Component i (1-based) has meridian generator x_i; longitude_series[i-1] is
// the Magnus image of its 0-framed longitude, holding all terms of degree
// < degree_bound.  When the presentation allows it the exact longitude word
// in the free group on the meridians is kept as well.
struct PeripheralData {
    int components = 0;
    int degree_bound = 0;
    std::vector<std::optional<Word>> longitude_words;
    std::vector<TruncatedSeries> longitude_series;

    const TruncatedSeries& series(int component) const;
};

// Longitudes of a pure braid closure, read off the braid action on the free
// group: the image of x_i is w_i x_i w_i^{-1}, and the 0-framed longitude is
// x_i^{-e} w_i with e the x_i exponent sum of w_i.  Throws ValidationError
// for non-pure braids.
PeripheralData braid_peripheral(const BraidWord& braid, int degree_bound);

struct WirtingerOptions {
    // Try to keep exact longitude words.  Stage conjugator words grow
    // roughly like (2r)^degree_bound in the crossing count r, so large
    // diagrams blow the letter budget; unless require_words is set the
    // computation then falls back to the series-only path.
    bool keep_words = true;
    bool require_words = false;
    std::size_t word_letter_budget = std::size_t{1} << 20;
};

// Longitudes read off a diagram by staged approximation: stage k assigns
// each arc a conjugate of its component meridian, with conjugators built from
// stage k-1 values of the arcs passing over it; degree_bound stages fix every
// term of degree < degree_bound.  Each component is based at its smallest
// arc label, and its longitude is the product of the over-arc values met
// while traversing from the base arc, framing-corrected so the meridian
// exponent sum vanishes.
PeripheralData wirtinger_peripheral(const PDCode& pd, int degree_bound,
                                    const WirtingerOptions& options = {});

// Recomputes at degree_bound + 1 and compares all terms of degree
// < degree_bound; false means another stage still changes low-order terms.
bool stabilization_check(const PDCode& pd, int degree_bound,
                         const WirtingerOptions& options = {});

} // namespace mubar
