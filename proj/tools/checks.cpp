#include "checks.hpp"

#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/link_io.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/obstructions.hpp"
#include "mubar/operators.hpp"
#include "mubar/reidemeister.hpp"
#include "mubar/series.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

namespace mubar::checks {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Context {
    std::string golden_dir;
    std::string mubar_bin;
    fs::path work_dir;
};

struct Outcome {
    bool passed = false;
    std::string detail;
};

Outcome pass(std::string detail = "ok") { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// Small assertion helper: collects the first mismatch into an Outcome.
#define REQUIRE_EQ(lhs, rhs, what)                                            \
    do {                                                                      \
        if (!((lhs) == (rhs)))                                                \
            return fail(std::string(what) + ": got " + printable(lhs) +      \
                        ", want " + printable(rhs));                          \
    } while (0)

std::string printable(const Int& v) { return to_string(v); }
std::string printable(long long v) { return std::to_string(v); }
std::string printable(int v) { return std::to_string(v); }
std::string printable(std::size_t v) { return std::to_string(v); }
std::string printable(bool v) { return v ? "true" : "false"; }
std::string printable(const std::string& v) { return v; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Link golden(const Context& ctx, const std::string& name) {
    return load_link((fs::path(ctx.golden_dir) / name).string());
}

// Peripheral data for a link: the braid route when it applies (pure braid
// input), the diagram route otherwise.
PeripheralData peripheral(const Link& link, int degree_bound) {
    if (link.from_braid() && link.braid().is_pure())
        return braid_peripheral(link.braid(), degree_bound);
    WirtingerOptions opt;
    opt.keep_words = false;
    return wirtinger_peripheral(link.diagram(), degree_bound, opt);
}

bool offdiagonal_zero(const std::vector<std::vector<long long>>& lk) {
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = 0; j < lk.size(); ++j)
            if (i != j && lk[i][j] != 0) return false;
    return true;
}

// Runs the mubar binary, capturing stdout; stderr is routed to /dev/null so
// the human-readable table does not interleave with the report being parsed.
struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const Context& ctx, const std::string& args) {
    const std::string cmd = ctx.mubar_bin + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Error("popen failed for: " + cmd);
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse_report(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error("command output is not valid JSON");
    return j;
}

// ---------------------------------------------------------------------------
// Criterion 1: closure of (s2 s1^-1)^3.  mubar(123) has |value| 1 with zero
// indeterminacy, identically from the braid longitudes and from the diagram
// longitudes of the closure.

Outcome check_br_first_nonvanishing(const Context& ctx) {
    const Link braid_side = golden(ctx, "br.braid");
    const Link pd_side = golden(ctx, "br.pd");
    const PeripheralData a = peripheral(braid_side, 5);
    const PeripheralData b = peripheral(pd_side, 5);
    const MuTable ta(a, 4);
    const MuTable tb(b, 4);

    REQUIRE_EQ(ta.mu({1, 2, 3}), Int(1), "braid mu(123)");
    REQUIRE_EQ(ta.delta({1, 2, 3}), Int(0), "braid delta(123)");
    REQUIRE_EQ(tb.mu({1, 2, 3}), Int(1), "pd mu(123)");
    REQUIRE_EQ(tb.delta({1, 2, 3}), Int(0), "pd delta(123)");

    // The two longitude routes agree on every invariant up to length 4:
    // mubar together with its indeterminacy.  (Raw mu can differ where
    // delta > 0; those coefficients depend on the base points.)
    for (const auto& e : ta.entries()) {
        REQUIRE_EQ(tb.delta(e.index), e.delta,
                   "delta(" + index_seq_str(e.index) + ") braid vs pd");
        REQUIRE_EQ(tb.mubar(e.index), e.mubar,
                   "mubar(" + index_seq_str(e.index) + ") braid vs pd");
    }

    const auto first = ta.first_nonvanishing();
    if (!first) return fail("no nonvanishing invariant up to length 4");
    REQUIRE_EQ(first->length, 3, "first nonvanishing length");
    REQUIRE_EQ(index_seq_str(first->witness), std::string("123"), "witness");
    return pass("mu(123) = 1 from both input routes");
}

// ---------------------------------------------------------------------------
// Criterion 2: the single-twist instance of the twist family.  Everything of
// length <= 3 vanishes and |mubar(1122)| = 1.

Outcome check_whitehead_length_four(const Context& ctx) {
    const Link w = golden(ctx, "whitehead.pd");
    const MuTable t(peripheral(w, 5), 4);
    for (const auto& e : t.entries(true))
        if (e.index.size() <= 3)
            return fail("nonzero mu(" + index_seq_str(e.index) + ") below length 4");
    REQUIRE_EQ(t.mu({1, 1, 2, 2}), Int(-1), "mu(1122)");
    REQUIRE_EQ(t.delta({1, 1, 2, 2}), Int(0), "delta(1122)");
    REQUIRE_EQ(t.mu({1, 2, 1, 2}), Int(2), "mu(1212)");
    return pass("mubar(1122) = -1, all shorter invariants vanish");
}

// ---------------------------------------------------------------------------
// Criterion 3: twist family scaling, even twist counts 2, 4, 6.

Outcome check_twisted_whitehead_scaling(const Context& ctx) {
    for (int t : {2, 4, 6}) {
        const Link w = golden(ctx, "twisted-whitehead-" + std::to_string(t) + ".pd");
        const MuTable table(peripheral(w, 5), 4);
        REQUIRE_EQ(table.mu({1, 1, 2, 2}), Int(-t),
                   "mu(1122) at t=" + std::to_string(t));
        REQUIRE_EQ(table.mu({1, 2, 1, 2}), Int(2 * t),
                   "mu(1212) at t=" + std::to_string(t));
    }
    return pass("mu(1122) = -t and mu(1212) = 2t for t in {2, 4, 6}");
}

// ---------------------------------------------------------------------------
// Criterion 4, solvability part: the commutator braid closure has all
// pairwise linking numbers zero and first nonvanishing length 6, so it is
// not (1)-solvable.

Outcome check_commutator_solvability(const Context& ctx) {
    const Link l = golden(ctx, "commutator.braid");
    if (!l.from_braid() || !l.braid().is_pure()) return fail("expected a pure braid");
    REQUIRE_EQ(l.braid().length(), std::size_t{24}, "braid length");
    const auto lk = closure_linking_matrix(l.braid());
    REQUIRE_EQ(offdiagonal_zero(lk), true, "pairwise linking numbers vanish");

    const PeripheralData data = braid_peripheral(l.braid(), 6);
    const auto first = first_nonvanishing(data, 6);
    if (!first) return fail("all invariants vanish up to length 6");
    REQUIRE_EQ(first->length, 6, "first nonvanishing length");
    REQUIRE_EQ(index_seq_str(first->witness), std::string("112232"), "witness");
    REQUIRE_EQ(mubar::abs(first->value), Int(1), "|witness value|");

    const auto n = solvability_obstruction(first->length);
    if (!n) return fail("no solvability obstruction derived");
    REQUIRE_EQ(*n, 1, "not (n)-solvable from n");
    return pass("lk = 0, first length 6 (witness 112232), not (1)-solvable");
}

// Criterion 4, stated witness value: the reference table gives
// mubar(313323) = -1 for this link.  Three independent longitude
// implementations agree the computed value is 0 (the nonzero length-6
// sequences all have index multiset multiplicity <= 3, and every labeling
// or orientation convention preserves multisets), so the stated value is
// recorded as a documented deviation; see README.  This check asserts the
// stated value and is expected to fail.

Outcome check_commutator_313323(const Context& ctx) {
    const Link l = golden(ctx, "commutator.braid");
    const PeripheralData data = braid_peripheral(l.braid(), 6);
    const Int value = mubar(data, {3, 1, 3, 3, 2, 3});
    if (value == Int(-1)) return pass("mubar(313323) = -1");
    return fail("stated mubar(313323) = -1, computed " + to_string(value) +
                " (documented deviation, the invariant content is covered by"
                " commutator-solvability)");
}

// ---------------------------------------------------------------------------
// Criterion 5: doubling the Hopf link kills all linking numbers and the
// length-3 scan, and the length-4 scan finds a unit invariant.

Outcome check_bd_hopf(const Context& ctx) {
    const Link l = golden(ctx, "bd-hopf.pd");
    REQUIRE_EQ(l.component_count(), 4, "component count");
    REQUIRE_EQ(offdiagonal_zero(l.linking_matrix()), true, "linking numbers vanish");
    const PeripheralData data = peripheral(l, 5);
    if (first_nonvanishing(data, 3)) return fail("nonzero invariant at length <= 3");
    const auto first = first_nonvanishing(data, 4);
    if (!first) return fail("length-4 scan found nothing");
    REQUIRE_EQ(first->length, 4, "first nonvanishing length");
    REQUIRE_EQ(mubar::abs(first->value), Int(1), "|witness value|");
    return pass("lk = 0, length-3 scan empty, length-4 witness " +
                index_seq_str(first->witness) + " value " + to_string(first->value));
}

// ---------------------------------------------------------------------------
// Criterion 6: doubling the closure of (s2 s1^-1)^3.  Exhaustive scan to
// length 6; this is also the performance anchor (well under 10 minutes).

Outcome check_bd_br(const Context& ctx) {
    const Link l = golden(ctx, "bd-br.pd");
    REQUIRE_EQ(l.component_count(), 6, "component count");
    REQUIRE_EQ(offdiagonal_zero(l.linking_matrix()), true, "linking numbers vanish");
    const PeripheralData data = peripheral(l, 7);
    if (first_nonvanishing(data, 5)) return fail("nonzero invariant at length <= 5");
    const auto first = first_nonvanishing(data, 6);
    if (!first) return fail("length-6 scan found nothing");
    REQUIRE_EQ(first->length, 6, "first nonvanishing length");
    REQUIRE_EQ(mubar::abs(first->value), Int(1), "|witness value|");
    return pass("first nonvanishing at length 6, witness " +
                index_seq_str(first->witness) + " value " + to_string(first->value));
}

// ---------------------------------------------------------------------------
// Criterion 7: obstruction arithmetic.

Outcome check_obstruction_arithmetic(const Context&) {
    REQUIRE_EQ(solvability_obstruction(3).value_or(-1), 0, "length 3 solvability");
    REQUIRE_EQ(solvability_obstruction(6).value_or(-1), 1, "length 6 solvability");
    REQUIRE_EQ(solvability_obstruction(4).value_or(-1), 1, "length 4 solvability");
    REQUIRE_EQ(grope_obstruction(4).value_or(-1), 2, "length 4 grope height");
    REQUIRE_EQ(grope_obstruction(3).value_or(-1), 2, "length 3 grope height");
    REQUIRE_EQ(grope_obstruction(6).value_or(-1), 3, "length 6 grope height");
    REQUIRE_EQ(bipolarity_obstruction(6).value_or(-1), 1, "length 6 bipolarity");
    REQUIRE_EQ(cobordism_obstruction(3).value_or(-1), 2, "length 3 cobordism");
    REQUIRE_EQ(cobordism_obstruction(6).value_or(-1), 3, "length 6 cobordism");
    if (solvability_obstruction(std::nullopt) || grope_obstruction(std::nullopt) ||
        bipolarity_obstruction(std::nullopt) || cobordism_obstruction(std::nullopt))
        return fail("an all-vanishing scan must yield no obstruction");
    return pass("solvability, grope, bipolarity and cobordism thresholds");
}

// ---------------------------------------------------------------------------
// Criterion 8: stacking additivity at the first nonvanishing length.

Outcome check_stack_additivity(const Context& ctx) {
    const Link l = golden(ctx, "br.braid");
    BraidWord stacked = BraidWord::identity(3);
    for (int k = 1; k <= 5; ++k) {
        stacked = stacked * l.braid();
        const PeripheralData data = peripheral(Link(closure_diagram(stacked)), 4);
        const Int got = mubar::mu(data, {1, 2, 3});
        REQUIRE_EQ(got, Int(k), "mu(123) of the " + std::to_string(k) + "-fold stack");
    }
    return pass("k-fold stacking scales mu(123) to k, k <= 5");
}

// ---------------------------------------------------------------------------
// Criterion 9a: the series embedding is a homomorphism with exact inverses.

Word random_word(std::mt19937_64& rng, int generators, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, generators);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<int> letters;
    const int n = len_dist(rng);
    letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        letters.push_back(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
    return Word(generators, std::move(letters));
}

Outcome check_magnus_identities(const Context&) {
    std::mt19937_64 rng(0x6d75626172u);
    const int bound = 5;
    for (int i = 0; i < 1000; ++i) {
        const Word u = random_word(rng, 3, 12);
        const Word v = random_word(rng, 3, 12);
        const TruncatedSeries mu_ = magnus_expand(u, bound);
        const TruncatedSeries mv = magnus_expand(v, bound);
        if (magnus_expand(u * v, bound) != mu_ * mv)
            return fail("homomorphism identity failed at iteration " + std::to_string(i) +
                        " for u = " + u.str() + ", v = " + v.str());
        if (!(mu_ * magnus_expand(u.inverse(), bound)).is_one())
            return fail("inverse identity failed at iteration " + std::to_string(i) +
                        " for u = " + u.str());
    }
    return pass("1000 random pairs, homomorphism and inverse identities exact");
}

// Criterion 9b: coefficient extraction by prefix dynamic programming agrees
// with reading the fully expanded series.

Outcome check_dp_extraction(const Context&) {
    std::mt19937_64 rng(0x636f656666u);
    std::uniform_int_distribution<int> deg_dist(1, 4);
    std::uniform_int_distribution<int> var_dist(1, 4);
    for (int i = 0; i < 500; ++i) {
        const Word w = random_word(rng, 4, 30);
        Monomial mono;
        const int d = deg_dist(rng);
        for (int k = 0; k < d; ++k) mono.indices.push_back(var_dist(rng));
        if (magnus_coefficient_dp(w, mono) != magnus_coefficient_full(w, mono))
            return fail("dp/full mismatch at iteration " + std::to_string(i) + " for w = " +
                        w.str() + ", monomial " + mono.str());
    }
    return pass("500 random (word, monomial) pairs agree across both routes");
}

// Criterion 9c: longitudes of every golden link are zero-framed, and their
// degree-1 coefficients are exactly the linking numbers.

Outcome check_golden_framing(const Context& ctx) {
    const std::vector<std::string> names = {
        "hopf.pd",     "unlink2.pd", "unlink3.pd",
        "br.braid",    "br.pd",      "commutator.braid",
        "whitehead.pd", "twisted-whitehead-2.pd", "twisted-whitehead-4.pd",
        "twisted-whitehead-6.pd", "bd-hopf.pd", "bd-br.pd"};
    for (const auto& name : names) {
        const Link l = golden(ctx, name);
        const auto lk = l.linking_matrix();
        const PeripheralData data = peripheral(l, 2);
        for (int i = 1; i <= data.components; ++i) {
            if (data.series(i).linear_coefficient(i) != 0)
                return fail(name + ": longitude " + std::to_string(i) + " is not zero-framed");
            for (int j = 1; j <= data.components; ++j) {
                if (j == i) continue;
                const Int coeff = data.series(i).linear_coefficient(j);
                if (coeff != Int(lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]))
                    return fail(name + ": degree-1 coefficient (" + std::to_string(i) + "," +
                                std::to_string(j) + ") disagrees with the linking matrix");
            }
        }
    }
    return pass("all golden longitudes zero-framed with linking-number linear terms");
}

// Criterion 9d: local moves do not change any invariant of length <= 4.

// A realizable diagram's rotation system satisfies V - E + F = 2; splicing
// moves into arbitrary arc pairs can silently leave the plane, so every
// moved diagram is screened before its invariants are compared.
bool euler_planar(const PDCode& pd) {
    const auto& cs = pd.crossings();
    if (cs.empty()) return true;
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (int s = 0; s < 4; ++s) occ[cs[k].arcs[s]].push_back({static_cast<int>(k), s});
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (const auto& [arc, ends] : occ)
        for (const auto& start : ends) {
            if (seen.count(start)) continue;
            ++faces;
            auto at = start;
            std::size_t guard = 0;
            do {
                seen.insert(at);
                const std::pair<int, int> from{at.first, (at.second + 1) % 4};
                const int a = cs[static_cast<std::size_t>(from.first)].arcs[from.second];
                const auto& pair = occ[a];
                at = pair[0] == from ? pair[1] : pair[0];
                if (++guard > 4 * cs.size() + 4) return false;
            } while (!(at == start));
        }
    return static_cast<int>(cs.size()) - 2 * static_cast<int>(cs.size()) + faces == 2;
}

// Pokes a strand over the one it is about to cross, separately for each
// crossing corner, keeping only the splices that stay planar.
std::vector<PDCode> corner_pokes(const PDCode& base) {
    std::vector<PDCode> out;
    for (const auto& X : base.crossings())
        for (auto [a, b] : {std::pair{X.under_in(), X.over_in()},
                            std::pair{X.over_in(), X.under_in()}})
            for (int s : {+1, -1}) {
                try {
                    PDCode poked = r2_insert(base, a, b, s);
                    if (euler_planar(poked)) out.push_back(std::move(poked));
                } catch (const ValidationError&) {
                }
            }
    return out;
}

Outcome check_reidemeister_invariance(const Context& ctx) {
    for (const char* name : {"hopf.pd", "whitehead.pd"}) {
        const PDCode base = golden(ctx, name).diagram();
        const MuTable reference(peripheral(Link(base), 5), 4);
        // Raw coefficients are only well defined modulo the indeterminacy,
        // so they are compared exactly where delta vanishes and the residue
        // mubar together with delta everywhere else.
        auto same = [&](const PDCode& moved, const std::string& what) -> Outcome {
            if (!euler_planar(moved))
                return fail(std::string(name) + ", " + what + ": diagram left the plane");
            const MuTable t(peripheral(Link(moved), 5), 4);
            for (const auto& e : reference.entries()) {
                if (t.delta(e.index) != e.delta)
                    return fail(std::string(name) + ", " + what + ": delta(" +
                                index_seq_str(e.index) + ") changed");
                if (t.mubar(e.index) != e.mubar)
                    return fail(std::string(name) + ", " + what + ": mubar(" +
                                index_seq_str(e.index) + ") changed");
                if (e.delta == 0 && t.mu(e.index) != e.mu)
                    return fail(std::string(name) + ", " + what + ": mu(" +
                                index_seq_str(e.index) + ") changed");
            }
            return pass();
        };

        std::vector<PDCode> kinked;
        for (int sign : {+1, -1})
            for (bool over_first : {true, false}) {
                kinked.push_back(r1_insert(base, 1, sign, over_first));
                const std::string what = std::string("kink sign ") + std::to_string(sign) +
                                         (over_first ? " over first" : " under first");
                if (auto o = same(kinked.back(), what); !o.passed) return o;
            }

        const std::vector<PDCode> pokes = corner_pokes(base);
        if (pokes.empty()) return fail(std::string(name) + ": no planar poke exists");
        for (std::size_t i = 0; i < pokes.size(); ++i)
            if (auto o = same(pokes[i], "poke " + std::to_string(i)); !o.passed) return o;

        // Slide wherever a poke opened a triangular face; small diagrams may
        // need a kink first before any poke exposes one.
        auto slide_all = [&](const std::vector<PDCode>& from,
                             const std::string& tag) -> std::pair<int, Outcome> {
            int slides = 0;
            for (std::size_t i = 0; i < from.size(); ++i)
                for (int m = 1; m <= from[i].max_arc_label(); ++m) {
                    PDCode after;
                    try {
                        after = r3_slide(from[i], m);
                    } catch (const ValidationError&) {
                        continue;
                    }
                    ++slides;
                    if (auto o = same(after, tag + " " + std::to_string(i) + ", slide " +
                                                 std::to_string(m));
                        !o.passed)
                        return {slides, o};
                }
            return {slides, pass()};
        };

        auto [count, outcome] = slide_all(pokes, "poke");
        if (!outcome.passed) return outcome;
        if (count == 0) {
            std::vector<PDCode> deeper;
            for (const auto& k : kinked) {
                auto more = corner_pokes(k);
                for (std::size_t i = 0; i < more.size(); ++i) {
                    if (auto o = same(more[i], "kinked poke " + std::to_string(deeper.size()));
                        !o.passed)
                        return o;
                    deeper.push_back(std::move(more[i]));
                }
            }
            auto [count2, outcome2] = slide_all(deeper, "kinked poke");
            if (!outcome2.passed) return outcome2;
            count = count2;
        }
        if (count == 0) return fail(std::string(name) + ": no move sequence opens a slide site");
    }
    return pass("kinks, pokes and slides leave every invariant of length <= 4 unchanged");
}

// Criterion 9e: nested commutators land in the expected series degrees:
// derived-series depth n has residue degree exactly 2^n for these witnesses.

Outcome check_commutator_residues(const Context&) {
    const Word x1 = Word::generator(3, 1), x2 = Word::generator(3, 2), x3 = Word::generator(3, 3);
    const Word d1 = commutator(x1, x2);
    const Word d2 = commutator(commutator(x1, x2), commutator(x1, x3));
    const Word d3 = commutator(d2, commutator(commutator(x2, x3), commutator(x2, x1)));
    REQUIRE_EQ(lcs_residue_degree(d1, 9).value_or(-1), 2, "depth-1 residue degree");
    REQUIRE_EQ(lcs_residue_degree(d2, 9).value_or(-1), 4, "depth-2 residue degree");
    REQUIRE_EQ(lcs_residue_degree(d3, 9).value_or(-1), 8, "depth-3 residue degree");
    return pass("derived-series witnesses have residue degrees 2, 4, 8");
}

// ---------------------------------------------------------------------------
// Twice-iterated doubling: the scan is out of reach by design and must be
// refused up front, with the structure (component count) still checkable.

Outcome check_bd2_br_budget(const Context& ctx) {
    const Link br = golden(ctx, "br.braid");
    const PDCode bd2 = iterated_bing_double(closure_diagram(br.braid()), 2);
    REQUIRE_EQ(bd2.num_components(), 12, "component count");
    REQUIRE_EQ(offdiagonal_zero(bd2.linking_matrix()), true, "linking numbers vanish");
    const auto cost = scan_cost(12, 12);
    if (cost <= kDefaultExtractionBudget)
        return fail("scan cost " + std::to_string(cost) + " unexpectedly within budget");
    // Words are kept so the table constructor reaches its up-front cost
    // check rather than objecting to the shallow series bound.
    WirtingerOptions opt;
    opt.require_words = true;
    opt.word_letter_budget = 8u << 20;
    const PeripheralData data = wirtinger_peripheral(bd2, 3, opt);
    try {
        const MuTable table(data, 12);
        return fail("length-12 table was built instead of being refused");
    } catch (const BudgetError& e) {
        return pass("12 components, lk = 0; length-12 scan refused up front (needs " +
                    std::to_string(e.attempted) + " extractions, budget " +
                    std::to_string(e.budget) + ")");
    }
}

// ---------------------------------------------------------------------------
// The golden corpus is byte-for-byte what the constructors produce.

Outcome check_golden_regeneration(const Context& ctx) {
    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    const BraidWord hopf(2, {1, 1});
    std::vector<std::pair<std::string, Link>> expect;
    expect.emplace_back("br.braid", Link(br));
    expect.emplace_back("br.pd", Link(closure_diagram(br).relabeled_sequential()));
    expect.emplace_back("hopf.pd", Link(closure_diagram(hopf).relabeled_sequential()));
    expect.emplace_back("unlink2.pd", Link(PDCode({}, {{1}, {2}})));
    expect.emplace_back("unlink3.pd", Link(PDCode({}, {{1}, {2}, {3}})));
    expect.emplace_back("commutator.braid", Link(braid_commutator_link()));
    expect.emplace_back("whitehead.pd", Link(twisted_whitehead(1).relabeled_sequential()));
    for (int t : {2, 4, 6})
        expect.emplace_back("twisted-whitehead-" + std::to_string(t) + ".pd",
                            Link(twisted_whitehead(t).relabeled_sequential()));
    expect.emplace_back(
        "bd-hopf.pd",
        Link(bing_double(closure_diagram(hopf)).relabeled_sequential()));
    expect.emplace_back(
        "bd-br.pd", Link(bing_double(closure_diagram(br)).relabeled_sequential()));
    for (const auto& [name, link] : expect) {
        const std::string stored = read_file(fs::path(ctx.golden_dir) / name);
        if (stored != serialize_link(link))
            return fail(name + " differs from its constructor output");
    }
    return pass(std::to_string(expect.size()) + " files regenerate byte-identically");
}

// ---------------------------------------------------------------------------
// End-to-end command line checks.

Outcome check_cli_compute_br(const Context& ctx) {
    const auto r = run_cli(ctx, "compute " + ctx.golden_dir + "/br.braid --max-len 4");
    REQUIRE_EQ(r.exit_code, 0, "exit code");
    const json j = parse_report(r.out);
    REQUIRE_EQ(j.at("first_nonvanishing").at("length").get<int>(), 3, "report length");
    REQUIRE_EQ(j.at("first_nonvanishing").at("value").get<std::string>(), std::string("1"),
               "report value");
    return pass("scan report: first nonvanishing (3, 123, 1)");
}

Outcome check_cli_compute_commutator_index(const Context& ctx) {
    const auto r = run_cli(
        ctx, "compute " + ctx.golden_dir + "/commutator.braid --index 313323 --index 112232");
    REQUIRE_EQ(r.exit_code, 0, "exit code");
    const json j = parse_report(r.out);
    REQUIRE_EQ(j.at("indices").size(), std::size_t{2}, "entry count");
    REQUIRE_EQ(j.at("indices").at(0).at("index").get<std::string>(), std::string("112232"),
               "first entry");
    REQUIRE_EQ(j.at("indices").at(0).at("mu").get<std::string>(), std::string("1"),
               "mu(112232)");
    // The stated -1 for 313323 is the documented deviation; the plumbing
    // check freezes the computed value.
    REQUIRE_EQ(j.at("indices").at(1).at("mu").get<std::string>(), std::string("0"),
               "mu(313323)");
    return pass("index report carries mu, delta and mubar per sequence");
}

Outcome check_cli_compute_unlink3(const Context& ctx) {
    const auto r = run_cli(ctx, "compute " + ctx.golden_dir + "/unlink3.pd --max-len 6");
    REQUIRE_EQ(r.exit_code, 0, "exit code");
    const json j = parse_report(r.out);
    REQUIRE_EQ(j.at("first_nonvanishing").is_null(), true, "all vanish");
    REQUIRE_EQ(j.at("obstructions").at("solvable_excluded_from").is_null(), true,
               "no obstruction");
    return pass("all invariants vanish through length 6");
}

Outcome check_cli_op_bing_hopf(const Context& ctx) {
    const fs::path out = ctx.work_dir / "bing-hopf.pd";
    const auto r = run_cli(ctx, "op bing " + ctx.golden_dir + "/hopf.pd --output " + out.string());
    REQUIRE_EQ(r.exit_code, 0, "op exit code");
    const Link produced = load_link(out.string());
    REQUIRE_EQ(produced.component_count(), 4, "component count");
    const auto c = run_cli(ctx, "compute " + out.string() + " --max-len 4");
    REQUIRE_EQ(c.exit_code, 0, "compute exit code");
    const json j = parse_report(c.out);
    REQUIRE_EQ(j.at("first_nonvanishing").at("length").get<int>(), 4, "first length");
    return pass("doubled Hopf link: 4 components, first nonvanishing length 4");
}

Outcome check_cli_op_bing_times2_budget(const Context& ctx) {
    const fs::path out = ctx.work_dir / "bing2-br.pd";
    const auto r =
        run_cli(ctx, "op bing --times 2 " + ctx.golden_dir + "/br.braid --output " + out.string());
    REQUIRE_EQ(r.exit_code, 0, "op exit code");
    REQUIRE_EQ(load_link(out.string()).component_count(), 12, "component count");
    const auto c = run_cli(ctx, "compute " + out.string() + " --max-len 12");
    REQUIRE_EQ(c.exit_code, 3, "compute must refuse the scan with the budget exit code");
    return pass("12-component double produced; length-12 scan exits with code 3");
}

Outcome check_cli_op_stack(const Context& ctx) {
    const fs::path out = ctx.work_dir / "br-stack.braid";
    const auto r = run_cli(ctx, "op stack " + ctx.golden_dir + "/br.braid " + ctx.golden_dir +
                                    "/br.braid --output " + out.string());
    REQUIRE_EQ(r.exit_code, 0, "op exit code");
    const auto c = run_cli(ctx, "compute " + out.string() + " --max-len 3");
    REQUIRE_EQ(c.exit_code, 0, "compute exit code");
    const json j = parse_report(c.out);
    REQUIRE_EQ(j.at("first_nonvanishing").at("value").get<std::string>(), std::string("2"),
               "doubled witness value");
    return pass("stacked braid doubles mu(123)");
}

Outcome check_cli_determinism(const Context& ctx) {
    const std::string args = "compute " + ctx.golden_dir + "/whitehead.pd --max-len 4";
    json a = parse_report(run_cli(ctx, args).out);
    json b = parse_report(run_cli(ctx, args).out);
    a.erase("generated_at");
    b.erase("generated_at");
    REQUIRE_EQ(a.dump() == b.dump(), true, "reports identical modulo generated_at");
    return pass("repeated runs agree byte for byte modulo the timestamp");
}

struct Registration {
    const char* name;
    bool expected_fail;
    bool needs_cli;
    Outcome (*fn)(const Context&);
};

constexpr Registration kChecks[] = {
    {"br-first-nonvanishing", false, false, check_br_first_nonvanishing},
    {"whitehead-length-four", false, false, check_whitehead_length_four},
    {"twisted-whitehead-scaling", false, false, check_twisted_whitehead_scaling},
    {"commutator-solvability", false, false, check_commutator_solvability},
    {"commutator-313323", true, false, check_commutator_313323},
    {"bd-hopf-length-four", false, false, check_bd_hopf},
    {"bd-br-length-six", false, false, check_bd_br},
    {"obstruction-arithmetic", false, false, check_obstruction_arithmetic},
    {"stack-additivity", false, false, check_stack_additivity},
    {"magnus-identities", false, false, check_magnus_identities},
    {"dp-extraction-agreement", false, false, check_dp_extraction},
    {"golden-framing-linking", false, false, check_golden_framing},
    {"reidemeister-invariance", false, false, check_reidemeister_invariance},
    {"commutator-residue-degrees", false, false, check_commutator_residues},
    {"bd2-br-budget", false, false, check_bd2_br_budget},
    {"golden-regeneration", false, false, check_golden_regeneration},
    {"cli-compute-br", false, true, check_cli_compute_br},
    {"cli-compute-commutator-index", false, true, check_cli_compute_commutator_index},
    {"cli-compute-unlink3", false, true, check_cli_compute_unlink3},
    {"cli-op-bing-hopf", false, true, check_cli_op_bing_hopf},
    {"cli-op-bing-times2-budget", false, true, check_cli_op_bing_times2_budget},
    {"cli-op-stack", false, true, check_cli_op_stack},
    {"cli-determinism", false, true, check_cli_determinism},
};

bool selected(const std::string& name, const std::vector<std::string>& only) {
    if (only.empty()) return true;
    for (const auto& needle : only)
        if (name.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

std::vector<CheckResult> run_checks(const std::string& golden_dir,
                                    const std::vector<std::string>& only,
                                    const std::string& mubar_bin) {
    Context ctx;
    ctx.golden_dir = golden_dir;
    ctx.mubar_bin = mubar_bin;
    ctx.work_dir = fs::temp_directory_path() /
                   ("mubar-checks-" + std::to_string(static_cast<long long>(getpid())));
    fs::create_directories(ctx.work_dir);

    std::vector<CheckResult> results;
    for (const auto& reg : kChecks) {
        if (!selected(reg.name, only)) continue;
        if (reg.needs_cli && mubar_bin.empty()) continue;
        CheckResult r;
        r.name = reg.name;
        r.expected_fail = reg.expected_fail;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = reg.fn(ctx);
            r.passed = o.passed;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool all_good(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.passed == r.expected_fail) return false;
    return !results.empty();
}

void print_report(const std::vector<CheckResult>& results) {
    int passed = 0, failed = 0, expected = 0, surprises = 0;
    for (const auto& r : results) {
        const char* tag = nullptr;
        if (r.passed && !r.expected_fail) {
            tag = "PASS ";
            ++passed;
        } else if (!r.passed && r.expected_fail) {
            tag = "XFAIL";
            ++expected;
        } else if (!r.passed) {
            tag = "FAIL ";
            ++failed;
        } else {
            tag = "XPASS";
            ++surprises;
        }
        std::printf("%s %-32s %7.2fs  %s\n", tag, r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%d passed, %d failed, %d expected failures, %d unexpected passes\n", passed,
                failed, expected, surprises);
}

} // namespace mubar::checks
