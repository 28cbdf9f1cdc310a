// Command line front end: computes longitude-derived linking invariants of
// links given as braid words or planar diagrams, applies link operators, and
// runs the built-in verification suite.
//
// Exit codes: 0 success, 1 unexpected internal error, 2 parse or I/O error,
// 3 budget or capacity exhausted, 4 inconsistent input data, 5 verification
// failure.

#include "checks.hpp"

#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/link_io.hpp"
#include "mubar/longitudes.hpp"
#include "mubar/milnor.hpp"
#include "mubar/obstructions.hpp"
#include "mubar/operators.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using mubar::Int;
using mubar::Link;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitValidation = 4;
constexpr int kExitVerify = 5;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json linking_matrix_json(const std::vector<std::vector<long long>>& lk) {
    json rows = json::array();
    for (const auto& row : lk) rows.push_back(row);
    return rows;
}

// Reports go to stdout and the human-readable summary to stderr; with
// --output the report goes to the file and the summary moves to stdout.
struct Sink {
    std::string output_path;

    void write_report(const json& report) const {
        const std::string text = report.dump(2) + "\n";
        if (output_path.empty()) {
            std::fputs(text.c_str(), stdout);
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out) throw mubar::ParseError("cannot open " + output_path + " for writing");
            out << text;
            if (!out) throw mubar::ParseError("failed writing " + output_path);
        }
    }

    std::FILE* notes() const { return output_path.empty() ? stderr : stdout; }
};

struct ComputeArgs {
    std::string input;
    int max_len = 4;
    unsigned long long budget = mubar::kDefaultExtractionBudget;
    std::vector<std::string> indices;
    std::string orientation;
    std::string output;
};

std::vector<int> parse_orientation(const std::string& text, int components) {
    std::vector<int> reversed;
    if (text.empty()) return reversed;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string piece = text.substr(pos, next - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw mubar::ParseError("--orientation entry \"" + piece + "\" is not an integer");
        }
        if (used != piece.size())
            throw mubar::ParseError("--orientation entry \"" + piece + "\" is not an integer");
        if (value < 1 || value > components)
            throw mubar::ValidationError("--orientation component " + std::to_string(value) +
                                         " out of range 1.." + std::to_string(components));
        reversed.push_back(value);
        pos = next + 1;
    }
    std::sort(reversed.begin(), reversed.end());
    reversed.erase(std::unique(reversed.begin(), reversed.end()), reversed.end());
    return reversed;
}

mubar::PeripheralData link_peripheral(const Link& link, int degree_bound) {
    if (link.from_braid() && link.braid().is_pure())
        return braid_peripheral(link.braid(), degree_bound);
    mubar::WirtingerOptions opt;
    opt.keep_words = false;
    return wirtinger_peripheral(link.diagram(), degree_bound, opt);
}

int run_compute(const ComputeArgs& args) {
    const Sink sink{args.output};
    Link link = mubar::load_link(args.input);
    const std::vector<int> reversed = parse_orientation(args.orientation, link.component_count());
    if (!reversed.empty()) {
        mubar::PDCode pd = link.diagram();
        for (int c : reversed) pd = pd.reversed_component(c);
        link = Link(std::move(pd));
    }
    const int components = link.component_count();

    json report;
    report["input"] = args.input;
    report["type"] = link.from_braid() ? "braid" : "pd";
    report["components"] = components;
    report["reversed_components"] = reversed;
    report["linking_matrix"] = linking_matrix_json(link.linking_matrix());
    report["generated_at"] = utc_timestamp();

    if (!args.indices.empty()) {
        std::set<mubar::IndexSeq> wanted;
        int bound = 2;
        for (const auto& text : args.indices) {
            mubar::IndexSeq seq = mubar::parse_index_seq(text, components);
            bound = std::max(bound, static_cast<int>(seq.size()));
            wanted.insert(std::move(seq));
        }
        const mubar::PeripheralData data = link_peripheral(link, bound);
        json entries = json::array();
        std::vector<mubar::IndexSeq> ordered(wanted.begin(), wanted.end());
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        for (const auto& seq : ordered) {
            json e;
            e["index"] = mubar::index_seq_str(seq);
            e["mu"] = mubar::to_string(mubar::mu(data, seq));
            e["delta"] = mubar::to_string(mubar::delta(data, seq));
            e["mubar"] = mubar::to_string(mubar::mubar(data, seq));
            entries.push_back(std::move(e));
            std::fprintf(sink.notes(), "mu(%s) = %s, delta = %s, mubar = %s\n",
                         entries.back()["index"].get<std::string>().c_str(),
                         entries.back()["mu"].get<std::string>().c_str(),
                         entries.back()["delta"].get<std::string>().c_str(),
                         entries.back()["mubar"].get<std::string>().c_str());
        }
        report["indices"] = std::move(entries);
        sink.write_report(report);
        return kExitOk;
    }

    if (args.max_len < 2) throw mubar::ValidationError("--max-len must be >= 2");
    const auto cost = mubar::scan_cost(components, args.max_len);
    if (cost > args.budget)
        throw mubar::BudgetError("scan to length " + std::to_string(args.max_len) + " over " +
                                     std::to_string(components) + " components needs " +
                                     std::to_string(cost) +
                                     " coefficient extractions; raise --budget to allow it",
                                 cost, args.budget);

    const mubar::PeripheralData data = link_peripheral(link, args.max_len);
    const auto first = mubar::first_nonvanishing(data, args.max_len, args.budget);
    const mubar::ObstructionReport obs = mubar::obstruction_report(first, args.max_len);

    report["max_length"] = args.max_len;
    if (first) {
        json f;
        f["length"] = first->length;
        f["witness"] = mubar::index_seq_str(first->witness);
        f["value"] = mubar::to_string(first->value);
        report["first_nonvanishing"] = std::move(f);
        std::fprintf(sink.notes(), "first nonvanishing invariant: length %d, mu(%s) = %s\n",
                     first->length, mubar::index_seq_str(first->witness).c_str(),
                     mubar::to_string(first->value).c_str());
    } else {
        report["first_nonvanishing"] = nullptr;
        std::fprintf(sink.notes(), "all invariants vanish through length %d\n", args.max_len);
    }

    json j;
    auto put = [&j](const char* key, const std::optional<int>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    j["scanned_max_length"] = obs.scanned_max_length;
    put("solvable_excluded_from", obs.solvable_excluded_from);
    put("grope_excluded_from", obs.grope_excluded_from);
    put("bipolar_excluded_from", obs.bipolar_excluded_from);
    put("cobordism_excluded_from", obs.cobordism_excluded_from);
    report["obstructions"] = std::move(j);
    if (obs.solvable_excluded_from)
        std::fprintf(sink.notes(),
                     "not (%d)-solvable, not %d-bipolar, no grope height %d, not null "
                     "%d-cobordant\n",
                     *obs.solvable_excluded_from, *obs.bipolar_excluded_from,
                     *obs.grope_excluded_from, *obs.cobordism_excluded_from);

    sink.write_report(report);
    return kExitOk;
}

void emit_link(const Link& link, const std::string& output, const std::string& note) {
    if (output.empty()) {
        std::fputs(mubar::serialize_link(link).c_str(), stdout);
        std::fprintf(stderr, "%s\n", note.c_str());
    } else {
        mubar::save_link(link, output);
        std::fprintf(stdout, "%s -> %s\n", note.c_str(), output.c_str());
    }
}

mubar::BraidWord braid_input(const std::string& path, const char* op) {
    const Link link = mubar::load_link(path);
    if (!link.from_braid())
        throw mubar::ValidationError(std::string(op) + " needs braid input, got a diagram: " +
                                     path);
    return link.braid();
}

int run_verify(const std::string& golden_dir, const std::vector<std::string>& only,
               const std::string& self) {
    const auto results = mubar::checks::run_checks(golden_dir, only, self);
    mubar::checks::print_report(results);
    if (results.empty()) {
        std::fprintf(stderr, "no checks matched the requested filter\n");
        return kExitVerify;
    }
    return mubar::checks::all_good(results) ? kExitOk : kExitVerify;
}

std::string self_path(const char* argv0) {
    std::error_code ec;
    const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) return exe.string();
    return argv0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longitude-derived linking invariants of links and string links"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand(
        "compute", "Scan invariants of a link file, or evaluate chosen index sequences");
    compute->add_option("input", compute_args.input, "Link file (braid word or diagram JSON)")
        ->required();
    compute->add_option("--max-len", compute_args.max_len,
                        "Exhaustive scan depth (ignored with --index)")
        ->capture_default_str();
    compute->add_option("--budget", compute_args.budget,
                        "Coefficient extraction budget; exceeding it is an error")
        ->capture_default_str();
    compute->add_option("--index", compute_args.indices,
                        "Index sequence such as 1223 or 10.1.2; repeatable");
    compute->add_option("--orientation", compute_args.orientation,
                        "Comma-separated 1-based components to reverse");
    compute->add_option("--output", compute_args.output, "Write the JSON report here");

    auto* op = app.add_subcommand("op", "Build a new link from existing ones");
    op->require_subcommand(1);

    std::string bing_input, bing_output;
    int bing_times = 1, bing_clasp = 1;
    long long bing_max_crossings = 100000;
    auto* bing = op->add_subcommand("bing", "Replace each component by an untwisted clasped pair");
    bing->add_option("input", bing_input, "Link file")->required();
    bing->add_option("--times", bing_times, "Apply the doubling this many times")
        ->capture_default_str();
    bing->add_option("--clasp-sign", bing_clasp, "Clasp crossing sign, +1 or -1")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    bing->add_option("--max-crossings", bing_max_crossings,
                     "Refuse results larger than this many crossings")
        ->capture_default_str();
    bing->add_option("--output", bing_output, "Write the produced link here");

    int whitehead_twists = 1;
    std::string whitehead_output;
    auto* whitehead =
        op->add_subcommand("whitehead", "Emit the two-component twist family member");
    whitehead->add_option("--twists", whitehead_twists, "Number of full twists; 1 is the clasp")
        ->capture_default_str();
    whitehead->add_option("--output", whitehead_output, "Write the produced link here");

    std::string stack_a, stack_b, stack_output;
    auto* stack = op->add_subcommand("stack", "Concatenate two braid words strand by strand");
    stack->add_option("first", stack_a, "Braid link file")->required();
    stack->add_option("second", stack_b, "Braid link file")->required();
    stack->add_option("--output", stack_output, "Write the produced link here");

    std::string comm_a, comm_b, comm_output;
    auto* comm = op->add_subcommand("commutator", "Braid commutator a b a^-1 b^-1");
    comm->add_option("first", comm_a, "Braid link file")->required();
    comm->add_option("second", comm_b, "Braid link file")->required();
    comm->add_option("--output", comm_output, "Write the produced link here");

    std::string verify_golden = "golden";
    std::vector<std::string> verify_only;
    auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
    verify->add_option("--golden", verify_golden, "Directory holding the reference links")
        ->capture_default_str();
    verify->add_option("--only", verify_only, "Run only checks whose name contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (bing->parsed()) {
            const Link link = mubar::load_link(bing_input);
            if (bing_max_crossings < 1)
                throw mubar::ValidationError("--max-crossings must be positive");
            mubar::DoublingSpec spec;
            spec.clasp_sign = bing_clasp;
            spec.max_crossings = static_cast<std::size_t>(bing_max_crossings);
            const mubar::PDCode doubled =
                mubar::iterated_bing_double(link.diagram(), bing_times, spec)
                    .relabeled_sequential();
            emit_link(Link(doubled), bing_output,
                      "doubled " + std::to_string(link.component_count()) + " -> " +
                          std::to_string(doubled.num_components()) + " components, " +
                          std::to_string(doubled.crossings().size()) + " crossings");
            return kExitOk;
        }
        if (whitehead->parsed()) {
            const mubar::PDCode pd =
                mubar::twisted_whitehead(whitehead_twists).relabeled_sequential();
            emit_link(Link(pd), whitehead_output,
                      "twist family member with t = " + std::to_string(whitehead_twists));
            return kExitOk;
        }
        if (stack->parsed()) {
            const mubar::BraidWord a = braid_input(stack_a, "stack");
            const mubar::BraidWord b = braid_input(stack_b, "stack");
            if (a.strands() != b.strands())
                throw mubar::ValidationError("stack needs equal strand counts, got " +
                                             std::to_string(a.strands()) + " and " +
                                             std::to_string(b.strands()));
            emit_link(Link(a * b), stack_output,
                      "stacked two words into " + std::to_string((a * b).length()) + " letters");
            return kExitOk;
        }
        if (comm->parsed()) {
            const mubar::BraidWord a = braid_input(comm_a, "commutator");
            const mubar::BraidWord b = braid_input(comm_b, "commutator");
            if (a.strands() != b.strands())
                throw mubar::ValidationError("commutator needs equal strand counts, got " +
                                             std::to_string(a.strands()) + " and " +
                                             std::to_string(b.strands()));
            const mubar::BraidWord c = commutator(a, b);
            emit_link(Link(c), comm_output,
                      "commutator word has " + std::to_string(c.length()) + " letters");
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(verify_golden, verify_only, self_path(argv[0]));
        std::fprintf(stderr, "no subcommand selected\n");
        return kExitParse;
    } catch (const mubar::BudgetError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const mubar::CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const mubar::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const mubar::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
