#include "mubar/obstructions.hpp"

#include "mubar/errors.hpp"

namespace mubar {

std::optional<int> solvability_obstruction(std::optional<int> first_length) {
    if (!first_length)
        return std::nullopt;
    int n = 0;
    while (((1LL << (n + 2)) - 1) < *first_length)
        ++n;
    return n;
}

std::optional<int> grope_obstruction(std::optional<int> first_length) {
    if (!first_length)
        return std::nullopt;
    int h = 1;
    while ((1LL << h) < *first_length)
        ++h;
    return h;
}

std::optional<int> bipolarity_obstruction(std::optional<int> first_length) {
    return solvability_obstruction(first_length);
}

std::optional<int> cobordism_obstruction(std::optional<int> first_length) {
    if (!first_length)
        return std::nullopt;
    return (*first_length + 1) / 2;
}

ObstructionReport obstruction_report(const std::optional<FirstNonvanishing>& scan,
                                     int scanned_max_length) {
    ObstructionReport report;
    report.scanned_max_length = scanned_max_length;
    if (scan) {
        report.first_nonvanishing_length = scan->length;
        report.witness = scan->witness;
        report.witness_value = scan->value;
    }
    report.solvable_excluded_from = solvability_obstruction(report.first_nonvanishing_length);
    report.grope_excluded_from = grope_obstruction(report.first_nonvanishing_length);
    report.bipolar_excluded_from = bipolarity_obstruction(report.first_nonvanishing_length);
    report.cobordism_excluded_from = cobordism_obstruction(report.first_nonvanishing_length);
    return report;
}

CobordismComparison kcobordism_check(const MuTable& a, const MuTable& b, int k) {
    if (k < 1)
        throw ValidationError("kcobordism_check: k must be >= 1");
    if (a.components() != b.components())
        throw ValidationError("kcobordism_check: component counts differ");
    if (a.max_length() < 2 * k || b.max_length() < 2 * k)
        throw ValidationError("kcobordism_check: tables are shallower than length 2k");

    const int m = a.components();
    CobordismComparison result;
    for (int length = 2; length <= 2 * k; ++length) {
        IndexSeq seq(static_cast<std::size_t>(length), 1);
        while (true) {
            if (a.mubar(seq) != b.mubar(seq) || a.delta(seq) != b.delta(seq)) {
                result.consistent = false;
                result.witness = seq;
                return result;
            }
            // lexicographic odometer over entries 1..m
            int pos = length - 1;
            while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == m) {
                seq[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0)
                break;
            ++seq[static_cast<std::size_t>(pos)];
        }
    }
    return result;
}

} // namespace mubar
