#pragma once

#include "bgg/kostant.hpp"
#include "bgg/riccati.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bgg {

// One emitted BGG operator H^r -> H^{r+1}: order s, the verified round-metric
// operator (normal form of factored_product(s-1)), and the target bundle the
// projection pi maps onto. pi itself is an opaque tag, never a matrix.
struct BGGFormula {
    int r = 0;
    int s = 1;
    NCOp expression;
    LeviLabels target;

    std::string ascii() const;
    std::string latex() const;

    bool operator==(const BGGFormula&) const = default;
};

// Projective-weight bookkeeping for a tableau-specified tensor bundle:
// weight w, valence v, row length b, row index r. For a BGG step
// s = w + r - v - b; a single first-order step has w = v + b + 1 - r.
struct WeightBookkeeping {
    long w = 0, v = 0, b = 0, r = 0;
    bool operator==(const WeightBookkeeping&) const = default;
};

struct ConnectionFactors {
    long k = 0;
    std::vector<long> js; // factors (nabla + j Y), leftmost first
};

// Factor list of pi(hat-nabla^s phi) under a projective change of connection:
// j = k-2s+2, ..., k-2, k with k = w - (v+b+1-r). For a BGG step (k = s-1)
// the list is symmetric and multiplies out to factored_product(s-1).
ConnectionFactors change_of_connection_expansion(const WeightBookkeeping& wb, int s);

inline bool is_bgg_step(const WeightBookkeeping& wb, int s) {
    return s == wb.w + wb.r - wb.v - wb.b;
}

struct BGGReport {
    DynkinLabels labels;
    Rat c;
    long N = 0;

    struct Entry {
        GradedIrrepDescriptor desc;
        long p = 0, q = 0;
        std::optional<int> order;          // outgoing operator, absent for r = n
        std::optional<BGGFormula> formula;

        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;
    std::map<std::string, bool> checks;

    bool operator==(const BGGReport&) const = default;
};

// Assembles the full report; every emitted formula is re-verified through the
// Riccati algebra before it is included (the corresponding check goes red
// instead of emitting an unverified operator).
BGGReport emit_bgg_report(const DynkinLabels& d);

nlohmann::json report_to_json(const BGGReport& rep);
BGGReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const BGGReport& rep);
std::string report_to_latex(const BGGReport& rep);

// Box-row rendering of a partition, for the text report.
std::string young_ascii(const Partition& p);

} // namespace bgg
