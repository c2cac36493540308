#include "bgg/report.hpp"

#include <sstream>
#include <stdexcept>

namespace bgg {

namespace {

// Factored rendering of the order-s round-sphere operator:
// (nabla^2 + (s-1)^2 g) ... down to (nabla^2 + 4g) nabla  or  (nabla^2 + g).
std::string factored_string(int s, bool latex) {
    const int k = s - 1;
    std::ostringstream os;
    os << (latex ? "\\pi\\bigl(" : "pi(");
    for (int j = k; j >= 1; j -= 2) {
        if (latex) {
            os << "(\\nabla^2+";
            if (j != 1) os << j * j;
            os << "g)";
        } else {
            os << "(nabla^2 + ";
            if (j != 1) os << j * j;
            os << "g)";
        }
    }
    if (k % 2 == 0) os << (latex ? "\\nabla" : (k == 0 ? "nabla" : " nabla"));
    os << (latex ? "\\phi\\bigr)" : " phi)");
    return os.str();
}

} // namespace

std::string BGGFormula::ascii() const { return factored_string(s, false); }
std::string BGGFormula::latex() const { return factored_string(s, true); }

ConnectionFactors change_of_connection_expansion(const WeightBookkeeping& wb, int s) {
    if (s < 1)
        throw std::invalid_argument(
            "change_of_connection_expansion: order must be a positive integer");
    ConnectionFactors f;
    f.k = wb.w - (wb.v + wb.b + 1 - wb.r);
    for (long j = f.k - 2 * s + 2; j <= f.k; j += 2) f.js.push_back(j);
    return f;
}

BGGReport emit_bgg_report(const DynkinLabels& d) {
    const BGGComplexData data = bgg_complex_data(d);
    BGGReport rep{d, data.c, data.N, {}, {}};

    bool positions_ok = true;
    for (const auto& pos : data.positions)
        positions_ok = positions_ok && (pos.p + pos.q == pos.r);
    const bool cc_ok = data.c + dual_c_value(d).value == data.N;

    bool pieri_ok = true;
    bool riccati_ok = true;
    for (int r = 0; r <= d.n; ++r) {
        BGGReport::Entry e;
        e.desc = data.cohomology[r];
        e.p = data.positions[r].p;
        e.q = data.positions[r].q;
        if (r < d.n) {
            const int s = data.orders[r];
            e.order = s;
            pieri_ok = pieri_ok && pieri_multiplicity(s, data.cohomology[r].levi,
                                                      data.cohomology[r + 1].levi) == 1;
            // Multiply the change-of-connection factors out through the
            // Riccati algebra and confirm the factored form before emitting.
            WeightBookkeeping wb{s - 1, 0, 0, 1}; // a BGG step: k = s - 1
            const ConnectionFactors cf = change_of_connection_expansion(wb, s);
            NCOp prod = NCOp::one();
            for (long j : cf.js)
                prod = multiply(prod, NCOp::nabla() + NCOp::monomial(1, 0, 0, Rat(j)));
            const NCOp expected = factored_product(s - 1);
            riccati_ok = riccati_ok && (prod == expected);
            e.formula = BGGFormula{r, s, expected, data.cohomology[r + 1].levi};
        }
        rep.entries.push_back(std::move(e));
    }
    rep.checks["positions_p_plus_q_equals_r"] = positions_ok;
    rep.checks["c_plus_c_prime_equals_N"] = cc_ok;
    rep.checks["pieri_multiplicity_one"] = pieri_ok;
    rep.checks["riccati_factorization"] = riccati_ok;
    return rep;
}

nlohmann::json report_to_json(const BGGReport& rep) {
    nlohmann::json j;
    j["n"] = rep.labels.n;
    j["labels"] = rep.labels.labels;
    j["N"] = rep.N;
    j["c"] = to_string(rep.c);
    j["cohomology"] = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json je;
        je["r"] = e.desc.r;
        je["levi"] = e.desc.levi;
        je["grade"] = to_string(e.desc.grade.value);
        je["dim"] = to_long(e.desc.dim);
        je["p"] = e.p;
        je["q"] = e.q;
        if (e.order) je["order"] = *e.order;
        if (e.formula) {
            je["formula_ascii"] = e.formula->ascii();
            je["formula_latex"] = e.formula->latex();
        }
        j["cohomology"].push_back(std::move(je));
    }
    j["checks"] = rep.checks;
    return j;
}

BGGReport report_from_json(const nlohmann::json& j) {
    DynkinLabels d(j.at("n").get<int>(), j.at("labels").get<std::vector<int>>());
    BGGReport rep{d, parse_rat(j.at("c").get<std::string>()), j.at("N").get<long>(), {}, {}};
    const auto& coh = j.at("cohomology");
    for (size_t r = 0; r < coh.size(); ++r) {
        const auto& je = coh[r];
        BGGReport::Entry e;
        e.desc.r = je.at("r").get<int>();
        e.desc.levi = je.at("levi").get<LeviLabels>();
        e.desc.grade = Grade{parse_rat(je.at("grade").get<std::string>())};
        e.desc.dim = Int(je.at("dim").get<long>());
        e.p = je.at("p").get<long>();
        e.q = je.at("q").get<long>();
        if (je.contains("order")) {
            const int s = je.at("order").get<int>();
            e.order = s;
            e.formula = BGGFormula{e.desc.r, s, factored_product(s - 1),
                                   coh[r + 1].at("levi").get<LeviLabels>()};
        }
        rep.entries.push_back(std::move(e));
    }
    if (j.contains("checks"))
        rep.checks = j.at("checks").get<std::map<std::string, bool>>();
    return rep;
}

std::string young_ascii(const Partition& p) {
    std::ostringstream os;
    for (long r = 0; r < p.size(); ++r) {
        for (long c = 0; c < p.part(r); ++c) os << "[]";
        if (r + 1 < p.size()) os << "\n";
    }
    return os.str();
}

std::string report_to_text(const BGGReport& rep) {
    std::ostringstream os;
    os << "BGG complex on RP_" << rep.labels.n << " for labels [";
    for (int i = 0; i < rep.labels.n; ++i)
        os << (i ? "," : "") << rep.labels.labels[i];
    os << "]\n";
    os << "c = " << to_string(rep.c) << ", N = " << rep.N << "\n\n";
    for (const auto& e : rep.entries) {
        os << "H^" << e.desc.r << ": levi [";
        for (size_t i = 0; i < e.desc.levi.size(); ++i)
            os << (i ? "," : "") << e.desc.levi[i];
        os << "]  dim " << to_string(e.desc.dim) << "  grade "
           << to_string(e.desc.grade.value) << "  E_1 at (p,q) = (" << e.p << ","
           << e.q << ")";
        const Partition part = labels_to_partition(e.desc.levi);
        if (part.size() > 0) {
            os << "\n";
            std::istringstream rows(young_ascii(part));
            std::string line;
            while (std::getline(rows, line)) os << "      " << line << "\n";
        } else {
            os << "\n";
        }
        if (e.order)
            os << "   -> order " << *e.order << " operator " << e.formula->ascii()
               << "\n";
    }
    os << "\nchecks:\n";
    for (const auto& [name, ok] : rep.checks)
        os << "  " << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    return os.str();
}

std::string report_to_latex(const BGGReport& rep) {
    std::ostringstream os;
    os << "% BGG complex on \\mathbb{RP}_" << rep.labels.n << "\n";
    os << "\\begin{array}{lllll}\n";
    os << "r & \\text{Levi labels} & \\dim & H\\text{-grade} & \\text{operator}\\\\\n";
    for (const auto& e : rep.entries) {
        os << e.desc.r << " & [";
        for (size_t i = 0; i < e.desc.levi.size(); ++i)
            os << (i ? "," : "") << e.desc.levi[i];
        os << "] & " << to_string(e.desc.dim) << " & " << to_string(e.desc.grade.value)
           << " & ";
        if (e.formula) os << e.formula->latex();
        os << "\\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

} // namespace bgg
