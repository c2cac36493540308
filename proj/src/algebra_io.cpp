#include "bgg/algebra_io.hpp"

#include <fstream>

namespace bgg {

namespace {
Rat json_rat(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("algebra file: coefficient must be an integer or 'p/q'");
}
} // namespace

AlgebraFile parse_algebra(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("gamma"))
        throw std::invalid_argument("algebra file: need keys 'dim' and 'gamma'");
    const int m = j.at("dim").get<int>();
    if (m < 1) throw std::invalid_argument("algebra file: dim must be >= 1");
    AlgebraFile out;
    out.algebra = LieAlgebraData(m);
    for (const auto& entry : j.at("gamma")) {
        if (!entry.is_array() || entry.size() != 4)
            throw std::invalid_argument("algebra file: gamma entries are [a, b, c, coeff]");
        const int a = entry[0].get<int>(), b = entry[1].get<int>(), c = entry[2].get<int>();
        if (a < 1 || a > m || b < 1 || b > m || c < 1 || c > m)
            throw std::invalid_argument("algebra file: gamma index out of range (1-based)");
        out.algebra.gamma[a - 1][b - 1][c - 1] = json_rat(entry[3]);
    }
    if (j.contains("rep")) {
        const auto& jr = j.at("rep");
        const long d = jr.at("dim").get<long>();
        std::vector<DenseMat> gens;
        for (const auto& jm : jr.at("generators")) {
            DenseMat M(d, d);
            if (static_cast<long>(jm.size()) != d)
                throw std::invalid_argument("algebra file: generator row count != rep dim");
            for (long r = 0; r < d; ++r) {
                if (static_cast<long>(jm[r].size()) != d)
                    throw std::invalid_argument("algebra file: generator is not square");
                for (long cidx = 0; cidx < d; ++cidx) M.at(r, cidx) = json_rat(jm[r][cidx]);
            }
            gens.push_back(std::move(M));
        }
        if (static_cast<int>(gens.size()) != m)
            throw std::invalid_argument("algebra file: need one generator per basis element");
        out.rep = ConcreteRep::explicit_rep(d, std::move(gens));
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("algebra file " + path + ": " + e.what());
    }
    return parse_algebra(j);
}

nlohmann::json algebra_to_json(const LieAlgebraData& L) {
    nlohmann::json j;
    j["dim"] = L.dim;
    j["gamma"] = nlohmann::json::array();
    for (int a = 0; a < L.dim; ++a)
        for (int b = 0; b < L.dim; ++b)
            for (int c = 0; c < L.dim; ++c)
                if (L.g(a, b, c) != 0)
                    j["gamma"].push_back({a + 1, b + 1, c + 1, to_string(L.g(a, b, c))});
    return j;
}

} // namespace bgg
