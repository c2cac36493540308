#pragma once

#include "bgg/bruteforce.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace bgg {

// Structure-constant file: a JSON object
//   { "dim": m,
//     "gamma": [ [a, b, c, "coeff"], ... ],      // 1-based, both orientations
//     "rep": { "dim": d, "generators": [ [["0","1"],...], ... ] }   // optional
//   }
// Coefficients are exact rationals written as "p" or "p/q" (plain integers
// are also accepted). Missing entries are zero; no symmetrization is applied,
// so files must list Gamma_ab^c and Gamma_ba^c both.
struct AlgebraFile {
    LieAlgebraData algebra{1};
    std::optional<ConcreteRep> rep;
};

AlgebraFile parse_algebra(const nlohmann::json& j);
AlgebraFile load_algebra_file(const std::string& path);
nlohmann::json algebra_to_json(const LieAlgebraData& L);

} // namespace bgg
