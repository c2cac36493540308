#pragma once

#include "bgg/bruteforce.hpp"
#include "bgg/circle.hpp"
#include "bgg/kostant.hpp"
#include "bgg/riccati.hpp"

#include <string>
#include <vector>

namespace bgg {

struct CaseOutcome {
    enum class Status { Pass, Fail, Skip };
    std::string key;
    Status status = Status::Pass;
    std::string detail;
};

inline bool all_passed(const std::vector<CaseOutcome>& v) {
    for (const auto& c : v)
        if (c.status == CaseOutcome::Status::Fail) return false;
    return true;
}

// Full cross-check of one label set: closed-form table and positions vs the
// graded Koszul cohomology of the explicitly built module, plus the grading,
// Euler-characteristic and multiplicity-one bookkeeping.
CaseOutcome verify_kostant_case(const DynkinLabels& d, int degree_bound = 8,
                                long dim_cap = 5000);

// All label sets with min_n <= n <= max_n and sum of labels <= max_sum,
// in sorted order.
std::vector<CaseOutcome> verify_kostant_grid(int min_n, int max_n, int max_sum,
                                             int degree_bound = 8, long dim_cap = 5000);

// Riccati identities for 0 <= k <= max_k (graded and at g = 1), the
// normal-ordering leading-term formulas for k, l <= leading_max, and seeded
// random associativity checks up to total degree 10.
std::vector<CaseOutcome> verify_riccati_suite(int max_k, int leading_max = 8,
                                              unsigned long seed = 12345,
                                              int assoc_trials = 50);

// Circle identities for 0 <= k <= max_k over m in [-(k+pad), k+pad]:
// factorization + kernel, operator recursion, the D-ladder, Chebyshev
// annihilation, the realization cross-check against the Riccati algebra,
// and seeded random homomorphism checks for the realization.
std::vector<CaseOutcome> verify_circle_suite(int max_k, int m_pad = 4,
                                             unsigned long seed = 12345,
                                             int hom_trials = 100);

// d^2 = 0 and the two appendix conditions for one algebra (+ optional rep);
// also reports the Betti numbers in the detail string.
std::vector<CaseOutcome> verify_koszul_suite(const LieAlgebraData& L,
                                             const ConcreteRep& rep,
                                             const std::string& name);

} // namespace bgg
