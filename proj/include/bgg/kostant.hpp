#pragma once

#include "bgg/weights.hpp"

#include <map>
#include <vector>

namespace bgg {

// One row of Kostant's table: an irreducible sl(n)-module together with the
// exact H-eigenvalue it sits at.
struct GradedIrrepDescriptor {
    int r = 0;
    LeviLabels levi;
    Grade grade;
    Int dim;

    bool operator==(const GradedIrrepDescriptor&) const = default;
};

struct E1Position {
    int r = 0;
    long p = 0;
    long q = 0;

    bool operator==(const E1Position&) const = default;
};

// The complete combinatorial description of the BGG complex for one label set.
struct BGGComplexData {
    DynkinLabels labels;
    Rat c;
    long N = 0;
    std::vector<GradedIrrepDescriptor> cohomology; // r = 0..n
    std::vector<E1Position> positions;             // r = 0..n
    std::vector<int> orders;                       // s_r = a_{r+1}+1, r = 0..n-1
};

// Closed-form cohomology of the abelian nilradical with coefficients in V:
//   r = 0        -> (a_2,...,a_n)                        at -c
//   1 <= r <= n-1 -> (a_1,..,a_{r-1}, a_r+a_{r+1}+1, a_{r+2},..,a_n)
//                                                        at -c + a_1+..+a_r + r
//   r = n        -> (a_1,...,a_{n-1})                    at -c + N + n
std::vector<GradedIrrepDescriptor> cohomology_table(const DynkinLabels& d);

// E_1 spots of the spectral sequence: (r, a_1+..+a_r + r, -(a_1+..+a_r)).
std::vector<E1Position> e1_positions(const DynkinLabels& d);

// Operator orders s_r = a_{r+1} + 1.
std::vector<int> operator_orders(const DynkinLabels& d);

BGGComplexData bgg_complex_data(const DynkinLabels& d);

// Multiplicity of `target` in Sym^s(g_-^*) (x) `source` as sl(n)-modules,
// computed by the Pieri rule: add a horizontal strip of s boxes to the
// source partition, removing full columns of height n. Always 0 or 1.
long pieri_multiplicity(int s, const LeviLabels& source, const LeviLabels& target);

struct ColumnEuler {
    long p = 0;
    Int chi;      // alternating sum over the column of the E_0 page
    Int expected; // (-1)^q dim H^r if the E_1 page has an entry here, else 0
    bool ok = false;
};

// Per-column Euler characteristics of the E_0 page computed from the grading
// dimensions of V (supplied by the brute-force builder), checked against the
// single-entry E_1 prediction. Throws if grade_dims lacks a required key.
std::vector<ColumnEuler> graded_euler_check(const DynkinLabels& d,
                                            const std::map<long, Int>& grade_dims);

} // namespace bgg
