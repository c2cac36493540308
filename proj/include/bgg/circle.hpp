#pragma once

#include "bgg/rational.hpp"
#include "bgg/riccati.hpp"

#include <map>
#include <string>

namespace bgg {

// Element of the function algebra spanned by { cos^m th, sin th cos^m th }
// for m in Z, with exact rational coefficients:
//     f = sum p_m cos^m th  +  sin th * sum q_m cos^m th.
// These functions are linearly independent on (-pi/2, pi/2), so the
// representation is unique and equality is data equality. The span is closed
// under d/dth and under multiplication (sin^2 = 1 - cos^2).
struct TrigFn {
    std::map<long, Rat> cos_part; // m -> p_m
    std::map<long, Rat> sin_part; // m -> q_m

    static TrigFn zero() { return {}; }
    static TrigFn one() { return cos_pow(0); }
    static TrigFn cos_pow(long m, const Rat& c = 1);
    static TrigFn sin_cos_pow(long m, const Rat& c = 1); // c * sin * cos^m
    static TrigFn tan() { return sin_cos_pow(-1); }

    bool is_zero() const { return cos_part.empty() && sin_part.empty(); }

    TrigFn operator+(const TrigFn& o) const;
    TrigFn operator-(const TrigFn& o) const;
    TrigFn operator*(const TrigFn& o) const;
    TrigFn scaled(const Rat& s) const;
    bool operator==(const TrigFn& o) const = default;

    void add_cos(long m, const Rat& c);
    void add_sin(long m, const Rat& c);

    std::string ascii() const;
    std::string latex() const;
};

TrigFn differentiate(const TrigFn& f);

// D f = cos^2 th * f'.
TrigFn apply_D(const TrigFn& f);

// D_{k+1} f = sec^k th * d/dth ( D^k ( sec^k th * f ) ).
TrigFn apply_Dk1(int k, const TrigFn& f);

// The commuting factorisation of the same operator:
//   k even: (d^2/dth^2 + k^2) ... (d^2/dth^2 + 4) d/dth
//   k odd : (d^2/dth^2 + k^2) ... (d^2/dth^2 + 9)(d^2/dth^2 + 1)
TrigFn apply_factored(int k, const TrigFn& f);

// T_m(cos th) = cos(m th);  sin th * U_{m-1}(cos th) = sin(m th).
TrigFn chebyshev_T(int m);
TrigFn chebyshev_U(int m);

struct CircleVerdict {
    bool ok = true;
    std::string first_failure;
};

// apply_Dk1(k, .) == apply_factored(k, .) on every basis element with
// m in [mlo, mhi], and both annihilate cos(j th), sin(j th) for
// j = k, k-2, ... >= 1 (plus the constant when k is even).
CircleVerdict verify_factorization(int k, long mlo, long mhi);

// D_{k+3} == (d/dth - (k+2) tan th) D_{k+1} (d/dth + (k+2) tan th)
// on every basis element with m in [mlo, mhi].
CircleVerdict verify_recursion(int k, long mlo, long mhi);

// Realisation of the Riccati algebra at g = 1: nabla -> d/dth, Y -> tan th.
// `op` must already have its g-degree collapsed (no g factors).
TrigFn realize(const NCOp& op, const TrigFn& f);

} // namespace bgg
