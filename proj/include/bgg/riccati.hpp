#pragma once

#include "bgg/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace bgg {

// Element of the associative algebra Q<nabla, Y, g> with g central and the
// Riccati relation  nabla*Y = Y*nabla + g + Y^2  (Y is the 1-form Upsilon
// acting by multiplication). Values are kept in normal form
//     sum  c_{ l,m,p } Y^l g^m nabla^p,
// which is unique; exact zeros are dropped eagerly so equality of normal
// forms is plain data equality.
class NCOp {
public:
    // (l, m, p) -> coefficient of Y^l g^m nabla^p
    using Key = std::array<long, 3>;

    NCOp() = default;

    static NCOp zero() { return NCOp(); }
    static NCOp one() { return monomial(0, 0, 0); }
    static NCOp nabla() { return monomial(0, 0, 1); }
    static NCOp upsilon() { return monomial(1, 0, 0); }
    static NCOp g() { return monomial(0, 1, 0); }
    static NCOp monomial(long l, long m, long p, const Rat& c = 1);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NCOp operator+(const NCOp& o) const;
    NCOp operator-(const NCOp& o) const;
    NCOp scaled(const Rat& s) const;
    bool operator==(const NCOp& o) const = default;

    void add_term(long l, long m, long p, const Rat& c);

    // Degree under deg Y = deg nabla = 1, deg g = 2, if homogeneous.
    std::optional<long> homogeneous_degree() const;

    // Collapse the central generator: g -> 1.
    NCOp substitute_g_one() const;

    // Coefficient of nabla^p, as a polynomial in Y and g.
    NCOp nabla_coefficient(long p) const;

    std::string ascii() const;
    std::string latex() const;

private:
    std::map<Key, Rat> terms_;
};

// Product in normal form. Normal ordering pushes nabla right past Y with the
// closed-form rule nabla Y^l = Y^l nabla + l (Y^{l-1} g + Y^{l+1}), so the
// rewriting cost is quadratic rather than exponential.
NCOp multiply(const NCOp& a, const NCOp& b);

// Normal form of nabla^k Y^l.
NCOp nabla_pow_upsilon_pow(long k, long l);

// (nabla - k Y)(nabla - (k-2) Y) ... (nabla + (k-2) Y)(nabla + k Y):
// the shifted first-order factors produced by a projective change of
// connection across one full BGG step.
NCOp bgg_product(int k);

// The commuting round-metric form of the same operator:
//   k even: (nabla^2 + k^2 g) ... (nabla^2 + 4 g) nabla
//   k odd : (nabla^2 + k^2 g) ... (nabla^2 + 9 g)(nabla^2 + g)
NCOp factored_product(int k);

// bgg_product(k) == factored_product(k), both in the graded algebra and
// after the substitution g -> 1.
bool verify_identity(int k);

} // namespace bgg
