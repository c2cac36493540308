#include "bgg/circle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bgg {

TrigFn TrigFn::cos_pow(long m, const Rat& c) {
    TrigFn f;
    f.add_cos(m, c);
    return f;
}

TrigFn TrigFn::sin_cos_pow(long m, const Rat& c) {
    TrigFn f;
    f.add_sin(m, c);
    return f;
}

namespace {
void add_into(std::map<long, Rat>& part, long m, const Rat& c) {
    if (c == 0) return;
    auto it = part.find(m);
    if (it == part.end()) {
        part.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) part.erase(it);
    }
}
} // namespace

void TrigFn::add_cos(long m, const Rat& c) { add_into(cos_part, m, c); }
void TrigFn::add_sin(long m, const Rat& c) { add_into(sin_part, m, c); }

TrigFn TrigFn::operator+(const TrigFn& o) const {
    TrigFn r = *this;
    for (const auto& [m, c] : o.cos_part) r.add_cos(m, c);
    for (const auto& [m, c] : o.sin_part) r.add_sin(m, c);
    return r;
}

TrigFn TrigFn::operator-(const TrigFn& o) const {
    TrigFn r = *this;
    for (const auto& [m, c] : o.cos_part) r.add_cos(m, -c);
    for (const auto& [m, c] : o.sin_part) r.add_sin(m, -c);
    return r;
}

TrigFn TrigFn::scaled(const Rat& s) const {
    TrigFn r;
    if (s == 0) return r;
    for (const auto& [m, c] : cos_part) r.cos_part.emplace(m, c * s);
    for (const auto& [m, c] : sin_part) r.sin_part.emplace(m, c * s);
    return r;
}

TrigFn TrigFn::operator*(const TrigFn& o) const {
    TrigFn r;
    for (const auto& [m1, c1] : cos_part)
        for (const auto& [m2, c2] : o.cos_part) r.add_cos(m1 + m2, c1 * c2);
    // sin * sin = 1 - cos^2
    for (const auto& [m1, c1] : sin_part)
        for (const auto& [m2, c2] : o.sin_part) {
            r.add_cos(m1 + m2, c1 * c2);
            r.add_cos(m1 + m2 + 2, -c1 * c2);
        }
    for (const auto& [m1, c1] : cos_part)
        for (const auto& [m2, c2] : o.sin_part) r.add_sin(m1 + m2, c1 * c2);
    for (const auto& [m1, c1] : sin_part)
        for (const auto& [m2, c2] : o.cos_part) r.add_sin(m1 + m2, c1 * c2);
    return r;
}

TrigFn differentiate(const TrigFn& f) {
    TrigFn r;
    // (cos^m)' = -m sin cos^{m-1}
    for (const auto& [m, c] : f.cos_part) r.add_sin(m - 1, -Rat(m) * c);
    // (sin cos^m)' = (1+m) cos^{m+1} - m cos^{m-1}
    for (const auto& [m, c] : f.sin_part) {
        r.add_cos(m + 1, Rat(1 + m) * c);
        r.add_cos(m - 1, -Rat(m) * c);
    }
    return r;
}

TrigFn apply_D(const TrigFn& f) {
    TrigFn d = differentiate(f);
    TrigFn r;
    for (const auto& [m, c] : d.cos_part) r.add_cos(m + 2, c);
    for (const auto& [m, c] : d.sin_part) r.add_sin(m + 2, c);
    return r;
}

namespace {
TrigFn shift_cos(const TrigFn& f, long k) {
    TrigFn r;
    for (const auto& [m, c] : f.cos_part) r.cos_part.emplace(m + k, c);
    for (const auto& [m, c] : f.sin_part) r.sin_part.emplace(m + k, c);
    return r;
}
} // namespace

TrigFn apply_Dk1(int k, const TrigFn& f) {
    if (k < 0) throw std::invalid_argument("apply_Dk1: k must be >= 0");
    TrigFn g = shift_cos(f, -k); // sec^k * f
    for (int i = 0; i < k; ++i) g = apply_D(g);
    return shift_cos(differentiate(g), -k);
}

TrigFn apply_factored(int k, const TrigFn& f) {
    if (k < 0) throw std::invalid_argument("apply_factored: k must be >= 0");
    TrigFn g = f;
    if (k % 2 == 0) g = differentiate(g);
    for (long j = (k % 2 == 0) ? 2 : 1; j <= k; j += 2)
        g = differentiate(differentiate(g)) + g.scaled(Rat(j * j));
    return g;
}

TrigFn chebyshev_T(int m) {
    if (m < 0) throw std::invalid_argument("chebyshev_T: m must be >= 0");
    TrigFn prev = TrigFn::one();        // T_0
    if (m == 0) return prev;
    TrigFn cur = TrigFn::cos_pow(1);    // T_1
    for (int i = 2; i <= m; ++i) {
        TrigFn next = (TrigFn::cos_pow(1) * cur).scaled(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TrigFn chebyshev_U(int m) {
    if (m < 0) throw std::invalid_argument("chebyshev_U: m must be >= 0");
    TrigFn prev = TrigFn::one();                 // U_0
    if (m == 0) return prev;
    TrigFn cur = TrigFn::cos_pow(1, Rat(2));     // U_1
    for (int i = 2; i <= m; ++i) {
        TrigFn next = (TrigFn::cos_pow(1) * cur).scaled(2) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {
CircleVerdict fail(const std::string& what) { return {false, what}; }
} // namespace

CircleVerdict verify_factorization(int k, long mlo, long mhi) {
    for (long m = mlo; m <= mhi; ++m) {
        TrigFn c = TrigFn::cos_pow(m);
        if (!(apply_Dk1(k, c) == apply_factored(k, c)))
            return fail("k=" + std::to_string(k) + ", f=cos^" + std::to_string(m));
        TrigFn s = TrigFn::sin_cos_pow(m);
        if (!(apply_Dk1(k, s) == apply_factored(k, s)))
            return fail("k=" + std::to_string(k) + ", f=sin*cos^" + std::to_string(m));
    }
    // Kernel: cos(j th) and sin(j th) for j = k, k-2, ... >= 1, and the
    // constant when k is even.
    for (int j = k; j >= 1; j -= 2) {
        if (!apply_Dk1(k, chebyshev_T(j)).is_zero())
            return fail("k=" + std::to_string(k) + ": cos(" + std::to_string(j) +
                        " th) not annihilated");
        TrigFn sj = TrigFn::sin_cos_pow(0) * chebyshev_U(j - 1);
        if (!apply_Dk1(k, sj).is_zero())
            return fail("k=" + std::to_string(k) + ": sin(" + std::to_string(j) +
                        " th) not annihilated");
    }
    if (k % 2 == 0 && !apply_Dk1(k, TrigFn::one()).is_zero())
        return fail("k=" + std::to_string(k) + ": constant not annihilated");
    return {};
}

CircleVerdict verify_recursion(int k, long mlo, long mhi) {
    const Rat a(k + 2);
    auto rhs = [&](const TrigFn& f) {
        TrigFn g1 = differentiate(f) + (TrigFn::tan() * f).scaled(a);
        TrigFn g2 = apply_Dk1(k, g1);
        return differentiate(g2) - (TrigFn::tan() * g2).scaled(a);
    };
    for (long m = mlo; m <= mhi; ++m) {
        for (bool sin_side : {false, true}) {
            TrigFn f = sin_side ? TrigFn::sin_cos_pow(m) : TrigFn::cos_pow(m);
            if (!(apply_Dk1(k + 2, f) == rhs(f)))
                return fail("k=" + std::to_string(k) + ", f=" +
                            (sin_side ? "sin*cos^" : "cos^") + std::to_string(m));
        }
    }
    return {};
}

TrigFn realize(const NCOp& op, const TrigFn& f) {
    // Group by nabla power; apply sum A_p(tan) d^p/dth^p.
    long maxp = 0;
    for (const auto& [k, c] : op.terms()) {
        if (k[1] != 0)
            throw std::invalid_argument("realize: operator still has g factors");
        maxp = std::max(maxp, k[2]);
    }
    std::vector<TrigFn> deriv(maxp + 1);
    deriv[0] = f;
    for (long p = 1; p <= maxp; ++p) deriv[p] = differentiate(deriv[p - 1]);

    TrigFn r;
    for (const auto& [k, c] : op.terms()) {
        TrigFn t = deriv[k[2]].scaled(c);
        for (long i = 0; i < k[0]; ++i) t = TrigFn::tan() * t;
        r = r + t;
    }
    return r;
}

namespace {
std::string render(const TrigFn& f, bool latex) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](bool sin_side, long m, const Rat& c) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (ac != 1) factors.push_back(ac.get_str());
        if (sin_side) factors.push_back(latex ? "\\sin\\theta" : "sin");
        if (m != 0) {
            std::ostringstream cs;
            cs << (latex ? "\\cos" : "cos");
            if (m != 1) cs << (latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m));
            if (latex) cs << "\\theta";
            factors.push_back(cs.str());
        }
        if (factors.empty()) factors.push_back("1");
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << (latex ? "\\," : "*");
            os << factors[i];
        }
    };
    for (const auto& [m, c] : f.cos_part) emit(false, m, c);
    for (const auto& [m, c] : f.sin_part) emit(true, m, c);
    return os.str();
}
} // namespace

std::string TrigFn::ascii() const { return render(*this, false); }
std::string TrigFn::latex() const { return render(*this, true); }

} // namespace bgg
