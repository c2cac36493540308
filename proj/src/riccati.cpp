#include "bgg/riccati.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bgg {

NCOp NCOp::monomial(long l, long m, long p, const Rat& c) {
    NCOp op;
    op.add_term(l, m, p, c);
    return op;
}

void NCOp::add_term(long l, long m, long p, const Rat& c) {
    if (l < 0 || m < 0 || p < 0)
        throw std::invalid_argument("NCOp: negative exponent");
    if (c == 0) return;
    Key k{l, m, p};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCOp NCOp::operator+(const NCOp& o) const {
    NCOp r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], k[2], c);
    return r;
}

NCOp NCOp::operator-(const NCOp& o) const {
    NCOp r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k[0], k[1], k[2], -c);
    return r;
}

NCOp NCOp::scaled(const Rat& s) const {
    NCOp r;
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

std::optional<long> NCOp::homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [k, c] : terms_) {
        long d = k[0] + 2 * k[1] + k[2];
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

NCOp NCOp::substitute_g_one() const {
    NCOp r;
    for (const auto& [k, c] : terms_) r.add_term(k[0], 0, k[2], c);
    return r;
}

NCOp NCOp::nabla_coefficient(long p) const {
    NCOp r;
    for (const auto& [k, c] : terms_)
        if (k[2] == p) r.add_term(k[0], k[1], 0, c);
    return r;
}

namespace {

// Local memo of normal forms of nabla^p Y^l; recursion:
//   nabla^p Y^l = (nabla^{p-1} Y^l) nabla
//              + l g (nabla^{p-1} Y^{l-1}) + l (nabla^{p-1} Y^{l+1}).
class NormalOrderer {
public:
    const NCOp& get(long p, long l) {
        auto key = std::make_pair(p, l);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        NCOp nf;
        if (p == 0) {
            nf = NCOp::monomial(l, 0, 0);
        } else {
            for (const auto& [k, c] : get(p - 1, l).terms())
                nf.add_term(k[0], k[1], k[2] + 1, c);
            if (l > 0) {
                NCOp t = get(p - 1, l - 1);
                for (const auto& [k, c] : t.terms())
                    nf.add_term(k[0], k[1] + 1, k[2], c * l);
                t = get(p - 1, l + 1);
                for (const auto& [k, c] : t.terms())
                    nf.add_term(k[0], k[1], k[2], c * l);
            }
        }
        return memo_.emplace(key, std::move(nf)).first->second;
    }

private:
    std::map<std::pair<long, long>, NCOp> memo_;
};

NCOp multiply_with(NormalOrderer& no, const NCOp& a, const NCOp& b) {
    NCOp r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const Rat c = ca * cb;
            // Y^l1 g^m1 nabla^p1 * Y^l2 g^m2 nabla^p2:
            // reorder the middle nabla^p1 Y^l2, everything else commutes past.
            for (const auto& [k, w] : no.get(ka[2], kb[0]).terms())
                r.add_term(ka[0] + k[0], ka[1] + kb[1] + k[1], k[2] + kb[2], c * w);
        }
    return r;
}

} // namespace

NCOp multiply(const NCOp& a, const NCOp& b) {
    NormalOrderer no;
    return multiply_with(no, a, b);
}

NCOp nabla_pow_upsilon_pow(long k, long l) {
    if (k < 0 || l < 0) throw std::invalid_argument("nabla_pow_upsilon_pow: negative power");
    NormalOrderer no;
    return no.get(k, l);
}

NCOp bgg_product(int k) {
    if (k < 0) throw std::invalid_argument("bgg_product: k must be >= 0");
    NormalOrderer no;
    NCOp acc = NCOp::one();
    // Left to right: (nabla - k Y), (nabla - (k-2) Y), ..., (nabla + k Y).
    for (long j = -k; j <= k; j += 2) {
        NCOp factor = NCOp::nabla() + NCOp::monomial(1, 0, 0, Rat(j));
        acc = multiply_with(no, acc, factor);
    }
    return acc;
}

NCOp factored_product(int k) {
    if (k < 0) throw std::invalid_argument("factored_product: k must be >= 0");
    NCOp acc = NCOp::one();
    const long start = (k % 2 == 0) ? 2 : 1;
    for (long j = start; j <= k; j += 2) {
        NCOp factor = NCOp::monomial(0, 0, 2) + NCOp::monomial(0, 1, 0, Rat(j * j));
        acc = multiply(acc, factor); // factors commute; plain expansion
    }
    if (k % 2 == 0) acc = multiply(acc, NCOp::nabla());
    return acc;
}

bool verify_identity(int k) {
    const NCOp lhs = bgg_product(k);
    const NCOp rhs = factored_product(k);
    if (!(lhs == rhs)) return false;
    return lhs.substitute_g_one() == rhs.substitute_g_one();
}

namespace {

void print_power(std::ostringstream& os, const char* sym, long e, bool latex, bool& first) {
    if (e == 0) return;
    if (!first) os << (latex ? " " : " ");
    first = false;
    os << sym;
    if (e > 1) {
        if (latex) os << "^{" << e << "}";
        else os << "^" << e;
    }
}

std::string render(const NCOp& op, bool latex) {
    if (op.is_zero()) return "0";
    // Highest nabla power first, then by Y and g exponents.
    std::vector<std::pair<NCOp::Key, Rat>> ts(op.terms().begin(), op.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first[2] != b.first[2]) return a.first[2] > b.first[2];
        if (a.first[0] != b.first[0]) return a.first[0] > b.first[0];
        return a.first[1] > b.first[1];
    });
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [k, c] : ts) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first_term) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first_term = false;
        const bool bare = (k[0] == 0 && k[1] == 0 && k[2] == 0);
        bool first_factor = true;
        if (ac != 1 || bare) {
            if (latex && ac.get_den() != 1)
                os << "\\tfrac{" << ac.get_num().get_str() << "}{" << ac.get_den().get_str() << "}";
            else os << ac.get_str();
            first_factor = false;
        }
        print_power(os, latex ? "\\Upsilon" : "Y", k[0], latex, first_factor);
        print_power(os, "g", k[1], latex, first_factor);
        print_power(os, latex ? "\\nabla" : "nabla", k[2], latex, first_factor);
    }
    return os.str();
}

} // namespace

std::string NCOp::ascii() const { return render(*this, false); }
std::string NCOp::latex() const { return render(*this, true); }

} // namespace bgg
