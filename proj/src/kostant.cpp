#include "bgg/kostant.hpp"

#include <stdexcept>

namespace bgg {

std::vector<GradedIrrepDescriptor> cohomology_table(const DynkinLabels& d) {
    const int n = d.n;
    const auto& a = d.labels;
    const Grade c = c_value(d);

    std::vector<GradedIrrepDescriptor> table;
    table.reserve(n + 1);
    long prefix = 0; // a_1 + ... + a_r
    for (int r = 0; r <= n; ++r) {
        LeviLabels levi;
        if (r == 0) {
            levi.assign(a.begin() + 1, a.end());
        } else if (r == n) {
            levi.assign(a.begin(), a.end() - 1);
        } else {
            for (int i = 0; i < r - 1; ++i) levi.push_back(a[i]);
            levi.push_back(a[r - 1] + a[r] + 1);
            for (int i = r + 1; i < n; ++i) levi.push_back(a[i]);
        }
        if (r > 0) prefix += a[r - 1];
        Grade g{-c.value + prefix + r};
        table.push_back({r, std::move(levi), g, weyl_dim(levi)});
    }
    return table;
}

std::vector<E1Position> e1_positions(const DynkinLabels& d) {
    std::vector<E1Position> pos;
    pos.reserve(d.n + 1);
    long prefix = 0;
    for (int r = 0; r <= d.n; ++r) {
        if (r > 0) prefix += d.labels[r - 1];
        pos.push_back({r, prefix + r, -prefix});
    }
    return pos;
}

std::vector<int> operator_orders(const DynkinLabels& d) {
    std::vector<int> s(d.n);
    for (int r = 0; r < d.n; ++r) s[r] = d.labels[r] + 1;
    return s;
}

BGGComplexData bgg_complex_data(const DynkinLabels& d) {
    return BGGComplexData{d,
                          c_value(d).value,
                          filtration_length(d),
                          cohomology_table(d),
                          e1_positions(d),
                          operator_orders(d)};
}

long pieri_multiplicity(int s, const LeviLabels& source, const LeviLabels& target) {
    if (s < 1) throw std::invalid_argument("pieri_multiplicity: s must be >= 1");
    if (source.size() != target.size())
        throw std::invalid_argument("pieri_multiplicity: rank mismatch");
    const long n = static_cast<long>(source.size()) + 1;
    const Partition lam = labels_to_partition(source);
    const Partition tau = labels_to_partition(target);

    // The strip may create full columns of height n (trivial for sl(n)):
    // the target arises from mu = tau + t*(1,...,1) for the unique t fixed
    // by |mu| = |lam| + s, if that t is a non-negative integer.
    const long diff = s + lam.total() - tau.total();
    if (diff < 0 || diff % n != 0) return 0;
    const long t = diff / n;

    for (long i = 0; i < n; ++i) {
        const long mu_i = tau.part(i) + t;
        if (mu_i < lam.part(i)) return 0;                       // mu contains lam
        if (i + 1 < n && lam.part(i) < tau.part(i + 1) + t) return 0; // <=1 box per column
    }
    return 1;
}

std::vector<ColumnEuler> graded_euler_check(const DynkinLabels& d,
                                            const std::map<long, Int>& grade_dims) {
    const int n = d.n;
    const long N = filtration_length(d);
    const auto table = cohomology_table(d);
    const auto pos = e1_positions(d);

    std::vector<ColumnEuler> out;
    for (long p = 0; p <= N + n; ++p) {
        Int chi = 0;
        // E_0^{p,q} = Lambda^{p+q} (x) V_{-q}; the column runs over q <= 0.
        for (long q = -std::min(p, N); q <= 0; ++q) {
            if (p + q > n) continue;
            auto it = grade_dims.find(-q);
            if (it == grade_dims.end())
                throw std::out_of_range("graded_euler_check: grade_dims missing k=" +
                                        std::to_string(-q));
            Int term = binomial(n, p + q) * it->second;
            if (q % 2 != 0) term = -term;
            chi += term;
        }
        Int expected = 0;
        for (int r = 0; r <= n; ++r)
            if (pos[r].p == p) {
                expected = table[r].dim;
                if (pos[r].q % 2 != 0) expected = -expected;
            }
        out.push_back({p, chi, expected, chi == expected});
    }
    return out;
}

} // namespace bgg
