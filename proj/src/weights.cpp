#include "bgg/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgg {

DynkinLabels::DynkinLabels(int n_, std::vector<int> labels_)
    : n(n_), labels(std::move(labels_)) {
    if (n < 1) throw std::invalid_argument("DynkinLabels: n must be positive");
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("DynkinLabels: expected " + std::to_string(n) +
                                    " labels, got " + std::to_string(labels.size()));
    for (int a : labels)
        if (a < 0) throw std::invalid_argument("DynkinLabels: labels must be >= 0");
}

std::vector<int> DynkinLabels::highest_weight_labels() const {
    std::vector<int> r(labels.rbegin(), labels.rend());
    return r;
}

DynkinLabels DynkinLabels::reversed() const {
    return DynkinLabels(n, highest_weight_labels());
}

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    if (!parts.empty() && parts.back() < 0)
        throw std::invalid_argument("Partition: parts must be >= 0");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

long Partition::total() const {
    long t = 0;
    for (long p : parts) t += p;
    return t;
}

Grade c_value(const DynkinLabels& d) {
    Rat num = 0;
    for (int i = 0; i < d.n; ++i) num += Rat(d.n - i) * d.labels[i];
    Rat c = num / Rat(d.n + 1);
    c.canonicalize();
    return Grade{c};
}

Grade dual_c_value(const DynkinLabels& d) { return c_value(d.reversed()); }

long filtration_length(const DynkinLabels& d) {
    long s = 0;
    for (int a : d.labels) s += a;
    return s;
}

long integer_grade(const Grade& g, const Grade& c) {
    Rat k = g.value + c.value;
    if (k.get_den() != 1 || k < 0)
        throw std::domain_error("integer_grade: " + to_string(g.value) +
                                " is not of the form -c + k");
    return to_long(Int(k.get_num()));
}

Int weyl_dim(const std::vector<int>& labels) {
    const long m = static_cast<long>(labels.size()) + 1;
    Int num = 1, den = 1;
    for (long i = 1; i <= m; ++i)
        for (long j = i + 1; j <= m; ++j) {
            long s = j - i;
            for (long t = i; t < j; ++t) s += labels[t - 1];
            num *= s;
            den *= (j - i);
        }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("weyl_dim: non-integral result");
    return q;
}

Partition labels_to_partition(const std::vector<int>& labels) {
    std::vector<long> parts(labels.size());
    long acc = 0;
    for (long i = static_cast<long>(labels.size()) - 1; i >= 0; --i) {
        acc += labels[i];
        parts[i] = acc;
    }
    return Partition(std::move(parts));
}

std::vector<int> partition_to_labels(const Partition& p, int m) {
    if (p.size() > m)
        throw std::invalid_argument("partition_to_labels: more than " +
                                    std::to_string(m) + " parts");
    std::vector<int> labels(m - 1);
    for (int i = 0; i < m - 1; ++i)
        labels[i] = static_cast<int>(p.part(i) - p.part(i + 1));
    return labels;
}

} // namespace bgg
