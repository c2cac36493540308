#pragma once

#include "bgg/rational.hpp"

#include <vector>

namespace bgg {

// Dynkin labels [a_1..a_n] for sl(n+1). The module V they denote has lowest
// weight -[a_1..a_n]; its highest weight carries the reversed labels.
struct DynkinLabels {
    int n = 0;
    std::vector<int> labels;

    DynkinLabels(int n_, std::vector<int> labels_);

    std::vector<int> highest_weight_labels() const;
    DynkinLabels reversed() const;

    bool operator==(const DynkinLabels&) const = default;
};

// An sl(n) label vector (n-1 entries); used for the Levi factor.
using LeviLabels = std::vector<int>;

// Exact eigenvalue of the grading element H; always a multiple of 1/(n+1).
struct Grade {
    Rat value;
    bool operator==(const Grade&) const = default;
};

// Weakly decreasing parts, trailing zeros stripped.
struct Partition {
    std::vector<long> parts;

    explicit Partition(std::vector<long> p = {});
    long size() const { return static_cast<long>(parts.size()); }
    long total() const;
    long part(long i) const { return i < size() ? parts[i] : 0; } // 0-based

    bool operator==(const Partition&) const = default;
};

// c = (n a_1 + (n-1) a_2 + ... + a_n) / (n+1): the H-eigenvalue shift given
// by the first column of the inverse Cartan matrix.
Grade c_value(const DynkinLabels& d);
// c' = c of the reversed labels (dual module); c + c' = N.
Grade dual_c_value(const DynkinLabels& d);
// N = sum of the labels: the number of grading steps of V.
long filtration_length(const DynkinLabels& d);

// k such that g = -c + k; throws if g - (-c) is not a non-negative integer.
long integer_grade(const Grade& g, const Grade& c);

// Weyl dimension formula for sl(m), m = labels.size() + 1. Exact integer.
Int weyl_dim(const std::vector<int>& labels);
inline Int weyl_dim(const DynkinLabels& d) { return weyl_dim(d.labels); }

// Highest-weight partition of an sl(m) label vector (m-1 entries):
// lambda_i = b_i + ... + b_{m-1}. Inverse drops full columns of height m.
Partition labels_to_partition(const std::vector<int>& labels);
std::vector<int> partition_to_labels(const Partition& p, int m);

} // namespace bgg
