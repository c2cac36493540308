#pragma once

#include "bgg/rational.hpp"

#include <map>
#include <vector>

namespace bgg {

// Dense matrix over exact rationals. Sizes here are desk scale (a few
// hundred rows), so simplicity beats cleverness.
class DenseMat {
public:
    DenseMat() = default;
    DenseMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static DenseMat identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat& at(long i, long j) { return a_[i * cols_ + j]; }
    const Rat& at(long i, long j) const { return a_[i * cols_ + j]; }

    DenseMat operator*(const DenseMat& o) const;
    DenseMat operator+(const DenseMat& o) const;
    DenseMat operator-(const DenseMat& o) const;
    DenseMat scaled(const Rat& s) const;
    DenseMat transpose() const;

    bool is_zero() const;
    bool operator==(const DenseMat& o) const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline DenseMat commutator(const DenseMat& a, const DenseMat& b) {
    return a * b - b * a;
}

// Rank by fraction-free (Bareiss) elimination: rows are scaled to integers,
// then eliminated keeping every intermediate entry an exact integer minor.
long rank(const DenseMat& m);
long kernel_dim(const DenseMat& m);

// Row-major sparse matrix over exact rationals, used for the Koszul
// differentials whose chain spaces are large but whose columns are short.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(long rows, long cols) : rows_(rows), cols_(cols), row_(rows) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const std::map<long, Rat>& row(long i) const { return row_[i]; }

    void add(long i, long j, const Rat& v);

    SparseMat operator*(const SparseMat& o) const;
    bool is_zero() const;
    long nnz() const;

    DenseMat dense() const;
    // Submatrix on the given (ordered) row and column index sets; entries
    // outside the block are the caller's problem.
    DenseMat block(const std::vector<long>& rs, const std::vector<long>& cs) const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<std::map<long, Rat>> row_;
};

} // namespace bgg
