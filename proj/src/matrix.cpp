#include "bgg/matrix.hpp"

#include <stdexcept>

namespace bgg {

DenseMat DenseMat::identity(long n) {
    DenseMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

DenseMat DenseMat::operator*(const DenseMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("DenseMat::*: shape mismatch");
    DenseMat r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

DenseMat DenseMat::operator+(const DenseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("DenseMat::+: shape mismatch");
    DenseMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

DenseMat DenseMat::operator-(const DenseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("DenseMat::-: shape mismatch");
    DenseMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

DenseMat DenseMat::scaled(const Rat& s) const {
    DenseMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

DenseMat DenseMat::transpose() const {
    DenseMat r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool DenseMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool DenseMat::operator==(const DenseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

long rank(const DenseMat& m) {
    const long nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;

    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (long i = 0; i < nr; ++i) {
        Int l = 1;
        for (long j = 0; j < nc; ++j) {
            const Rat& x = m.at(i, j);
            if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        for (long j = 0; j < nc; ++j) {
            Rat x = m.at(i, j) * Rat(l);
            a[i][j] = x.get_num(); // denominator is now 1
        }
    }

    long r = 0;
    Int prev = 1;
    for (long c = 0; c < nc && r < nr; ++c) {
        long piv = -1;
        for (long i = r; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        for (long i = r + 1; i < nr; ++i) {
            for (long j = c + 1; j < nc; ++j) {
                Int t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

long kernel_dim(const DenseMat& m) { return m.cols() - rank(m); }

void SparseMat::add(long i, long j, const Rat& v) {
    if (v == 0) return;
    auto& r = row_[i];
    auto it = r.find(j);
    if (it == r.end()) {
        r.emplace(j, v);
    } else {
        it->second += v;
        if (it->second == 0) r.erase(it);
    }
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("SparseMat::*: shape mismatch");
    SparseMat r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (const auto& [k, x] : row_[i])
            for (const auto& [j, y] : o.row_[k]) r.add(i, j, x * y);
    return r;
}

bool SparseMat::is_zero() const {
    for (const auto& r : row_)
        if (!r.empty()) return false;
    return true;
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& r : row_) n += static_cast<long>(r.size());
    return n;
}

DenseMat SparseMat::dense() const {
    DenseMat d(rows_, cols_);
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) d.at(i, j) = v;
    return d;
}

DenseMat SparseMat::block(const std::vector<long>& rs, const std::vector<long>& cs) const {
    std::map<long, long> cpos;
    for (size_t j = 0; j < cs.size(); ++j) cpos[cs[j]] = static_cast<long>(j);
    DenseMat d(static_cast<long>(rs.size()), static_cast<long>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
        for (const auto& [j, v] : row_[rs[i]]) {
            auto it = cpos.find(j);
            if (it != cpos.end()) d.at(static_cast<long>(i), it->second) = v;
        }
    return d;
}

} // namespace bgg
