#include "bgg/bruteforce.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bgg {

ConcreteRep ConcreteRep::explicit_rep(long dim, std::vector<DenseMat> generators) {
    ConcreteRep r;
    r.provenance = "explicit";
    r.dim = dim;
    r.generators = std::move(generators);
    for (const auto& g : r.generators)
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("explicit_rep: generator shape mismatch");
    return r;
}

ConcreteRep ConcreteRep::trivial_rep(long algebra_dim) {
    return explicit_rep(1, std::vector<DenseMat>(algebra_dim, DenseMat(1, 1)));
}

LieAlgebraData::LieAlgebraData(int m)
    : dim(m),
      gamma(m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m))) {
    if (m < 1) throw std::invalid_argument("LieAlgebraData: dim must be >= 1");
}

void LieAlgebraData::set_bracket(int a, int b, int c, const Rat& v) {
    gamma[a][b][c] = v;
    gamma[b][a][c] = -v;
}

LieAlgebraData LieAlgebraData::abelian(int m) { return LieAlgebraData(m); }

LieAlgebraData LieAlgebraData::heisenberg() {
    LieAlgebraData L(3); // [x, y] = z
    L.set_bracket(0, 1, 2, 1);
    return L;
}

LieAlgebraData LieAlgebraData::sl2() {
    LieAlgebraData L(3); // basis (h, e, f)
    L.set_bracket(0, 1, 1, 2);  // [h, e] = 2e
    L.set_bracket(0, 2, 2, -2); // [h, f] = -2f
    L.set_bracket(1, 2, 0, 1);  // [e, f] = h
    return L;
}

// ---------------------------------------------------------------------------
// Young-symmetrizer construction
// ---------------------------------------------------------------------------

namespace {

using Index = unsigned long; // encoded letter tuple, base m = n+1
using SparseVec = std::map<Index, Rat>;

void axpy(SparseVec& dst, const Rat& f, const SparseVec& src) {
    if (f == 0) return;
    for (const auto& [c, v] : src) {
        auto it = dst.find(c);
        if (it == dst.end()) {
            dst.emplace(c, f * v);
        } else {
            it->second += f * v;
            if (it->second == 0) dst.erase(it);
        }
    }
}

// Reduced row echelon form over Q, rows held as sparse vectors; each row has
// coefficient 1 at its pivot (its smallest coordinate) and 0 at every other
// row's pivot.
struct Rref {
    std::vector<SparseVec> rows;
    std::map<Index, int> pivots;

    void reduce(SparseVec& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots.find(it->first);
            if (p == pivots.end()) {
                ++it;
                continue;
            }
            const Index coord = it->first;
            axpy(v, -it->second, rows[p->second]);
            it = v.upper_bound(coord);
        }
    }

    // v must be reduced and nonzero.
    void insert(SparseVec v) {
        const Index pivot = v.begin()->first;
        const Rat pv = v.begin()->second;
        for (auto& [c, val] : v) val /= pv;
        for (auto& [pc, ri] : pivots) {
            auto hit = rows[ri].find(pivot);
            if (hit != rows[ri].end()) {
                const Rat f = hit->second;
                axpy(rows[ri], -f, v);
            }
        }
        pivots[pivot] = static_cast<int>(rows.size());
        rows.push_back(std::move(v));
    }

    // Coordinates of v in the row basis; throws if v is outside the span.
    std::vector<Rat> express(const SparseVec& v) const {
        std::vector<Rat> coef(rows.size());
        for (const auto& [pc, ri] : pivots) {
            auto it = v.find(pc);
            if (it != v.end()) coef[ri] = it->second;
        }
        SparseVec residual = v;
        for (size_t i = 0; i < rows.size(); ++i) axpy(residual, -coef[i], rows[i]);
        if (!residual.empty())
            throw std::logic_error("Rref::express: vector outside the span");
        return coef;
    }
};

struct PermGroup {
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
};

int arrangement_parity(const std::vector<int>& a) {
    int inv = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// Direct product of symmetric groups acting on disjoint position blocks.
PermGroup block_perm_group(const std::vector<std::vector<int>>& blocks, int d) {
    PermGroup g;
    std::vector<int> id(d);
    std::iota(id.begin(), id.end(), 0);
    g.perms.push_back(id);
    g.signs.push_back(1);
    for (const auto& blk : blocks) {
        if (blk.size() < 2) continue;
        std::vector<int> a(blk.size());
        std::iota(a.begin(), a.end(), 0);
        PermGroup next;
        do {
            const int s = arrangement_parity(a);
            for (size_t i = 0; i < g.perms.size(); ++i) {
                std::vector<int> q = g.perms[i];
                for (size_t t = 0; t < blk.size(); ++t) q[blk[t]] = g.perms[i][blk[a[t]]];
                next.perms.push_back(std::move(q));
                next.signs.push_back(g.signs[i] * s);
            }
        } while (std::next_permutation(a.begin(), a.end()));
        g = std::move(next);
    }
    return g;
}

struct YoungModule {
    long dim = 0;
    std::vector<long> k_offset; // sorted ascending, one per basis vector
    DenseMat H;                 // diagonal, eigenvalue -cW + k
    std::vector<DenseMat> rho;  // E_{alpha+1,1} for alpha = 1..n
    Rat cW;
    long N = 0;
};

long count_zero_letters(Index idx, long deg, long m) {
    long z = 0;
    for (long t = 0; t < deg; ++t) {
        if (idx % m == 0) ++z;
        idx /= m;
    }
    return z;
}

// rho_alpha as a derivation: replaces one letter 0 (= e_1) by letter alpha.
SparseVec apply_lowering(const SparseVec& v, int alpha, long deg, long m) {
    SparseVec out;
    for (const auto& [idx, c] : v) {
        Index base = 1;
        Index rest = idx;
        for (long t = 0; t < deg; ++t) {
            if (rest % m == 0) {
                auto it = out.find(idx + alpha * base);
                if (it == out.end()) {
                    out.emplace(idx + alpha * base, c);
                } else {
                    it->second += c;
                    if (it->second == 0) out.erase(it);
                }
            }
            rest /= m;
            base *= m;
        }
    }
    return out;
}

// Irreducible sl(n+1) module with highest-weight labels h, realised inside
// the |lambda|-th tensor power of the standard module.
YoungModule young_module(int n, const std::vector<int>& h) {
    const long m = n + 1;
    const Partition lam = labels_to_partition(h);
    const long deg = lam.total();
    const Int target_dim = weyl_dim(h);
    // W has lowest weight carrying the reversed labels.
    std::vector<int> rev(h.rbegin(), h.rend());
    const Rat cW = c_value(DynkinLabels(n, rev)).value;
    long N = 0;
    for (int x : h) N += x;

    YoungModule W;
    W.cW = cW;
    W.N = N;

    if (deg == 0) {
        W.dim = 1;
        W.k_offset = {0};
        W.H = DenseMat(1, 1);
        W.rho.assign(n, DenseMat(1, 1));
        return W;
    }

    // Cells in row-major order; row and column position blocks.
    std::vector<std::vector<int>> row_blocks, col_blocks(lam.part(0));
    {
        int pos = 0;
        for (long r = 0; r < lam.size(); ++r) {
            std::vector<int> blk;
            for (long c = 0; c < lam.part(r); ++c) {
                blk.push_back(pos);
                col_blocks[c].push_back(pos);
                ++pos;
            }
            row_blocks.push_back(std::move(blk));
        }
    }
    const PermGroup rowg = block_perm_group(row_blocks, deg);
    const PermGroup colg = block_perm_group(col_blocks, deg);

    // Spanning set: the symmetrizer applied to fillings with weakly
    // increasing rows (row symmetrization identifies the rest).
    Rref rref;
    std::vector<int> fill(deg);
    std::vector<long> row_of(deg);
    for (size_t r = 0; r < row_blocks.size(); ++r)
        for (int pos : row_blocks[r]) row_of[pos] = static_cast<long>(r);

    std::function<bool(long)> enumerate = [&](long pos) -> bool {
        if (pos == deg) {
            std::map<Index, long> acc;
            for (size_t ci = 0; ci < colg.perms.size(); ++ci) {
                const auto& tau = colg.perms[ci];
                const int s = colg.signs[ci];
                for (const auto& sigma : rowg.perms) {
                    Index idx = 0;
                    Index base = 1;
                    for (long t = 0; t < deg; ++t) {
                        idx += static_cast<Index>(fill[sigma[tau[t]]]) * base;
                        base *= m;
                    }
                    acc[idx] += s;
                }
            }
            SparseVec v;
            for (const auto& [idx, c] : acc)
                if (c != 0) v.emplace(idx, Rat(c));
            rref.reduce(v);
            if (!v.empty()) rref.insert(std::move(v));
            return Int(static_cast<long>(rref.rows.size())) == target_dim;
        }
        const int lo = (pos > 0 && row_of[pos] == row_of[pos - 1]) ? fill[pos - 1] : 0;
        for (int letter = lo; letter <= n; ++letter) {
            fill[pos] = letter;
            if (enumerate(pos + 1)) return true;
        }
        return false;
    };
    enumerate(0);

    if (Int(static_cast<long>(rref.rows.size())) != target_dim)
        throw std::logic_error("young_module: rank " + std::to_string(rref.rows.size()) +
                               " != Weyl dimension " + target_dim.get_str());

    const long D = static_cast<long>(rref.rows.size());

    // Every basis vector is H-homogeneous: all its tensor coordinates share
    // one letter-0 count.
    std::vector<long> z(D);
    for (long i = 0; i < D; ++i) {
        z[i] = count_zero_letters(rref.rows[i].begin()->first, deg, m);
        for (const auto& [idx, c] : rref.rows[i])
            if (count_zero_letters(idx, deg, m) != z[i])
                throw std::logic_error("young_module: basis vector not H-homogeneous");
    }
    const long z_min = *std::min_element(z.begin(), z.end());
    const long z_max = *std::max_element(z.begin(), z.end());
    if (Rat(z_min * m - deg, m) != -cW)
        throw std::logic_error("young_module: lowest H-eigenvalue does not match -c");
    if (z_max - z_min != N)
        throw std::logic_error("young_module: grade span does not match the label sum");

    // Order the basis by grade.
    std::vector<long> order(D);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](long a, long b) { return z[a] < z[b]; });
    std::vector<long> newpos(D);
    for (long i = 0; i < D; ++i) newpos[order[i]] = i;

    W.dim = D;
    W.k_offset.resize(D);
    W.H = DenseMat(D, D);
    for (long i = 0; i < D; ++i) {
        W.k_offset[i] = z[order[i]] - z_min;
        W.H.at(i, i) = -cW + W.k_offset[i];
    }
    for (int alpha = 1; alpha <= n; ++alpha) {
        DenseMat R(D, D);
        for (long col = 0; col < D; ++col) {
            const SparseVec img = apply_lowering(rref.rows[order[col]], alpha, deg, m);
            const std::vector<Rat> coef = rref.express(img);
            for (long j = 0; j < D; ++j)
                if (coef[j] != 0) R.at(newpos[j], col) = coef[j];
        }
        W.rho.push_back(std::move(R));
    }
    return W;
}

} // namespace

ConcreteRep build_irrep(const DynkinLabels& d, int degree_bound) {
    const long deg_direct = labels_to_partition(d.highest_weight_labels()).total();
    const long deg_dual = labels_to_partition(d.labels).total();
    const bool use_dual = deg_dual < deg_direct;
    const long deg = use_dual ? deg_dual : deg_direct;
    if (deg > degree_bound) {
        std::ostringstream os;
        os << "build_irrep: too large: tensor degree " << deg << " exceeds bound "
           << degree_bound << " (module dimension " << weyl_dim(d).get_str() << ")";
        throw TooLargeError(os.str());
    }

    ConcreteRep rep;
    rep.n = d.n;
    rep.labels = d.labels;
    rep.c = c_value(d).value;
    rep.N = filtration_length(d);

    if (!use_dual) {
        YoungModule W = young_module(d.n, d.highest_weight_labels());
        rep.provenance = "young-direct";
        rep.dim = W.dim;
        rep.H = std::move(W.H);
        rep.gminus = std::move(W.rho);
        return rep;
    }

    // Build the dual module (smaller tensor degree) and transpose:
    // on W* the algebra acts by X |-> -X^t.
    YoungModule W = young_module(d.n, d.labels);
    const long D = W.dim;
    rep.provenance = "young-dual";
    rep.dim = D;

    // Dual basis vector j sits at grade offset N - k_j; re-sort ascending.
    std::vector<long> order(D);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](long a, long b) { return W.k_offset[a] > W.k_offset[b]; });
    rep.H = DenseMat(D, D);
    for (long i = 0; i < D; ++i)
        rep.H.at(i, i) = -rep.c + (W.N - W.k_offset[order[i]]);
    for (const auto& R : W.rho) {
        DenseMat M(D, D);
        for (long i = 0; i < D; ++i)
            for (long j = 0; j < D; ++j) M.at(i, j) = -R.at(order[j], order[i]);
        rep.gminus.push_back(std::move(M));
    }
    return rep;
}

std::map<long, Int> grade_dimensions(const ConcreteRep& rep) {
    std::map<long, Int> dims;
    Int total = 0;
    for (long k = 0; k <= rep.N; ++k) {
        DenseMat shifted = rep.H - DenseMat::identity(rep.dim).scaled(-rep.c + k);
        const long kd = kernel_dim(shifted);
        if (kd > 0) dims[k] = kd;
        total += kd;
    }
    if (total != rep.dim)
        throw std::domain_error("grade_dimensions: H has eigenvalues outside {-c+k}");
    if (!dims.count(0) || !dims.count(rep.N))
        throw std::domain_error("grade_dimensions: V_0 or V_N is empty");
    return dims;
}

Verdict check_grade_lowering(const ConcreteRep& rep) {
    const DenseMat cI = DenseMat::identity(rep.dim).scaled(rep.c);
    const DenseMat h_plus_c = rep.H + cI; // kernel = V_0
    const long rank_v0 = rank(h_plus_c);
    for (size_t a = 0; a < rep.gminus.size(); ++a) {
        const DenseMat& r = rep.gminus[a];
        if (!(commutator(rep.H, r) == r.scaled(-1)))
            return {false, "[H, rho_" + std::to_string(a + 1) + "] != -rho_" +
                               std::to_string(a + 1)};
        // rho(V_0) = 0 <=> ker(H + cI) <= ker(rho): stacking rho under
        // H + cI must not raise the rank.
        DenseMat stacked(2 * rep.dim, rep.dim);
        for (long i = 0; i < rep.dim; ++i)
            for (long j = 0; j < rep.dim; ++j) {
                stacked.at(i, j) = h_plus_c.at(i, j);
                stacked.at(rep.dim + i, j) = r.at(i, j);
            }
        if (rank(stacked) != rank_v0)
            return {false, "rho_" + std::to_string(a + 1) + " does not kill V_0"};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Koszul complex
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> subsets_of(int m, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

long subset_index(const std::map<std::vector<int>, long>& ranks, const std::vector<int>& s) {
    return ranks.at(s);
}

std::map<std::vector<int>, long> rank_table(const std::vector<std::vector<int>>& subsets) {
    std::map<std::vector<int>, long> t;
    for (size_t i = 0; i < subsets.size(); ++i) t[subsets[i]] = static_cast<long>(i);
    return t;
}

int permutation_parity(const std::vector<int>& a) {
    int inv = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace

SparseMat koszul_differential(const LieAlgebraData& L, const std::vector<DenseMat>& gens,
                              long dimV, int p) {
    const int m = L.dim;
    if (p < 0 || p > m) throw std::invalid_argument("koszul_differential: bad degree");
    if (static_cast<int>(gens.size()) != m)
        throw std::invalid_argument("koszul_differential: need one generator per basis element");

    const auto rows_sub = subsets_of(m, p + 1);
    const auto cols_sub = subsets_of(m, p);
    const auto col_rank = rank_table(cols_sub);

    SparseMat M(static_cast<long>(rows_sub.size()) * dimV,
                static_cast<long>(cols_sub.size()) * dimV);
    const Rat rho_w(1, p + 1);
    Rat gamma_w(1, 2 * (p + 1));
    if (p % 2 != 0) gamma_w = -gamma_w;

    for (size_t ti = 0; ti < rows_sub.size(); ++ti) {
        const auto& T = rows_sub[ti];
        // rho part: 1/(p+1) sum_i (-1)^i rho_{t_i} v_{T \ t_i}
        for (int i = 0; i <= p; ++i) {
            std::vector<int> S;
            for (int u = 0; u <= p; ++u)
                if (u != i) S.push_back(T[u]);
            const long sc = subset_index(col_rank, S);
            Rat w = rho_w;
            if (i % 2 != 0) w = -w;
            const DenseMat& R = gens[T[i]];
            for (long a = 0; a < dimV; ++a)
                for (long b = 0; b < dimV; ++b)
                    if (R.at(a, b) != 0)
                        M.add(static_cast<long>(ti) * dimV + a, sc * dimV + b,
                              w * R.at(a, b));
        }
        // bracket part:
        //   (-1)^p / (2(p+1)) sum_{i<j} (-1)^{i+j-1}
        //       (Gamma_{t_i t_j}^e - Gamma_{t_j t_i}^e) v_{sorted(T\{t_i,t_j} + e)}
        if (p >= 1) {
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j) {
                    std::vector<int> R;
                    for (int u = 0; u <= p; ++u)
                        if (u != i && u != j) R.push_back(T[u]);
                    Rat base = gamma_w;
                    if ((i + j - 1) % 2 != 0) base = -base;
                    for (int e = 0; e < m; ++e) {
                        const Rat g = L.g(T[i], T[j], e) - L.g(T[j], T[i], e);
                        if (g == 0) continue;
                        if (std::find(R.begin(), R.end(), e) != R.end()) continue;
                        std::vector<int> S = R;
                        S.push_back(e);
                        std::sort(S.begin(), S.end());
                        const long pos = std::lower_bound(S.begin(), S.end(), e) - S.begin();
                        Rat w = base * g;
                        if ((static_cast<long>(p) - 1 - pos) % 2 != 0) w = -w;
                        const long sc = subset_index(col_rank, S);
                        for (long a = 0; a < dimV; ++a)
                            M.add(static_cast<long>(ti) * dimV + a, sc * dimV + a, w);
                    }
                }
        }
    }
    return M;
}

SparseMat koszul_differential_tuple(const LieAlgebraData& L,
                                    const std::vector<DenseMat>& gens, long dimV, int p) {
    const int m = L.dim;
    if (p < 0 || p > m) throw std::invalid_argument("koszul_differential_tuple: bad degree");

    const auto rows_sub = subsets_of(m, p + 1);
    const auto cols_sub = subsets_of(m, p);
    const auto col_rank = rank_table(cols_sub);

    SparseMat M(static_cast<long>(rows_sub.size()) * dimV,
                static_cast<long>(cols_sub.size()) * dimV);
    const Rat norm(1, to_long(factorial(p + 1)));

    // Component of an antisymmetric chain at an arbitrary tuple: sign times
    // the component at the sorted subset, zero on repeats.
    auto locate = [&](std::vector<int> tuple) -> std::pair<long, int> {
        std::vector<int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        for (size_t u = 0; u + 1 < sorted.size(); ++u)
            if (sorted[u] == sorted[u + 1]) return {-1, 0};
        return {subset_index(col_rank, sorted), permutation_parity(tuple)};
    };

    for (size_t ti = 0; ti < rows_sub.size(); ++ti) {
        const auto& T = rows_sub[ti];
        std::vector<int> perm(p + 1);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const int sgn = permutation_parity(perm);
            std::vector<int> a(p + 1);
            for (int u = 0; u <= p; ++u) a[u] = T[perm[u]];

            // rho_{a0} v_{a1..ap}
            {
                std::vector<int> rest(a.begin() + 1, a.end());
                auto [sc, vsgn] = locate(rest);
                if (sc >= 0) {
                    Rat w = norm * sgn * vsgn;
                    const DenseMat& R = gens[a[0]];
                    for (long r = 0; r < dimV; ++r)
                        for (long b = 0; b < dimV; ++b)
                            if (R.at(r, b) != 0)
                                M.add(static_cast<long>(ti) * dimV + r, sc * dimV + b,
                                      w * R.at(r, b));
                }
            }
            // (-1)^p (p/2) Gamma_{a0 a1}^e v_{a2..ap e}
            if (p >= 1) {
                Rat base = norm * Rat(p, 2) * sgn;
                if (p % 2 != 0) base = -base;
                for (int e = 0; e < m; ++e) {
                    const Rat g = L.g(a[0], a[1], e);
                    if (g == 0) continue;
                    std::vector<int> rest(a.begin() + 2, a.end());
                    rest.push_back(e);
                    auto [sc, vsgn] = locate(rest);
                    if (sc < 0) continue;
                    const Rat w = base * g * vsgn;
                    for (long r = 0; r < dimV; ++r)
                        M.add(static_cast<long>(ti) * dimV + r, sc * dimV + r, w);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return M;
}

KoszulComplex build_koszul(const LieAlgebraData& L, const ConcreteRep& rep) {
    const std::vector<DenseMat>& gens =
        rep.generators.empty() ? rep.gminus : rep.generators;
    if (static_cast<int>(gens.size()) != L.dim)
        throw std::invalid_argument("build_koszul: generator count != algebra dimension");

    KoszulComplex K;
    K.m = L.dim;
    K.dimV = rep.dim;
    K.c = rep.c;
    for (int p = 0; p <= K.m; ++p)
        K.chain_dims.push_back(to_long(binomial(K.m, p)) * rep.dim);
    for (int p = 0; p < K.m; ++p)
        K.diff.push_back(koszul_differential(L, gens, rep.dim, p));

    // Integer grades per chain basis element, available in BGG mode where H
    // is the diagonal grading matrix. Lambda^p contributes +p.
    if (rep.provenance != "explicit" && rep.H.rows() == rep.dim) {
        std::vector<long> k_of(rep.dim);
        bool graded = true;
        for (long i = 0; i < rep.dim && graded; ++i) {
            Rat k = rep.H.at(i, i) + rep.c;
            if (k.get_den() != 1) graded = false;
            else k_of[i] = to_long(Int(k.get_num()));
            for (long j = 0; j < rep.dim && graded; ++j)
                if (i != j && rep.H.at(i, j) != 0) graded = false;
        }
        if (graded) {
            for (int p = 0; p <= K.m; ++p) {
                std::vector<long> g;
                const long nsub = to_long(binomial(K.m, p));
                g.reserve(nsub * rep.dim);
                for (long s = 0; s < nsub; ++s)
                    for (long i = 0; i < rep.dim; ++i) g.push_back(p + k_of[i]);
                K.grades.push_back(std::move(g));
            }
        }
    }
    return K;
}

Verdict check_d_squared(const KoszulComplex& K) {
    for (int p = 0; p + 1 < K.m; ++p)
        if (!(K.diff[p + 1] * K.diff[p]).is_zero())
            return {false, "d_" + std::to_string(p + 1) + " o d_" + std::to_string(p) +
                               " != 0"};
    return {};
}

Verdict check_jacobi(const LieAlgebraData& L) {
    const int m = L.dim;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (L.g(a, b, c) != -L.g(b, a, c))
                    return {false, "Gamma not antisymmetric at (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")"};
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int e = 0; e < m; ++e) {
                    Rat s = 0;
                    for (int d = 0; d < m; ++d)
                        s += L.g(a, b, d) * L.g(c, d, e) + L.g(b, c, d) * L.g(a, d, e) +
                             L.g(c, a, d) * L.g(b, d, e);
                    if (s != 0)
                        return {false, "Jacobi fails on (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) +
                                           ")"};
                }
    return {};
}

Verdict check_rep_property(const LieAlgebraData& L, const std::vector<DenseMat>& gens) {
    const int m = L.dim;
    if (static_cast<int>(gens.size()) != m)
        return {false, "generator count != algebra dimension"};
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            DenseMat lhs = commutator(gens[a], gens[b]);
            DenseMat rhs(gens[0].rows(), gens[0].cols());
            for (int c = 0; c < m; ++c)
                if (L.g(a, b, c) != 0) rhs = rhs + gens[c].scaled(L.g(a, b, c));
            if (!(lhs == rhs))
                return {false, "[rho_" + std::to_string(a) + ", rho_" + std::to_string(b) +
                                   "] != Gamma rho"};
        }
    return {};
}

Verdict check_differential_grading(const KoszulComplex& K) {
    if (K.grades.empty()) return {false, "complex carries no grading"};
    for (int p = 0; p < K.m; ++p)
        for (long r = 0; r < K.diff[p].rows(); ++r)
            for (const auto& [col, v] : K.diff[p].row(r))
                if (K.grades[p + 1][r] != K.grades[p][col])
                    return {false, "d_" + std::to_string(p) + " entry (" +
                                       std::to_string(r) + "," + std::to_string(col) +
                                       ") mixes grades"};
    return {};
}

namespace {

// rank of d_p, block by grade when a grading is present
long diff_rank(const KoszulComplex& K, int p) {
    if (p < 0 || p >= K.m) return 0;
    if (K.grades.empty()) return rank(K.diff[p].dense());
    std::map<long, std::vector<long>> rows_by, cols_by;
    for (long i = 0; i < K.chain_dims[p + 1]; ++i) rows_by[K.grades[p + 1][i]].push_back(i);
    for (long i = 0; i < K.chain_dims[p]; ++i) cols_by[K.grades[p][i]].push_back(i);
    long total = 0;
    for (const auto& [j, cols] : cols_by) {
        auto it = rows_by.find(j);
        if (it == rows_by.end()) continue;
        total += rank(K.diff[p].block(it->second, cols));
    }
    return total;
}

} // namespace

std::vector<std::pair<int, long>> cohomology_dims(const KoszulComplex& K) {
    Verdict v = check_d_squared(K);
    if (!v.ok) throw std::domain_error("cohomology_dims: " + v.detail);
    if (!K.grades.empty()) {
        Verdict g = check_differential_grading(K);
        if (!g.ok) throw std::domain_error("cohomology_dims: " + g.detail);
    }
    std::vector<long> ranks(K.m + 1, 0);
    for (int p = 0; p < K.m; ++p) ranks[p] = diff_rank(K, p);
    std::vector<std::pair<int, long>> out;
    for (int p = 0; p <= K.m; ++p) {
        const long incoming = (p == 0) ? 0 : ranks[p - 1];
        out.emplace_back(p, K.chain_dims[p] - ranks[p] - incoming);
    }
    return out;
}

std::vector<GradedCohomologyEntry> graded_cohomology_dims(const KoszulComplex& K) {
    if (K.grades.empty())
        throw std::invalid_argument("graded_cohomology_dims: complex carries no grading");
    Verdict v = check_d_squared(K);
    if (!v.ok) throw std::domain_error("graded_cohomology_dims: " + v.detail);
    Verdict g = check_differential_grading(K);
    if (!g.ok) throw std::domain_error("graded_cohomology_dims: " + g.detail);

    // rank of d_p restricted to grade j
    std::vector<std::map<long, long>> rk(K.m + 1);
    std::vector<std::map<long, std::vector<long>>> idx_by(K.m + 1);
    for (int p = 0; p <= K.m; ++p)
        for (long i = 0; i < K.chain_dims[p]; ++i) idx_by[p][K.grades[p][i]].push_back(i);
    for (int p = 0; p < K.m; ++p)
        for (const auto& [j, cols] : idx_by[p]) {
            auto it = idx_by[p + 1].find(j);
            if (it == idx_by[p + 1].end()) {
                rk[p][j] = 0;
                continue;
            }
            rk[p][j] = rank(K.diff[p].block(it->second, cols));
        }

    std::vector<GradedCohomologyEntry> out;
    for (int p = 0; p <= K.m; ++p)
        for (const auto& [j, idx] : idx_by[p]) {
            long dim = static_cast<long>(idx.size());
            if (p < K.m) {
                auto it = rk[p].find(j);
                if (it != rk[p].end()) dim -= it->second;
            }
            if (p > 0) {
                auto it = rk[p - 1].find(j);
                if (it != rk[p - 1].end()) dim -= it->second;
            }
            if (dim > 0) out.push_back({p, j, dim});
        }
    return out;
}

} // namespace bgg
