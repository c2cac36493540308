#pragma once

#include "bgg/kostant.hpp"
#include "bgg/matrix.hpp"
#include "bgg/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace bgg {

// Explicit representation over exact rationals. In BGG mode (built by
// build_irrep) `H` is the grading element and `gminus` the actions of the
// g_- basis e_alpha = E_{alpha+1,1}. In general-Lie-algebra mode
// `generators` holds one matrix per basis element of the algebra.
struct ConcreteRep {
    int n = 0;                       // sl(n+1) rank parameter (BGG mode)
    std::vector<int> labels;         // Dynkin labels (BGG mode)
    std::string provenance;          // "young-direct" | "young-dual" | "explicit"
    long dim = 0;
    Rat c;                           // c_value of the labels (BGG mode)
    long N = 0;                      // filtration length (BGG mode)
    DenseMat H;
    std::vector<DenseMat> gminus;
    std::vector<DenseMat> generators;

    static ConcreteRep explicit_rep(long dim, std::vector<DenseMat> generators);
    static ConcreteRep trivial_rep(long algebra_dim);
};

// Structure constants [e_a, e_b] = sum_c Gamma[a][b][c] e_c.
struct LieAlgebraData {
    int dim = 0;
    std::vector<std::vector<std::vector<Rat>>> gamma;

    explicit LieAlgebraData(int m);
    const Rat& g(int a, int b, int c) const { return gamma[a][b][c]; }
    // Sets Gamma[a][b][c] = v and Gamma[b][a][c] = -v.
    void set_bracket(int a, int b, int c, const Rat& v);

    static LieAlgebraData abelian(int m);
    static LieAlgebraData heisenberg();
    static LieAlgebraData sl2();
};

struct Verdict {
    bool ok = true;
    std::string detail;
};

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Builds the irreducible sl(n+1)-module with lowest weight -[a_1..a_n] by
// applying the Young symmetrizer of the highest-weight partition to a tensor
// power of the standard module and row-reducing an exact basis of the image.
// When the dual labels give a smaller tensor degree the dual module is built
// instead and transposed. Throws TooLargeError past the degree bound.
ConcreteRep build_irrep(const DynkinLabels& d, int degree_bound = 8);

// k -> dim V_k computed as kernel dimensions of H - (-c + k) Id.
// Throws if the eigenvalues do not exhaust {-c + k : 0 <= k <= N}.
std::map<long, Int> grade_dimensions(const ConcreteRep& rep);

// [H, rho_a] = -rho_a for every a, and rho_a(V_0) = 0.
Verdict check_grade_lowering(const ConcreteRep& rep);

// The Koszul / Chevalley-Eilenberg differential
//   v |-> rho_[a v_bc..d] + (-1)^p (p/2) Gamma_[ab^e v_c..d]e
// on Lambda^p g^* (x) V, with normalized (averaging) antisymmetrization.
// Matrix columns are indexed by (p-subset, V-basis), rows by (p+1)-subsets.
SparseMat koszul_differential(const LieAlgebraData& L,
                              const std::vector<DenseMat>& gens, long dimV, int p);

// Reference implementation of the same matrix by literal summation over all
// (p+1)! index permutations. Must agree with koszul_differential entry for
// entry; kept as an independent cross-check.
SparseMat koszul_differential_tuple(const LieAlgebraData& L,
                                    const std::vector<DenseMat>& gens, long dimV,
                                    int p);

struct KoszulComplex {
    int m = 0;     // dim of the Lie algebra
    long dimV = 0;
    std::vector<long> chain_dims;          // p = 0..m
    std::vector<SparseMat> diff;           // diff[p] : C^p -> C^{p+1}, p = 0..m-1
    // Integer H-grade j of each chain basis element (eigenvalue -c + j),
    // present only for graded (BGG-mode) complexes.
    std::vector<std::vector<long>> grades; // per p
    Rat c;
};

KoszulComplex build_koszul(const LieAlgebraData& L, const ConcreteRep& rep);

// dim H^p = dim C^p - rank d_p - rank d_{p-1}; requires (and checks) d^2 = 0.
std::vector<std::pair<int, long>> cohomology_dims(const KoszulComplex& K);

struct GradedCohomologyEntry {
    int p = 0;
    long grade = 0; // j, for eigenvalue -c + j
    long dim = 0;
};

// Same, split by H-eigenvalue (H commutes with the differential).
std::vector<GradedCohomologyEntry> graded_cohomology_dims(const KoszulComplex& K);

Verdict check_d_squared(const KoszulComplex& K);
Verdict check_jacobi(const LieAlgebraData& L);
Verdict check_rep_property(const LieAlgebraData& L, const std::vector<DenseMat>& gens);

// Every nonzero entry of every differential must connect equal grades.
Verdict check_differential_grading(const KoszulComplex& K);

} // namespace bgg
