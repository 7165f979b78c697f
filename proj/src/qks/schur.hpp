#pragma once

#include <map>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"

namespace qks {

// A finite linear combination of Schur functions with LaurentPoly
// coefficients. With a row bound set, terms with longer partitions are
// dropped on insertion (GL_n truncation); by default everything is kept.
class SchurVector {
public:
    SchurVector() = default;
    explicit SchurVector(int row_bound) : row_bound_(row_bound) {}
    static SchurVector single(const Partition& p, const LaurentPoly& c = LaurentPoly::one());

    const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Partition& p, const LaurentPoly& c);
    LaurentPoly coefficient(const Partition& p) const;

    friend bool operator==(const SchurVector&, const SchurVector&);

private:
    std::map<Partition, LaurentPoly> terms_;
    int row_bound_ = -1;  // -1 = unbounded
};

// Littlewood-Richardson coefficient c^{outer}_{inner, content}, computed by
// direct enumeration of LR skew tableaux (lattice-word condition) and
// memoized.
long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content);

// All partitions nu with c^{nu}_{lambda, mu} possibly nonzero, paired with the
// coefficient; only nonzero entries are returned.
std::vector<std::pair<Partition, long long>> lr_expand(const Partition& lambda,
                                                       const Partition& mu,
                                                       int row_bound = -1);

SchurVector lr_product(const SchurVector& f, const SchurVector& g);

// s_beta^perp f: the adjoint of multiplication by s_beta.
SchurVector skew_by(const Partition& beta, const SchurVector& f);
std::vector<std::pair<Partition, long long>> skew_expand(const Partition& beta,
                                                         const Partition& lambda);

// The multi-Bernstein creation operator B_tau with straightening; entries of
// tau may be any integers. Straightened weights with negative parts vanish.
SchurVector bernstein_create(const IntVector& tau, const SchurVector& f);

// Iterated GL_a tensor product of polynomial characters: expansion of
// prod s_{factor} with partitions of more than `a` rows dropped at every
// stage. Throws RankViolation if a factor itself has more than `a` rows.
std::map<Partition, long long> truncated_product(const std::vector<Partition>& factors,
                                                 int a);

// Multiplicity of s_tau in the iterated product above.
long long tensor_multiplicity(const std::vector<Partition>& factors,
                              const Partition& tau, int a);

// s_lambda(x_1..x_n) as the exact ratio of alternants; lambda may have
// negative parts (Laurent). Throws DivisionMismatch wrapped as InexactDivision
// if the division is not exact (internal bug sentinel).
LaurentPoly schur_poly(const DominantWeight& lambda, const std::vector<VarId>& vars);

// Antisymmetrized monomial sum J(x^beta) = sum_w sign(w) x^{w(beta)}.
LaurentPoly alternant(const std::vector<int>& beta, const std::vector<VarId>& vars);

// All subpartitions of lambda (optionally with bounded length / first part).
std::vector<Partition> subpartitions(const Partition& lambda, int max_length = -1,
                                     int max_first = -1);

// All partitions of n with at most max_rows rows (max_rows < 0: unbounded).
std::vector<Partition> partitions_of(int n, int max_rows = -1);

}  // namespace qks
