#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/quiver.hpp"
#include "qks/schur.hpp"

namespace qks {

// One partition per vertex, in canonical vertex order.
using PartitionTuple = std::vector<Partition>;

std::string tuple_str(const PartitionTuple& t);  // "(6,3,3,1,1)|()"

// An element of the tensor Schur module: a finite linear combination of
// vertex tuples of partitions with LaurentPoly coefficients.
class TensorSchurElement {
public:
    explicit TensorSchurElement(int nvertices = 0) : nv_(nvertices) {}
    static TensorSchurElement unit(int nvertices);

    int nvertices() const { return nv_; }
    const std::map<PartitionTuple, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const PartitionTuple& t, const LaurentPoly& c);
    LaurentPoly coefficient(const PartitionTuple& t) const;
    TensorSchurElement substitute(const std::map<VarId, LaurentPoly>& a) const;

    friend bool operator==(const TensorSchurElement&, const TensorSchurElement&);

private:
    int nv_;
    std::map<PartitionTuple, LaurentPoly> terms_;
};

// One skewing factor of a current. A plain entry encodes the adjoint of a
// Cauchy kernel with scalar c at the target vertex (expansion over partitions
// beta with pairing factor beta and scalar c^|beta|); a conjugate-sign entry
// encodes the kernel with a global minus sign (pairing factor beta', scalar
// (-c)^|beta|).
struct SkewEntry {
    int target = 0;       // vertex index
    LaurentPoly scalar;   // a monomial (t_b, t, q, or q*t)
    bool conjugate = false;
};

// A creation current: creates a GL_width weight mu at `vertex` after applying
// the listed skews.
struct CurrentOperator {
    int vertex = 0;
    int width = 1;
    Partition mu;  // padded to `width` when creating
    std::vector<SkewEntry> skews;
};

// The standard current: one plain skew entry (head(b), t_b) per arrow b out of
// the vertex. With collapse_t set, every arrow variable is replaced by the
// single parameter t.
CurrentOperator standard_current(const Quiver& q, int vertex, int width,
                                 const Partition& mu, bool collapse_t = false);

// The (q,t)-current of the doubled quiver (arrow variables collapsed to t,
// opposite arrows carrying q, and a conjugate-sign self-correction q*t at the
// creation vertex).
CurrentOperator qt_current(const Quiver& q, int vertex, int width,
                           const Partition& mu);

// Applies a current to a finite element. Throws NonPartitionWeight when the
// operator's weight is not a partition.
TensorSchurElement current_apply(const CurrentOperator& op,
                                 const TensorSchurElement& f);

// H_{mu(.)} = H_{mu(1)} ... H_{mu(m)} . 1, the last step applied first.
TensorSchurElement hl_function(const CurrentData& data, bool collapse_t = false);

// Coefficient of s_{lambda.} in hl_function.
LaurentPoly kostka_shoji_operator(const CurrentData& data, const PartitionTuple& lambda);

// The independent Kostant-partition oracle for the series coefficient at a
// general per-vertex dominant weight (negative parts allowed). Signed sum
// over the product of vertex symmetric groups of the weighted count of
// non-negative root flows hitting w(lambda+rho)-(mu+rho).
LaurentPoly kostant_coefficient(const CurrentData& data, const VertexWeights& lambda);

// Same, with the tuple padded to the dimension vector.
LaurentPoly kostant_coefficient(const CurrentData& data, const PartitionTuple& lambda);

// Cyclic-quiver factorization K = (prod_{i<r-1} t_{i,i+1}^{a_i}) K_red(t).
// Throws FactorizationViolation (with the offending exponent vectors) when
// the support does not lie in a single cycle coset.
std::pair<Monomial, LaurentPoly> reduced_polynomial(const Quiver& q,
                                                    const LaurentPoly& K);

TensorSchurElement qt_current_apply(const Quiver& q, int vertex, int width,
                                    const Partition& mu,
                                    const TensorSchurElement& f);

// ----- structure-law checks (diagnostics returned, not asserted) -----

// Acyclic support law: at most one monomial.
bool is_single_monomial(const LaurentPoly& K);

// Acyclic law under dominant weights: a single monomial with non-negative
// coefficient. Without dominance the coefficient can be negative (pure
// straightening signs at a sink vertex already produce -1).
bool is_nonneg_monomial(const LaurentPoly& K);

// All support exponent vectors lie in one coset of the cycle lattice.
bool support_in_cycle_coset(const QuiverClass& cls, const Quiver& q,
                            const LaurentPoly& K);

// The collapsing substitution to the single parameter t. On a directed-cycle
// quiver the cycle product maps to t (the first cycle arrow goes to t, the
// others to 1), so reduced polynomials read off directly; on any other quiver
// every arrow variable maps to t.
std::map<VarId, LaurentPoly> collapse_substitution(const Quiver& q);

// All lambda-tuples of total size n with lambda^(i) having at most nu^(i)
// rows, in canonical (lexicographic per vertex) order.
std::vector<PartitionTuple> weight_table(const std::vector<int>& nu, int n);

}  // namespace qks
