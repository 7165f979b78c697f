#pragma once

#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/quiver.hpp"

namespace qks {

// A Laurent polynomial together with its per-vertex alphabet grouping (the
// grouping is part of the value; symmetrizers act per group).
struct MultiVarPoly {
    LaurentPoly p;
    std::vector<std::vector<VarId>> groups;  // one per vertex, canonical order

    std::vector<int> dims() const;
    friend bool operator==(const MultiVarPoly&, const MultiVarPoly&) = default;
};

// Signed sum over the product of symmetric groups permuting each group.
LaurentPoly antisymmetrize_poly(const LaurentPoly& f,
                                const std::vector<std::vector<VarId>>& groups);
MultiVarPoly antisymmetrize(const MultiVarPoly& f);

// D(f) = J(x^rho)^{-1} J(x^rho f) per group, by exact Vandermonde division.
LaurentPoly demazure_poly(const LaurentPoly& f,
                          const std::vector<std::vector<VarId>>& groups);
MultiVarPoly demazure(const MultiVarPoly& f);

// The polynomial-kernel shuffle product: D(f g prod_b (1 - t_b v^{(tb)}/u^{(hb)}))
// with v from g and u from f. Group variable sets must be disjoint.
MultiVarPoly shuffle_star(const MultiVarPoly& f, const MultiVarPoly& g,
                          const Quiver& q);

// The series-kernel shuffle product, truncated to total parameter degree
// <= cap: D(f g prod_b geom(t_b u^{(tb)}/v^{(hb)})) with u from f, v from g.
MultiVarPoly star_series(const MultiVarPoly& f, const MultiVarPoly& g,
                         const Quiver& q, int cap);

// The (q,t) shuffle product of the doubled quiver, truncated to total
// (q,t)-degree <= cap.
MultiVarPoly qt_star_series(const MultiVarPoly& f, const MultiVarPoly& g,
                            const Quiver& q, int cap);

// s_{mu(k)} in the step's block of auxiliary variables, as an element
// supported at the step's vertex. step_offset shifts the variable naming.
MultiVarPoly step_schur(const CurrentData& data, int k, int step_offset = 0);

// The pushforward class: D(x^{mu(.)} prod (1 - t_b u(k)_p / u(l)_q)) over the
// cross-step pairs with tail-step k strictly later than head-step l. A genuine
// Laurent polynomial. step_offset shifts variable naming (used to align the
// pieces of a split sequence with the whole).
MultiVarPoly psi_class(const CurrentData& data, int step_offset = 0);

// Hall-Littlewood R-polynomial: sum_w w(u^mu prod_{i<j} (u_i - t u_j)/(u_i - u_j)),
// evaluated exactly by antisymmetrization and Vandermonde division.
LaurentPoly hl_r_polynomial(const DominantWeight& mu, const VarId& tvar,
                            const std::vector<VarId>& uvars);

// The quiver Hall-Littlewood series truncated to total arrow degree <= cap,
// computed directly from the symmetrizer formula.
MultiVarPoly chi_truncated(const CurrentData& data, int cap);

// The same series computed as an iterated truncated series-shuffle product of
// the step Schur polynomials; must agree with chi_truncated.
MultiVarPoly chi_truncated_star(const CurrentData& data, int cap);

// Coefficient of the product of Schur polynomials s_{lambda^(i)}(group_i) in
// f, extracted via the alternant pairing; a LaurentPoly in the parameters.
// lambda entries are padded to the group sizes and may have negative parts.
LaurentPoly schur_coefficient(const MultiVarPoly& f,
                              const std::vector<DominantWeight>& lambda);
LaurentPoly schur_coefficient(const MultiVarPoly& f,
                              const std::vector<Partition>& lambda);

}  // namespace qks
