#include "qks/hl.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "qks/errors.hpp"

namespace qks {

std::string tuple_str(const PartitionTuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += "|";
        s += t[i].str();
    }
    return s;
}

TensorSchurElement TensorSchurElement::unit(int nvertices) {
    TensorSchurElement e(nvertices);
    e.add(PartitionTuple(nvertices), LaurentPoly::one());
    return e;
}

void TensorSchurElement::add(const PartitionTuple& t, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly TensorSchurElement::coefficient(const PartitionTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

TensorSchurElement TensorSchurElement::substitute(
    const std::map<VarId, LaurentPoly>& a) const {
    TensorSchurElement out(nv_);
    for (const auto& [t, c] : terms_) out.add(t, c.substitute(a));
    return out;
}

bool operator==(const TensorSchurElement& a, const TensorSchurElement& b) {
    return a.terms_ == b.terms_;
}

CurrentOperator standard_current(const Quiver& q, int vertex, int width,
                                 const Partition& mu, bool collapse_t) {
    CurrentOperator op{vertex, width, mu, {}};
    for (int b : q.out_arrows(vertex)) {
        LaurentPoly scalar = collapse_t
                                 ? LaurentPoly::variable(VarId::agg_t())
                                 : LaurentPoly::variable(VarId::arrow(q.arrows[b].id));
        op.skews.push_back({q.arrows[b].head, scalar, false});
    }
    return op;
}

CurrentOperator qt_current(const Quiver& q, int vertex, int width,
                           const Partition& mu) {
    CurrentOperator op{vertex, width, mu, {}};
    for (int b : q.out_arrows(vertex))
        op.skews.push_back({q.arrows[b].head, LaurentPoly::variable(VarId::agg_t()), false});
    for (int b : q.in_arrows(vertex))
        op.skews.push_back({q.arrows[b].tail, LaurentPoly::variable(VarId::q()), false});
    op.skews.push_back({vertex,
                        LaurentPoly::variable(VarId::q()) *
                            LaurentPoly::variable(VarId::agg_t()),
                        true});
    return op;
}

namespace {

struct SkewBranch {
    PartitionTuple tuple;           // after the skews applied so far
    long long lr = 1;               // product of skew expansion coefficients
    LaurentPoly scalar;             // product of entry scalars (with signs)
    std::vector<Partition> pairing; // factors entering the GL_width pairing
};

}  // namespace

TensorSchurElement current_apply(const CurrentOperator& op,
                                 const TensorSchurElement& f) {
    TensorSchurElement out(f.nvertices());
    const int a = op.width;

    for (const auto& [tuple, coeff] : f.terms()) {
        std::vector<SkewBranch> branches;
        branches.push_back({tuple, 1, LaurentPoly::one(), {}});
        for (const auto& entry : op.skews) {
            std::vector<SkewBranch> next;
            for (const auto& br : branches) {
                const Partition& gamma = br.tuple[entry.target];
                // beta ranges over subpartitions small enough to pair
                // nontrivially with the a-variable alphabet.
                auto betas = entry.conjugate ? subpartitions(gamma, -1, a)
                                             : subpartitions(gamma, a, -1);
                for (const auto& beta : betas) {
                    LaurentPoly sc = entry.scalar;
                    if (entry.conjugate) sc = -sc;
                    LaurentPoly scalar = br.scalar * sc.pow(beta.size());
                    Partition pair_factor = entry.conjugate ? beta.conjugate() : beta;
                    for (const auto& [nu, k] : skew_expand(beta, gamma)) {
                        SkewBranch nb = br;
                        nb.tuple[entry.target] = nu;
                        nb.lr *= k;
                        nb.scalar = scalar;
                        nb.pairing.push_back(pair_factor);
                        next.push_back(std::move(nb));
                    }
                }
            }
            branches = std::move(next);
        }
        for (const auto& br : branches) {
            std::vector<Partition> factors = br.pairing;
            factors.insert(factors.begin(), op.mu);
            for (const auto& [tau, mult] : truncated_product(factors, a)) {
                // Create the weight tau at the vertex, straightening against
                // the partition already present there.
                IntVector seq = tau.padded(a);
                const Partition& gamma_i = br.tuple[op.vertex];
                seq.insert(seq.end(), gamma_i.parts().begin(), gamma_i.parts().end());
                auto [sign, w] = straighten_weight(seq);
                if (sign == 0 || !w->is_partition()) continue;
                PartitionTuple result = br.tuple;
                result[op.vertex] = w->to_partition();
                LaurentPoly c =
                    coeff * br.scalar * LaurentPoly(Int(static_cast<long>(br.lr * mult * sign)));
                out.add(result, c);
            }
        }
    }
    return out;
}

TensorSchurElement hl_function(const CurrentData& data, bool collapse_t) {
    for (const auto& st : data.cs.steps)
        if (!st.mu.is_partition())
            throw NonPartitionWeight("current weight " + st.mu.str() +
                                     " has negative parts");
    TensorSchurElement e = TensorSchurElement::unit(data.nvertices());
    for (int k = data.cs.nsteps() - 1; k >= 0; --k) {
        const auto& st = data.cs.steps[k];
        e = current_apply(standard_current(data.cs.quiver, st.vertex, st.width,
                                           st.mu.to_partition(), collapse_t),
                          e);
    }
    return e;
}

LaurentPoly kostka_shoji_operator(const CurrentData& data,
                                  const PartitionTuple& lambda) {
    return hl_function(data).coefficient(lambda);
}

TensorSchurElement qt_current_apply(const Quiver& q, int vertex, int width,
                                    const Partition& mu,
                                    const TensorSchurElement& f) {
    return current_apply(qt_current(q, vertex, width, mu), f);
}

// ------------------------------------------------------- Kostant oracle

namespace {

// Fused enumeration of the signed permutations and the root flows. Slots are
// visited in global order: at each slot one unused entry of the vertex's
// lambda+rho is assigned (fixing the slot's target), the required outflow is
// matched against the inflow already routed in, and the outflow is
// distributed over the slot's outgoing roots. Pruning a partial assignment
// discards the whole block of the symmetric-group product that extends it.
// Inflow into a slot only comes from strictly earlier slots, so the need is
// final by the time the slot is reached.
struct KostantSearch {
    const FlagIndexing& flags;
    const std::vector<std::vector<int>>& out_roots;  // slot -> root indices
    const std::vector<Root>& roots;
    const std::vector<int>& root_arrow;              // root index -> arrow index
    const std::vector<std::vector<int>>& lam_rho;    // strictly decreasing
    const std::vector<std::vector<int>>& mu_rho;
    const Quiver& quiver;

    std::vector<unsigned> used;  // per vertex: bitmask of assigned entries
    std::vector<int> inflow;     // per slot
    std::vector<int> arrow_flow; // per arrow
    int inversions = 0;
    LaurentPoly result;

    KostantSearch(const FlagIndexing& fi, const std::vector<std::vector<int>>& o,
                  const std::vector<Root>& r, const std::vector<int>& ra,
                  const std::vector<std::vector<int>>& lr,
                  const std::vector<std::vector<int>>& mr, const Quiver& q)
        : flags(fi),
          out_roots(o),
          roots(r),
          root_arrow(ra),
          lam_rho(lr),
          mu_rho(mr),
          quiver(q),
          used(lr.size(), 0),
          inflow(fi.nslots(), 0),
          arrow_flow(q.arrows.size(), 0) {}

    void emit() {
        std::vector<std::pair<VarId, int>> exps;
        for (std::size_t b = 0; b < arrow_flow.size(); ++b)
            if (arrow_flow[b] != 0)
                exps.push_back(
                    {VarId::arrow(quiver.arrows[b].id), arrow_flow[b]});
        result += LaurentPoly::term(Monomial::from_exps(std::move(exps)),
                                    Int(inversions % 2 == 0 ? 1 : -1));
    }

    void route(int root_idx, int amount) {
        inflow[roots[root_idx].tgt_slot] += amount;
        arrow_flow[root_arrow[root_idx]] += amount;
    }

    void distribute(int slot, std::size_t e, int rest) {
        const auto& outs = out_roots[slot];
        if (e + 1 == outs.size()) {
            route(outs[e], rest);
            search(slot + 1);
            route(outs[e], -rest);
            return;
        }
        for (int x = 0; x <= rest; ++x) {
            route(outs[e], x);
            distribute(slot, e + 1, rest - x);
            route(outs[e], -x);
        }
    }

    void search(int slot) {
        if (slot == flags.nslots()) {
            emit();
            return;
        }
        const auto& sl = flags.slots[slot];
        int n = flags.nu[sl.vertex];
        int base = mu_rho[sl.vertex][sl.vpos] - inflow[slot];
        const auto& outs = out_roots[slot];
        for (int j = 0; j < n; ++j) {
            if (used[sl.vertex] & (1u << j)) continue;
            // entries decrease with j, so once the need goes negative every
            // later choice fails as well
            int need = lam_rho[sl.vertex][j] - base;
            if (need < 0) break;
            if (outs.empty() && need != 0) continue;
            // new inversions: already-assigned entries with larger index
            int added = std::popcount(used[sl.vertex] >> (j + 1));
            used[sl.vertex] |= 1u << j;
            inversions += added;
            if (outs.empty())
                search(slot + 1);
            else
                distribute(slot, 0, need);
            used[sl.vertex] ^= 1u << j;
            inversions -= added;
        }
    }
};

}  // namespace

LaurentPoly kostant_coefficient(const CurrentData& data,
                                const VertexWeights& lambda) {
    const FlagIndexing& fi = data.flags;
    int nv = data.nvertices();
    VertexWeights mu = concat_weights(data.cs);

    long long lam_total = 0;
    for (int i = 0; i < nv; ++i) {
        if (static_cast<int>(lambda[i].size()) != fi.nu[i])
            throw DimensionMismatch("lambda^(" + data.cs.quiver.vertices[i] +
                                    ") has length " +
                                    std::to_string(lambda[i].size()) + ", expected " +
                                    std::to_string(fi.nu[i]));
        if (!weakly_decreasing(lambda[i]))
            throw DimensionMismatch("lambda component is not dominant");
        if (fi.nu[i] > 31)
            throw DimensionMismatch("vertex dimension beyond the supported range");
        lam_total += std::accumulate(lambda[i].begin(), lambda[i].end(), 0LL);
    }
    if (lam_total != data.cs.total_weight_size()) return LaurentPoly::zero();

    // lambda^(i) + rho and mu^(i) + rho per vertex.
    std::vector<std::vector<int>> lam_rho(nv), mu_rho(nv);
    for (int i = 0; i < nv; ++i) {
        int n = fi.nu[i];
        lam_rho[i].resize(n);
        mu_rho[i].resize(n);
        for (int r = 0; r < n; ++r) {
            lam_rho[i][r] = lambda[i][r] + n - 1 - r;
            mu_rho[i][r] = mu[i][r] + n - 1 - r;
        }
    }

    std::vector<std::vector<int>> out_roots(fi.nslots());
    std::vector<int> root_arrow;
    for (std::size_t ri = 0; ri < data.roots.roots.size(); ++ri) {
        out_roots[data.roots.roots[ri].src_slot].push_back(static_cast<int>(ri));
        root_arrow.push_back(data.roots.roots[ri].arrow);
    }

    KostantSearch ks(fi, out_roots, data.roots.roots, root_arrow, lam_rho, mu_rho,
                     data.cs.quiver);
    ks.search(0);
    return ks.result;
}

LaurentPoly kostant_coefficient(const CurrentData& data, const PartitionTuple& lambda) {
    VertexWeights w(data.nvertices());
    for (int i = 0; i < data.nvertices(); ++i) {
        if (lambda[i].length() > data.flags.nu[i]) return LaurentPoly::zero();
        w[i] = lambda[i].padded(data.flags.nu[i]);
    }
    return kostant_coefficient(data, w);
}

// ------------------------------------------------- cyclic factorization

std::pair<Monomial, LaurentPoly> reduced_polynomial(const Quiver& q,
                                                    const LaurentPoly& K) {
    std::vector<int> order = cycle_arrow_order(q);  // throws when not a cycle
    int r = static_cast<int>(order.size());
    std::vector<VarId> cycle_vars;
    for (int b : order) cycle_vars.push_back(VarId::arrow(q.arrows[b].id));

    if (K.is_zero()) return {Monomial(), LaurentPoly::zero()};

    std::optional<std::vector<int>> prefactor_exps;
    LaurentPoly reduced;
    for (const auto& [m, c] : K.terms()) {
        for (const auto& [v, k] : m.exps())
            if (std::find(cycle_vars.begin(), cycle_vars.end(), v) == cycle_vars.end())
                throw FactorizationViolation("unexpected variable " + v.name +
                                             " in " + m.str());
        std::vector<int> e(r, 0);
        for (int j = 0; j < r; ++j) e[j] = m.exponent(cycle_vars[j]);
        int c_exp = e[r - 1];
        std::vector<int> pf(r - 1);
        for (int j = 0; j + 1 < r; ++j) pf[j] = e[j] - c_exp;
        if (!prefactor_exps)
            prefactor_exps = pf;
        else if (*prefactor_exps != pf)
            throw FactorizationViolation(
                "support exponents " + m.str() +
                " leave the cycle coset of the first term");
        reduced += LaurentPoly::term(Monomial::var(VarId::agg_t(), c_exp), c);
    }
    std::vector<std::pair<VarId, int>> pf_exps;
    for (int j = 0; j + 1 < r; ++j)
        if ((*prefactor_exps)[j] != 0)
            pf_exps.push_back({cycle_vars[j], (*prefactor_exps)[j]});
    return {Monomial::from_exps(std::move(pf_exps)), reduced};
}

bool is_single_monomial(const LaurentPoly& K) {
    return K.term_count() <= 1;
}

bool is_nonneg_monomial(const LaurentPoly& K) {
    if (K.is_zero()) return true;
    return K.term_count() == 1 && K.nonnegative();
}

std::map<VarId, LaurentPoly> collapse_substitution(const Quiver& q) {
    std::map<VarId, LaurentPoly> m;
    QuiverClass cls = classify_quiver(q);
    if (cls.cycle_r >= 1) {
        std::vector<int> order = cycle_arrow_order(q);
        m[VarId::arrow(q.arrows[order[0]].id)] = LaurentPoly::variable(VarId::agg_t());
        for (std::size_t j = 1; j < order.size(); ++j)
            m[VarId::arrow(q.arrows[order[j]].id)] = LaurentPoly::one();
    } else {
        for (const auto& a : q.arrows)
            m[VarId::arrow(a.id)] = LaurentPoly::variable(VarId::agg_t());
    }
    return m;
}

bool support_in_cycle_coset(const QuiverClass& cls, const Quiver& q,
                            const LaurentPoly& K) {
    if (K.term_count() <= 1) return true;
    int na = static_cast<int>(q.arrows.size());
    auto exps_of = [&](const Monomial& m) {
        std::vector<int> e(na, 0);
        for (int b = 0; b < na; ++b) e[b] = m.exponent(VarId::arrow(q.arrows[b].id));
        return e;
    };
    auto it = K.terms().begin();
    std::vector<int> base = exps_of(it->first);
    for (++it; it != K.terms().end(); ++it) {
        std::vector<int> diff = exps_of(it->first);
        for (int b = 0; b < na; ++b) diff[b] -= base[b];
        if (!in_integer_span(cls.cycle_basis, diff)) return false;
    }
    return true;
}

std::vector<PartitionTuple> weight_table(const std::vector<int>& nu, int n) {
    std::vector<PartitionTuple> out;
    int nv = static_cast<int>(nu.size());
    PartitionTuple cur(nv);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == nv) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int s = 0; s <= rest; ++s)
            for (const auto& p : partitions_of(s, nu[i])) {
                cur[i] = p;
                rec(i + 1, rest - s);
            }
        cur[i] = Partition();
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qks
