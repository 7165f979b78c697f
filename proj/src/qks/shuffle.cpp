#include "qks/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qks/errors.hpp"
#include "qks/schur.hpp"

namespace qks {

std::vector<int> MultiVarPoly::dims() const {
    std::vector<int> d;
    for (const auto& g : groups) d.push_back(static_cast<int>(g.size()));
    return d;
}

LaurentPoly antisymmetrize_poly(const LaurentPoly& f,
                                const std::vector<std::vector<VarId>>& groups) {
    LaurentPoly acc = f;
    for (const auto& group : groups) {
        int n = static_cast<int>(group.size());
        if (n <= 1) continue;
        LaurentPoly next;
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 0);
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (w[i] > w[j]) ++inv;
            std::map<VarId, VarId> names;
            for (int i = 0; i < n; ++i) names[group[i]] = group[w[i]];
            LaurentPoly img = acc.rename(names);
            if (inv % 2 == 0)
                next += img;
            else
                next -= img;
        } while (std::next_permutation(w.begin(), w.end()));
        acc = std::move(next);
    }
    return acc;
}

MultiVarPoly antisymmetrize(const MultiVarPoly& f) {
    return {antisymmetrize_poly(f.p, f.groups), f.groups};
}

LaurentPoly demazure_poly(const LaurentPoly& f,
                          const std::vector<std::vector<VarId>>& groups) {
    // x^rho over every group
    Monomial rho;
    for (const auto& group : groups) {
        int n = static_cast<int>(group.size());
        for (int j = 0; j < n; ++j)
            rho = rho.times(Monomial::var(group[j], n - 1 - j));
    }
    LaurentPoly num = antisymmetrize_poly(f.times_monomial(rho), groups);
    for (const auto& group : groups)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                num = num.divide_linear_exact(group[i], group[j]);
    return num;
}

MultiVarPoly demazure(const MultiVarPoly& f) {
    return {demazure_poly(f.p, f.groups), f.groups};
}

namespace {

void check_compatible(const MultiVarPoly& f, const MultiVarPoly& g, const Quiver& q) {
    if (f.groups.size() != g.groups.size() ||
        static_cast<int>(f.groups.size()) != q.nvertices())
        throw GroupMismatch("operands grouped over different quivers");
    std::set<VarId> seen;
    for (const auto& gs : {f.groups, g.groups})
        for (const auto& group : gs)
            for (const auto& v : group)
                if (!seen.insert(v).second)
                    throw GroupMismatch("variable " + v.name + " used in both operands");
}

std::vector<std::vector<VarId>> merge_groups(const MultiVarPoly& f,
                                             const MultiVarPoly& g) {
    std::vector<std::vector<VarId>> m = f.groups;
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i].insert(m[i].end(), g.groups[i].begin(), g.groups[i].end());
    return m;
}

// 1 - c * num/den
LaurentPoly linear_factor(const LaurentPoly& c, const VarId& num, const VarId& den) {
    return LaurentPoly::one() -
           c * LaurentPoly::variable(num) * LaurentPoly::variable(den, -1);
}

// sum_{j<=cap} (c * num/den)^j
LaurentPoly geometric_factor(const LaurentPoly& c, const VarId& num, const VarId& den,
                             int cap) {
    LaurentPoly z = c * LaurentPoly::variable(num) * LaurentPoly::variable(den, -1);
    LaurentPoly acc = LaurentPoly::one(), p = LaurentPoly::one();
    for (int j = 1; j <= cap; ++j) {
        p *= z;
        acc += p;
    }
    return acc;
}

}  // namespace

MultiVarPoly shuffle_star(const MultiVarPoly& f, const MultiVarPoly& g,
                          const Quiver& q) {
    check_compatible(f, g, q);
    LaurentPoly prod = f.p * g.p;
    for (const auto& a : q.arrows) {
        LaurentPoly tb = LaurentPoly::variable(VarId::arrow(a.id));
        for (const auto& v : g.groups[a.tail])
            for (const auto& u : f.groups[a.head]) prod *= linear_factor(tb, v, u);
    }
    std::vector<std::vector<VarId>> groups = merge_groups(f, g);
    return {demazure_poly(prod, groups), groups};
}

MultiVarPoly star_series(const MultiVarPoly& f, const MultiVarPoly& g,
                         const Quiver& q, int cap) {
    check_compatible(f, g, q);
    LaurentPoly prod = (f.p * g.p).truncate_parameter_degree(cap);
    for (const auto& a : q.arrows) {
        LaurentPoly tb = LaurentPoly::variable(VarId::arrow(a.id));
        for (const auto& u : f.groups[a.tail])
            for (const auto& v : g.groups[a.head]) {
                prod *= geometric_factor(tb, u, v, cap);
                prod = prod.truncate_parameter_degree(cap);
            }
    }
    std::vector<std::vector<VarId>> groups = merge_groups(f, g);
    return {demazure_poly(prod, groups).truncate_parameter_degree(cap), groups};
}

MultiVarPoly qt_star_series(const MultiVarPoly& f, const MultiVarPoly& g,
                            const Quiver& q, int cap) {
    check_compatible(f, g, q);
    LaurentPoly qv = LaurentPoly::variable(VarId::q());
    LaurentPoly tv = LaurentPoly::variable(VarId::agg_t());
    LaurentPoly prod = (f.p * g.p).truncate_parameter_degree(cap);
    for (int i = 0; i < q.nvertices(); ++i)
        for (const auto& u : f.groups[i])
            for (const auto& v : g.groups[i]) {
                prod *= linear_factor(qv * tv, u, v);
                prod = prod.truncate_parameter_degree(cap);
            }
    for (const auto& a : q.arrows) {
        for (const auto& u : f.groups[a.tail])
            for (const auto& v : g.groups[a.head]) {
                prod *= geometric_factor(tv, u, v, cap);
                prod = prod.truncate_parameter_degree(cap);
            }
        // the opposite arrow runs head -> tail and carries q
        for (const auto& u : f.groups[a.head])
            for (const auto& v : g.groups[a.tail]) {
                prod *= geometric_factor(qv, u, v, cap);
                prod = prod.truncate_parameter_degree(cap);
            }
    }
    std::vector<std::vector<VarId>> groups = merge_groups(f, g);
    return {demazure_poly(prod, groups).truncate_parameter_degree(cap), groups};
}

namespace {

std::vector<std::vector<VarId>> flag_groups(const CurrentData& data, int step_offset) {
    std::vector<std::vector<VarId>> groups(data.nvertices());
    for (int i = 0; i < data.nvertices(); ++i)
        for (int s : data.flags.vertex_slots[i]) {
            const auto& slot = data.flags.slots[s];
            groups[i].push_back(VarId::u(slot.step + 1 + step_offset, slot.pos + 1));
        }
    return groups;
}

Monomial weight_monomial(const CurrentData& data, int step_offset) {
    std::vector<std::pair<VarId, int>> exps;
    for (int k = 0; k < data.cs.nsteps(); ++k) {
        const auto& st = data.cs.steps[k];
        for (int p = 0; p < st.width; ++p)
            if (st.mu.parts[p] != 0)
                exps.push_back({VarId::u(k + 1 + step_offset, p + 1), st.mu.parts[p]});
    }
    return Monomial::from_exps(std::move(exps));
}

}  // namespace

MultiVarPoly step_schur(const CurrentData& data, int k, int step_offset) {
    const auto& st = data.cs.steps[k];
    std::vector<VarId> vars;
    for (int p = 0; p < st.width; ++p)
        vars.push_back(VarId::u(k + 1 + step_offset, p + 1));
    std::vector<std::vector<VarId>> groups(data.nvertices());
    groups[st.vertex] = vars;
    return {schur_poly(st.mu, vars), groups};
}

MultiVarPoly psi_class(const CurrentData& data, int step_offset) {
    LaurentPoly prod =
        LaurentPoly::term(weight_monomial(data, step_offset), Int(1));
    int m = data.cs.nsteps();
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < k; ++l)
            for (const auto& a : data.cs.quiver.arrows) {
                if (a.tail != data.cs.steps[k].vertex ||
                    a.head != data.cs.steps[l].vertex)
                    continue;
                LaurentPoly tb = LaurentPoly::variable(VarId::arrow(a.id));
                for (int p = 0; p < data.cs.steps[k].width; ++p)
                    for (int qq = 0; qq < data.cs.steps[l].width; ++qq)
                        prod *= linear_factor(
                            tb, VarId::u(k + 1 + step_offset, p + 1),
                            VarId::u(l + 1 + step_offset, qq + 1));
            }
    auto groups = flag_groups(data, step_offset);
    return {demazure_poly(prod, groups), groups};
}

LaurentPoly hl_r_polynomial(const DominantWeight& mu, const VarId& tvar,
                            const std::vector<VarId>& uvars) {
    int n = static_cast<int>(uvars.size());
    if (mu.rank() != n) throw RankViolation("weight rank differs from variable count");
    std::vector<std::pair<VarId, int>> exps;
    for (int i = 0; i < n; ++i)
        if (mu.parts[i] != 0) exps.push_back({uvars[i], mu.parts[i]});
    LaurentPoly prod = LaurentPoly::term(Monomial::from_exps(std::move(exps)), Int(1));
    LaurentPoly t = LaurentPoly::variable(tvar);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= LaurentPoly::variable(uvars[i]) - t * LaurentPoly::variable(uvars[j]);
    LaurentPoly num = antisymmetrize_poly(prod, {uvars});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num = num.divide_linear_exact(uvars[i], uvars[j]);
    return num;
}

MultiVarPoly chi_truncated(const CurrentData& data, int cap) {
    LaurentPoly prod = LaurentPoly::term(weight_monomial(data, 0), Int(1));
    for (const auto& rt : data.roots.roots) {
        LaurentPoly tb =
            LaurentPoly::variable(VarId::arrow(data.cs.quiver.arrows[rt.arrow].id));
        prod *= geometric_factor(tb, VarId::u(rt.src_step + 1, rt.src_pos + 1),
                                 VarId::u(rt.tgt_step + 1, rt.tgt_pos + 1), cap);
        prod = prod.truncate_parameter_degree(cap);
    }
    auto groups = flag_groups(data, 0);
    return {demazure_poly(prod, groups).truncate_parameter_degree(cap), groups};
}

MultiVarPoly chi_truncated_star(const CurrentData& data, int cap) {
    if (data.cs.nsteps() == 0) {
        return {LaurentPoly::one(),
                std::vector<std::vector<VarId>>(data.nvertices())};
    }
    MultiVarPoly acc = step_schur(data, 0);
    acc.p = acc.p.truncate_parameter_degree(cap);
    for (int k = 1; k < data.cs.nsteps(); ++k)
        acc = star_series(acc, step_schur(data, k), data.cs.quiver, cap);
    return acc;
}

LaurentPoly schur_coefficient(const MultiVarPoly& f,
                              const std::vector<DominantWeight>& lambda) {
    if (lambda.size() != f.groups.size())
        throw GroupMismatch("lambda tuple length differs from group count");
    LaurentPoly g = f.p;
    std::vector<std::pair<VarId, int>> texps;
    for (std::size_t i = 0; i < f.groups.size(); ++i) {
        const auto& group = f.groups[i];
        int n = static_cast<int>(group.size());
        if (lambda[i].rank() != n)
            throw RankViolation("lambda^(i) rank differs from group size");
        for (int r = 0; r < n; ++r)
            for (int s = r + 1; s < n; ++s)
                g *= LaurentPoly::variable(group[r]) - LaurentPoly::variable(group[s]);
        for (int r = 0; r < n; ++r) {
            int e = lambda[i].parts[r] + n - 1 - r;
            if (e != 0) texps.push_back({group[r], e});
        }
    }
    Monomial target = Monomial::from_exps(std::move(texps));
    LaurentPoly out;
    for (const auto& [m, c] : g.terms()) {
        std::vector<std::pair<VarId, int>> param, alpha;
        for (const auto& [v, k] : m.exps())
            (v.is_parameter() ? param : alpha).push_back({v, k});
        if (Monomial::from_exps(std::move(alpha)) == target)
            out += LaurentPoly::term(Monomial::from_exps(std::move(param)), c);
    }
    return out;
}

LaurentPoly schur_coefficient(const MultiVarPoly& f,
                              const std::vector<Partition>& lambda) {
    std::vector<DominantWeight> w;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        int n = static_cast<int>(f.groups[i].size());
        if (lambda[i].length() > n) return LaurentPoly::zero();
        w.push_back(DominantWeight(lambda[i].padded(n)));
    }
    return schur_coefficient(f, w);
}

}  // namespace qks
