#include "qks/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

#include "qks/errors.hpp"

namespace qks {

SchurVector SchurVector::single(const Partition& p, const LaurentPoly& c) {
    SchurVector v;
    v.add(p, c);
    return v;
}

void SchurVector::add(const Partition& p, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (row_bound_ >= 0 && p.length() > row_bound_) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly SchurVector::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.terms_ == b.terms_;
}

namespace {

// Straight LR count: fillings of outer/inner with content, rows weakly
// increasing, columns strictly increasing, reverse reading word a lattice
// word. Cells are visited top row to bottom, right to left, so the ballot
// prefix condition can be maintained incrementally.
long long lr_count(const Partition& outer, const Partition& inner,
                   const Partition& content) {
    int nrows = outer.length();
    int nvals = content.length();
    if (inner.length() > nrows) return 0;
    if (outer.size() != inner.size() + content.size()) return 0;
    if (!outer.contains(inner)) return 0;
    if (content.empty()) return 1;

    // fill[r][c] for cells inner_r <= c < outer_r
    std::vector<std::vector<int>> fill(nrows);
    for (int r = 0; r < nrows; ++r) fill[r].assign(outer.row(r), 0);
    std::vector<int> placed(nvals + 1, 0);
    std::vector<int> remaining(nvals + 1, 0);
    for (int v = 1; v <= nvals; ++v) remaining[v] = content.row(v - 1);

    long long count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == nrows) {
            ++count;
            return;
        }
        if (c < inner.row(r)) {
            rec(r + 1, outer.row(r + 1) - 1);
            return;
        }
        int right = (c + 1 < outer.row(r)) ? fill[r][c + 1] : nvals;  // val must be <= right
        int above = (r > 0 && c < outer.row(r - 1) && c >= inner.row(r - 1))
                        ? fill[r - 1][c]
                        : 0;  // val must be > above
        for (int v = above + 1; v <= right; ++v) {
            if (remaining[v] == 0) continue;
            if (v > 1 && placed[v] >= placed[v - 1]) continue;  // ballot
            fill[r][c] = v;
            ++placed[v];
            --remaining[v];
            rec(r, c - 1);
            --placed[v];
            ++remaining[v];
        }
        fill[r][c] = 0;
    };
    rec(0, outer.row(0) - 1);
    return count;
}

std::map<std::tuple<Partition, Partition, Partition>, long long> lr_memo;
std::mutex lr_memo_mutex;

}  // namespace

long long lr_coefficient(const Partition& outer, const Partition& inner,
                         const Partition& content) {
    auto key = std::make_tuple(outer, inner, content);
    {
        std::lock_guard<std::mutex> lock(lr_memo_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    long long c = lr_count(outer, inner, content);
    std::lock_guard<std::mutex> lock(lr_memo_mutex);
    lr_memo.emplace(std::move(key), c);
    return c;
}

std::vector<std::pair<Partition, long long>> lr_expand(const Partition& lambda,
                                                       const Partition& mu,
                                                       int row_bound) {
    std::vector<std::pair<Partition, long long>> out;
    int total = lambda.size() + mu.size();
    int max_rows = lambda.length() + mu.length();
    if (row_bound >= 0) max_rows = std::min(max_rows, row_bound);
    // Enumerate candidate outer shapes nu containing lambda.
    std::vector<int> nu;
    std::function<void(int, int)> rec = [&](int r, int rest) {
        if (rest == 0) {
            std::vector<int> parts = nu;
            Partition cand(parts);
            if (cand.contains(lambda)) {
                long long c = lr_coefficient(cand, lambda, mu);
                if (c != 0) out.push_back({cand, c});
            }
            return;
        }
        if (r >= max_rows) return;
        int hi = (r == 0) ? lambda.row(0) + mu.row(0) : nu[r - 1];
        hi = std::min(hi, lambda.row(r) + rest);
        for (int v = std::max(lambda.row(r), 1); v <= hi; ++v) {
            if (v > rest) break;
            nu.push_back(v);
            // lambda's rows decrease, so containment below row r needs only
            // lambda_{r+1} <= v
            if (lambda.row(r + 1) <= v) rec(r + 1, rest - v);
            nu.pop_back();
        }
    };
    // Handle rows that keep lambda's value exactly plus added boxes; the
    // recursion above walks every weakly decreasing extension.
    if (mu.size() == 0) {
        out.push_back({lambda, 1});
        return out;
    }
    rec(0, total);
    return out;
}

SchurVector lr_product(const SchurVector& f, const SchurVector& g) {
    SchurVector out;
    for (const auto& [lam, cf] : f.terms())
        for (const auto& [mu, cg] : g.terms()) {
            LaurentPoly c = cf * cg;
            for (const auto& [nu, k] : lr_expand(lam, mu))
                out.add(nu, c * LaurentPoly(Int(static_cast<long>(k))));
        }
    return out;
}

std::vector<std::pair<Partition, long long>> skew_expand(const Partition& beta,
                                                         const Partition& lambda) {
    std::vector<std::pair<Partition, long long>> out;
    if (beta.size() > lambda.size()) return out;
    if (!lambda.contains(beta)) return out;  // beta must fit inside lambda
    // Enumerate subpartitions nu of lambda with |nu| = |lambda| - |beta|.
    int want = lambda.size() - beta.size();
    std::vector<int> nu;
    std::function<void(int, int)> rec = [&](int r, int rest) {
        if (rest == 0) {
            // remaining rows contribute 0
            Partition cand{std::vector<int>(nu)};
            long long c = lr_coefficient(lambda, cand, beta);
            if (c != 0) out.push_back({cand, c});
            return;
        }
        if (r >= lambda.length()) return;
        int hi = std::min(lambda.row(r), r == 0 ? rest : std::min(nu[r - 1], rest));
        // Lower bound: later rows can hold at most sum of lambda's rows.
        for (int v = hi; v >= 0; --v) {
            int capacity = 0;
            for (int rr = r + 1; rr < lambda.length(); ++rr)
                capacity += std::min(lambda.row(rr), v);
            if (rest - v > capacity) break;
            nu.push_back(v);
            rec(r + 1, rest - v);
            nu.pop_back();
            if (v == 0) break;
        }
    };
    rec(0, want);
    return out;
}

SchurVector skew_by(const Partition& beta, const SchurVector& f) {
    SchurVector out;
    for (const auto& [lam, c] : f.terms())
        for (const auto& [nu, k] : skew_expand(beta, lam))
            out.add(nu, c * LaurentPoly(Int(static_cast<long>(k))));
    return out;
}

SchurVector bernstein_create(const IntVector& tau, const SchurVector& f) {
    SchurVector out;
    for (const auto& [gamma, c] : f.terms()) {
        IntVector seq = tau;
        seq.insert(seq.end(), gamma.parts().begin(), gamma.parts().end());
        auto [sign, w] = straighten_weight(seq);
        if (sign == 0 || !w->is_partition()) continue;
        LaurentPoly contrib = (sign < 0) ? -c : c;
        out.add(w->to_partition(), contrib);
    }
    return out;
}

std::map<Partition, long long> truncated_product(const std::vector<Partition>& factors,
                                                 int a) {
    for (const auto& f : factors)
        if (f.length() > a)
            throw RankViolation("tensor factor " + f.str() + " exceeds " +
                                std::to_string(a) + " rows");
    std::map<Partition, long long> acc{{Partition(), 1}};
    for (const auto& f : factors) {
        std::map<Partition, long long> next;
        for (const auto& [lam, c] : acc)
            for (const auto& [nu, k] : lr_expand(lam, f, a)) next[nu] += c * k;
        acc = std::move(next);
    }
    return acc;
}

long long tensor_multiplicity(const std::vector<Partition>& factors,
                              const Partition& tau, int a) {
    if (tau.length() > a) return 0;
    int total = 0;
    for (const auto& f : factors) total += f.size();
    if (tau.size() != total) return 0;
    auto acc = truncated_product(factors, a);
    auto it = acc.find(tau);
    return it == acc.end() ? 0 : it->second;
}

LaurentPoly alternant(const std::vector<int>& beta, const std::vector<VarId>& vars) {
    int n = static_cast<int>(vars.size());
    LaurentPoly out;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[i] > w[j]) ++inv;
        std::vector<std::pair<VarId, int>> exps;
        for (int i = 0; i < n; ++i)
            if (beta[i] != 0) exps.push_back({vars[w[i]], beta[i]});
        out += LaurentPoly::term(Monomial::from_exps(std::move(exps)),
                                 Int(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

LaurentPoly schur_poly(const DominantWeight& lambda, const std::vector<VarId>& vars) {
    int n = static_cast<int>(vars.size());
    if (lambda.rank() != n)
        throw RankViolation("weight rank differs from variable count");
    std::vector<int> beta(lambda.parts);
    for (int i = 0; i < n; ++i) beta[i] += n - 1 - i;
    for (int i = 1; i < n; ++i)
        if (beta[i - 1] == beta[i]) return LaurentPoly::zero();
    LaurentPoly num = alternant(beta, vars);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            num = num.divide_linear_exact(vars[i], vars[j]);
    return num;
}

std::vector<Partition> subpartitions(const Partition& lambda, int max_length,
                                     int max_first) {
    std::vector<Partition> out;
    std::vector<int> cur;
    int maxlen = lambda.length();
    if (max_length >= 0) maxlen = std::min(maxlen, max_length);
    std::function<void(int)> rec = [&](int r) {
        out.push_back(Partition{std::vector<int>(cur)});
        if (r >= maxlen) return;
        int hi = std::min(lambda.row(r), r == 0 ? lambda.row(0) : cur[r - 1]);
        if (r == 0 && max_first >= 0) hi = std::min(hi, max_first);
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Partition> partitions_of(int n, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int hi) {
        if (rest == 0) {
            out.push_back(Partition{std::vector<int>(cur)});
            return;
        }
        if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
        for (int v = std::min(hi, rest); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

}  // namespace qks
