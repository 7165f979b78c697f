#include "qks/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qks/errors.hpp"

namespace qks {

int Quiver::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return static_cast<int>(i);
    return -1;
}

std::vector<int> Quiver::out_arrows(int v) const {
    std::vector<int> out;
    for (std::size_t b = 0; b < arrows.size(); ++b)
        if (arrows[b].tail == v) out.push_back(static_cast<int>(b));
    return out;
}

std::vector<int> Quiver::in_arrows(int v) const {
    std::vector<int> in;
    for (std::size_t b = 0; b < arrows.size(); ++b)
        if (arrows[b].head == v) in.push_back(static_cast<int>(b));
    return in;
}

int CurrentSequence::total_width() const {
    int n = 0;
    for (const auto& s : steps) n += s.width;
    return n;
}

int CurrentSequence::total_weight_size() const {
    int n = 0;
    for (const auto& s : steps) n += s.mu.sum();
    return n;
}

FlagIndexing FlagIndexing::build(const CurrentSequence& cs) {
    FlagIndexing fi;
    fi.nu.assign(cs.quiver.nvertices(), 0);
    fi.vertex_slots.assign(cs.quiver.nvertices(), {});
    fi.step_slots.resize(cs.steps.size());
    for (int k = 0; k < cs.nsteps(); ++k) {
        const auto& st = cs.steps[k];
        for (int p = 0; p < st.width; ++p) {
            int id = static_cast<int>(fi.slots.size());
            fi.slots.push_back({k, p, st.vertex, fi.nu[st.vertex]});
            fi.step_slots[k].push_back(id);
            fi.vertex_slots[st.vertex].push_back(id);
            ++fi.nu[st.vertex];
        }
    }
    return fi;
}

std::vector<int> dimension_vector(const CurrentSequence& cs) {
    std::vector<int> nu(cs.quiver.nvertices(), 0);
    for (const auto& st : cs.steps) nu[st.vertex] += st.width;
    return nu;
}

std::vector<std::vector<int>> width_subsequences(const CurrentSequence& cs) {
    std::vector<std::vector<int>> a(cs.quiver.nvertices());
    for (const auto& st : cs.steps) a[st.vertex].push_back(st.width);
    return a;
}

VertexWeights concat_weights(const CurrentSequence& cs) {
    VertexWeights mu(cs.quiver.nvertices());
    for (const auto& st : cs.steps)
        mu[st.vertex].insert(mu[st.vertex].end(), st.mu.parts.begin(),
                             st.mu.parts.end());
    return mu;
}

bool is_ia_dominant(const CurrentSequence& cs) {
    for (const auto& w : concat_weights(cs))
        if (!weakly_decreasing(w)) return false;
    return true;
}

RootSet build_roots(const CurrentSequence& cs, const FlagIndexing& fi) {
    RootSet rs;
    int m = cs.nsteps();
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
            for (std::size_t b = 0; b < cs.quiver.arrows.size(); ++b) {
                const Arrow& ar = cs.quiver.arrows[b];
                if (ar.tail != cs.steps[k].vertex || ar.head != cs.steps[l].vertex)
                    continue;
                for (int p = 0; p < cs.steps[k].width; ++p)
                    for (int q = 0; q < cs.steps[l].width; ++q)
                        rs.roots.push_back({static_cast<int>(b), k, p, l, q,
                                            fi.slot_of_step(k, p),
                                            fi.slot_of_step(l, q)});
            }
    return rs;
}

namespace {

bool has_directed_cycle(const Quiver& q) {
    int n = q.nvertices();
    std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        for (const auto& a : q.arrows) {
            if (a.tail != v) continue;
            if (color[a.head] == 1) return true;
            if (color[a.head] == 0 && dfs(a.head)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (color[v] == 0 && dfs(v)) return true;
    return false;
}

// Simple directed cycles as arrow index lists. Each cycle is reported once,
// rooted at its smallest vertex.
std::vector<std::vector<int>> simple_cycles(const Quiver& q) {
    std::vector<std::vector<int>> cycles;
    int n = q.nvertices();
    for (int s = 0; s < n; ++s) {
        std::vector<int> path;            // arrow indices
        std::vector<char> visited(n, 0);  // vertices on the current path
        std::function<void(int)> dfs = [&](int v) {
            visited[v] = 1;
            for (std::size_t b = 0; b < q.arrows.size(); ++b) {
                const Arrow& a = q.arrows[b];
                if (a.tail != v || a.head < s) continue;
                if (a.head == s) {
                    path.push_back(static_cast<int>(b));
                    cycles.push_back(path);
                    path.pop_back();
                } else if (!visited[a.head]) {
                    path.push_back(static_cast<int>(b));
                    dfs(a.head);
                    path.pop_back();
                }
            }
            visited[v] = 0;
        };
        dfs(s);
    }
    return cycles;
}

}  // namespace

QuiverClass classify_quiver(const Quiver& q) {
    QuiverClass c;
    c.acyclic = !has_directed_cycle(q);

    c.nonbranching = true;
    for (int v = 0; v < q.nvertices(); ++v)
        if (q.out_arrows(v).size() > 1 || q.in_arrows(v).size() > 1)
            c.nonbranching = false;

    // Exactly a directed r-cycle: every vertex has one in- and one out-arrow
    // and following the unique out-arrows visits every vertex once.
    c.cycle_r = 0;
    int n = q.nvertices();
    if (n >= 1 && static_cast<int>(q.arrows.size()) == n) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = q.out_arrows(v).size() == 1 && q.in_arrows(v).size() == 1;
        if (ok) {
            int v = 0, count = 0;
            std::vector<char> seen(n, 0);
            while (!seen[v]) {
                seen[v] = 1;
                ++count;
                v = q.arrows[q.out_arrows(v)[0]].head;
            }
            if (v == 0 && count == n) c.cycle_r = n;
        }
    }

    for (const auto& cyc : simple_cycles(q)) {
        std::vector<int> vec(q.arrows.size(), 0);
        for (int b : cyc) ++vec[b];
        c.cycle_basis.push_back(std::move(vec));
    }
    return c;
}

std::vector<int> cycle_arrow_order(const Quiver& q) {
    QuiverClass c = classify_quiver(q);
    if (c.cycle_r == 0)
        throw FactorizationViolation("quiver is not a directed cycle");
    int start = 0;
    for (int v = 1; v < q.nvertices(); ++v)
        if (q.vertices[v] < q.vertices[start]) start = v;
    std::vector<int> order;
    int v = start;
    do {
        int b = q.out_arrows(v)[0];
        order.push_back(b);
        v = q.arrows[b].head;
    } while (v != start);
    return order;
}

bool in_integer_span(const std::vector<std::vector<int>>& gens,
                     const std::vector<int>& target) {
    if (target.empty()) return true;
    std::size_t n = target.size();
    std::vector<std::vector<long long>> rows;
    for (const auto& g : gens) rows.emplace_back(g.begin(), g.end());
    std::vector<long long> t(target.begin(), target.end());

    for (std::size_t col = 0; col < n; ++col) {
        // Euclid over the active rows until at most one is nonzero at col.
        while (true) {
            int best = -1;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best < 0 || std::abs(rows[r][col]) < std::abs(rows[best][col])))
                    best = static_cast<int>(r);
            if (best < 0) break;
            bool reduced_any = false;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == best || rows[r][col] == 0) continue;
                long long f = rows[r][col] / rows[best][col];
                for (std::size_t j = 0; j < n; ++j) rows[r][j] -= f * rows[best][j];
                reduced_any = reduced_any || rows[r][col] != 0;
            }
            bool others_zero = true;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (static_cast<int>(r) != best && rows[r][col] != 0) others_zero = false;
            if (others_zero) {
                // Use the pivot to clear the target, then retire it.
                if (t[col] % rows[best][col] != 0) return false;
                long long f = t[col] / rows[best][col];
                for (std::size_t j = 0; j < n; ++j) t[j] -= f * rows[best][j];
                rows.erase(rows.begin() + best);
                break;
            }
            (void)reduced_any;
        }
        if (t[col] != 0) return false;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (t[j] != 0) return false;
    return true;
}

CurrentData CurrentData::build(CurrentSequence cs) {
    CurrentData d;
    d.cs = std::move(cs);
    d.flags = FlagIndexing::build(d.cs);
    d.roots = build_roots(d.cs, d.flags);
    d.cls = classify_quiver(d.cs.quiver);
    return d;
}

namespace {

// Forward-flow existence search shared by the dominance test: edges go from
// earlier to later slots; at each slot the required outflow is the target
// plus accumulated inflow, distributed over the outgoing edges. States
// (slot, accumulated inflow to later slots) that fail are memoized, which
// keeps the exhaustive search exact but collapses merged branches.
struct FlowSearch {
    const std::vector<std::vector<int>>& out_edges;
    const std::vector<int>& target;
    std::vector<int> inflow;
    std::map<std::pair<int, std::vector<int>>, bool> memo;

    FlowSearch(const std::vector<std::vector<int>>& o, const std::vector<int>& t)
        : out_edges(o), target(t), inflow(t.size(), 0) {}

    bool exists(int slot) {
        int nslots = static_cast<int>(target.size());
        if (slot == nslots) return true;
        std::vector<int> suffix(inflow.begin() + slot, inflow.end());
        auto key = std::make_pair(slot, std::move(suffix));
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long need = target[slot] + inflow[slot];
        bool ok = false;
        if (need >= 0) {
            const auto& outs = out_edges[slot];
            if (outs.empty())
                ok = need == 0 && exists(slot + 1);
            else
                ok = distribute(slot, 0, need);
        }
        memo.emplace(std::move(key), ok);
        return ok;
    }

    bool distribute(int slot, std::size_t e, long long rest) {
        const auto& outs = out_edges[slot];
        if (e + 1 == outs.size()) {
            inflow[outs[e]] += static_cast<int>(rest);
            bool ok = exists(slot + 1);
            inflow[outs[e]] -= static_cast<int>(rest);
            return ok;
        }
        for (long long x = 0; x <= rest; ++x) {
            inflow[outs[e]] += static_cast<int>(x);
            bool ok = distribute(slot, e + 1, rest - x);
            inflow[outs[e]] -= static_cast<int>(x);
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

bool dominance_succeq(const CurrentData& data, const VertexWeights& lambda,
                      const VertexWeights& mu) {
    const FlagIndexing& fi = data.flags;
    int nslots = fi.nslots();
    std::vector<int> target(nslots, 0);
    long long total = 0;
    for (int i = 0; i < data.nvertices(); ++i) {
        if (static_cast<int>(lambda[i].size()) != fi.nu[i] ||
            static_cast<int>(mu[i].size()) != fi.nu[i])
            throw DimensionMismatch("weight length differs from dimension vector");
        for (int r = 0; r < fi.nu[i]; ++r) {
            target[fi.slot_of_vertex(i, r)] = lambda[i][r] - mu[i][r];
            total += lambda[i][r] - mu[i][r];
        }
    }
    if (total != 0) return false;

    std::vector<std::set<int>> out(nslots);
    for (const auto& rt : data.roots.roots) out[rt.src_slot].insert(rt.tgt_slot);
    for (int i = 0; i < data.nvertices(); ++i)
        for (std::size_t r = 0; r < fi.vertex_slots[i].size(); ++r)
            for (std::size_t s = r + 1; s < fi.vertex_slots[i].size(); ++s)
                out[fi.vertex_slots[i][r]].insert(fi.vertex_slots[i][s]);

    std::vector<std::vector<int>> out_edges(nslots);
    for (int s = 0; s < nslots; ++s) out_edges[s].assign(out[s].begin(), out[s].end());
    FlowSearch search(out_edges, target);
    return search.exists(0);
}

}  // namespace qks
