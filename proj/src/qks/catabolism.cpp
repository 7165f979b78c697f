#include "qks/catabolism.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qks/errors.hpp"

namespace qks {

std::string letter_str(const Letter& l) {
    return std::to_string(l.first) + "." + std::to_string(l.second);
}

int Tableau::cells() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

bool Tableau::semistandard() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 1; c < rows[r].size(); ++c)
            if (rows[r][c] < rows[r][c - 1]) return false;
        if (r > 0) {
            if (rows[r].size() > rows[r - 1].size()) return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (!(rows[r - 1][c] < rows[r][c])) return false;
        }
    }
    return true;
}

std::vector<Letter> Tableau::reading_word() const {
    std::vector<Letter> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::string Tableau::str() const {
    std::string s;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) s += " ";
            s += letter_str(r[c]);
        }
        s += "\n";
    }
    return s;
}

Tableau insert_word(Tableau t, const std::vector<Letter>& word) {
    for (Letter x : word) {
        // Bump down the rows: replace the leftmost entry strictly greater
        // than x; append when none exists.
        std::size_t r = 0;
        while (true) {
            if (r == t.rows.size()) {
                t.rows.push_back({x});
                break;
            }
            auto& row = t.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return t;
}

Tableau yamanouchi(const Partition& mu, int step) {
    Tableau t;
    for (int r = 0; r < mu.length(); ++r)
        t.rows.push_back(std::vector<Letter>(mu.row(r), Letter{step, r + 1}));
    return t;
}

Tableau column_insert(const Tableau& target, const std::vector<Letter>& moved_word,
                      bool target_first) {
    if (target_first) return insert_word(target, moved_word);
    std::vector<Letter> w = moved_word;
    auto tw = target.reading_word();
    w.insert(w.end(), tw.begin(), tw.end());
    return insert_word(Tableau{}, w);
}

PartitionTuple MultiTableau::shape() const {
    PartitionTuple t;
    for (const auto& tab : at) t.push_back(tab.shape());
    return t;
}

std::string MultiTableau::str() const {
    std::string s;
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (i) s += "\n";
        s += at[i].str();
    }
    return s;
}

CatOutcome cat_step(const MultiTableau& t, const Quiver& q, const CurrentStep& step,
                    int step_index, bool target_first) {
    auto out = q.out_arrows(step.vertex);
    if (out.size() > 1)
        throw BranchingVertex("vertex " + q.vertices[step.vertex] +
                              " has more than one outgoing arrow");
    const Tableau& ti = t.at[step.vertex];
    const Partition mu = step.mu.to_partition();
    const int window = step_index + 1;  // letters (window, r)

    // The window letters must form the Yamanouchi tableau of shape mu:
    // row r holds exactly mu_r copies of letter (window, r+1).
    for (std::size_t r = 0; r < ti.rows.size(); ++r) {
        int count = 0;
        for (const Letter& l : ti.rows[r]) {
            if (l.first != window) continue;
            if (l.second != static_cast<int>(r) + 1) return {};
            ++count;
        }
        if (count != mu.row(static_cast<int>(r))) return {};
    }
    if (static_cast<int>(ti.rows.size()) < mu.length()) return {};

    // Split off the Yamanouchi part; the first `width` leftover rows move.
    std::vector<Letter> moved_word;  // reading word of T_n, bottom row first
    int moved = 0;
    int top = std::min<int>(step.width, static_cast<int>(ti.rows.size()));
    for (int r = top - 1; r >= 0; --r) {
        for (std::size_t c = mu.row(r); c < ti.rows[r].size(); ++c) {
            moved_word.push_back(ti.rows[r][c]);
            ++moved;
        }
    }
    Tableau ts;
    for (std::size_t r = step.width; r < ti.rows.size(); ++r)
        ts.rows.push_back(ti.rows[r]);

    if (out.empty() && moved > 0) return {};

    CatOutcome res;
    res.ok = true;
    res.moved = moved;
    res.result = t;
    res.result.at[step.vertex] = ts;
    if (!out.empty() && moved > 0) {
        int j = q.arrows[out[0]].head;
        res.result.at[j] = column_insert(res.result.at[j], moved_word, target_first);
    }
    return res;
}

namespace {

// Backtracking enumeration of semistandard fillings of the tuple of shapes
// with the given letter multiset, vertex by vertex, cell by cell. Cells
// pre-placed by the caller (the first window's Yamanouchi block) are kept
// fixed; only surviving fillings can have that block anyway.
struct FillingEnumerator {
    const std::vector<Partition>& shapes;
    std::vector<Letter> alphabet;           // distinct letters, increasing
    std::map<Letter, int> remaining;
    std::function<void(const MultiTableau&)> visit;
    MultiTableau current;

    void run() {
        fill_vertex(0);
    }

    void fill_vertex(std::size_t v) {
        if (v == shapes.size()) {
            visit(current);
            return;
        }
        fill_cell(v, 0, 0);
    }

    void fill_cell(std::size_t v, int r, int c) {
        Tableau& t = current.at[v];
        if (r == static_cast<int>(t.rows.size())) {
            fill_vertex(v + 1);
            return;
        }
        if (c == static_cast<int>(t.rows[r].size())) {
            fill_cell(v, r + 1, 0);
            return;
        }
        if (t.rows[r][c] != Letter{0, 0}) {  // pre-placed
            fill_cell(v, r, c + 1);
            return;
        }
        for (const Letter& l : alphabet) {
            if (remaining[l] == 0) continue;
            if (c > 0 && l < t.rows[r][c - 1]) continue;
            if (r > 0 && !(t.rows[r - 1][c] < l)) continue;
            t.rows[r][c] = l;
            --remaining[l];
            fill_cell(v, r, c + 1);
            ++remaining[l];
        }
        t.rows[r][c] = {0, 0};
    }
};

}  // namespace

LaurentPoly enumerate_catabolizable(const CurrentData& data,
                                    const PartitionTuple& lambda,
                                    std::vector<std::pair<MultiTableau, Monomial>>* survivors,
                                    bool target_first) {
    if (!data.cls.nonbranching)
        throw BranchingVertex("catabolism requires a nonbranching quiver");
    for (const auto& st : data.cs.steps)
        if (!st.mu.is_partition())
            throw NonPartitionWeight("window weight with negative parts");

    int total = 0;
    for (const auto& p : lambda) total += p.size();
    if (total != data.cs.total_weight_size()) return LaurentPoly::zero();

    FillingEnumerator fe{lambda, {}, {}, {}, {}};
    for (int k = 0; k < data.cs.nsteps(); ++k) {
        Partition mu = data.cs.steps[k].mu.to_partition();
        for (int r = 0; r < mu.length(); ++r) {
            Letter l{k + 1, r + 1};
            fe.alphabet.push_back(l);
            fe.remaining[l] = mu.row(r);
        }
    }

    fe.current.at.assign(lambda.size(), Tableau{});
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int r = 0; r < lambda[i].length(); ++r)
            fe.current.at[i].rows.push_back(
                std::vector<Letter>(lambda[i].row(r), Letter{0, 0}));

    // A surviving filling carries the first window exactly as its Yamanouchi
    // block at the first step's vertex, so place it up front.
    if (data.cs.nsteps() > 0) {
        const auto& st = data.cs.steps[0];
        Partition mu0 = st.mu.to_partition();
        if (!lambda[st.vertex].contains(mu0)) return LaurentPoly::zero();
        for (int r = 0; r < mu0.length(); ++r) {
            Letter l{1, r + 1};
            for (int c = 0; c < mu0.row(r); ++c)
                fe.current.at[st.vertex].rows[r][c] = l;
            fe.remaining[l] = 0;
        }
    }

    LaurentPoly sum;
    fe.visit = [&](const MultiTableau& start) {
        MultiTableau t = start;
        std::vector<std::pair<VarId, int>> weight;
        for (int k = 0; k < data.cs.nsteps(); ++k) {
            CatOutcome oc =
                cat_step(t, data.cs.quiver, data.cs.steps[k], k, target_first);
            if (!oc.ok) return;
            if (oc.moved > 0) {
                int b = data.cs.quiver.out_arrows(data.cs.steps[k].vertex)[0];
                weight.push_back(
                    {VarId::arrow(data.cs.quiver.arrows[b].id), oc.moved});
            }
            t = oc.result;
        }
        Monomial w = Monomial::from_exps(std::move(weight));
        sum += LaurentPoly::term(w, Int(1));
        if (survivors) survivors->push_back({start, w});
    };
    fe.run();
    return sum;
}

LaurentPoly enumerate_catabolizable(const CurrentData& data,
                                    const PartitionTuple& lambda) {
    return enumerate_catabolizable(data, lambda, nullptr);
}

}  // namespace qks
