#include "charge_oracle.hpp"

#include <algorithm>
#include <functional>

namespace qks::testing {

namespace {

// Extracts one standard subword: the rightmost 1, then for each next value
// the rightmost occurrence to the left of the previous choice, wrapping
// around to the rightmost occurrence overall when none exists.
std::vector<std::size_t> extract_standard(const std::vector<int>& w,
                                          const std::vector<char>& used, int maxval) {
    std::vector<std::size_t> chosen;
    std::size_t prev_pos = 0;
    for (int v = 1; v <= maxval; ++v) {
        int found = -1;
        if (v == 1) {
            for (std::size_t i = w.size(); i-- > 0;)
                if (!used[i] && w[i] == 1) {
                    found = static_cast<int>(i);
                    break;
                }
        } else {
            for (std::size_t i = prev_pos; i-- > 0;)
                if (!used[i] && w[i] == v) {
                    found = static_cast<int>(i);
                    break;
                }
            if (found < 0)
                for (std::size_t i = w.size(); i-- > 0;)
                    if (!used[i] && w[i] == v) {
                        found = static_cast<int>(i);
                        break;
                    }
        }
        if (found < 0) break;  // content is a partition, so values stop here
        chosen.push_back(static_cast<std::size_t>(found));
        prev_pos = static_cast<std::size_t>(found);
    }
    return chosen;
}

int charge_of_standard(const std::vector<int>& w,
                       const std::vector<std::size_t>& positions) {
    // positions[v-1] is where value v sits in the original word
    int charge = 0, index = 0;
    for (std::size_t v = 1; v < positions.size(); ++v) {
        if (positions[v] > positions[v - 1]) ++index;
        charge += index;
    }
    return charge;
}

}  // namespace

int charge_of_word(const std::vector<int>& word) {
    std::vector<char> used(word.size(), 0);
    int maxval = 0;
    for (int v : word) maxval = std::max(maxval, v);
    int total = 0;
    std::size_t remaining = word.size();
    while (remaining > 0) {
        auto chosen = extract_standard(word, used, maxval);
        total += charge_of_standard(word, chosen);
        for (std::size_t p : chosen) used[p] = 1;
        remaining -= chosen.size();
    }
    return total;
}

std::vector<std::vector<int>> ssyt_words(const Partition& shape,
                                         const Partition& content) {
    std::vector<std::vector<int>> words;
    if (shape.size() != content.size()) return words;
    int nrows = shape.length(), nvals = content.length();
    std::vector<std::vector<int>> fill(nrows);
    for (int r = 0; r < nrows; ++r) fill[r].assign(shape.row(r), 0);
    std::vector<int> left(nvals + 1);
    for (int v = 1; v <= nvals; ++v) left[v] = content.row(v - 1);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == nrows) {
            std::vector<int> w;
            for (int rr = nrows - 1; rr >= 0; --rr)
                w.insert(w.end(), fill[rr].begin(), fill[rr].end());
            words.push_back(std::move(w));
            return;
        }
        if (c == shape.row(r)) {
            rec(r + 1, 0);
            return;
        }
        int lo = (c > 0) ? fill[r][c - 1] : 1;
        for (int v = lo; v <= nvals; ++v) {
            if (left[v] == 0) continue;
            if (r > 0 && fill[r - 1][c] >= v) continue;
            fill[r][c] = v;
            --left[v];
            rec(r, c + 1);
            ++left[v];
        }
        fill[r][c] = 0;
    };
    rec(0, 0);
    return words;
}

LaurentPoly kostka_foulkes(const Partition& shape, const Partition& content,
                           const VarId& tvar) {
    LaurentPoly k;
    for (const auto& w : ssyt_words(shape, content))
        k += LaurentPoly::term(Monomial::var(tvar, charge_of_word(w)), Int(1));
    return k;
}

}  // namespace qks::testing
