#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qks/hl.hpp"
#include "qks/laurent.hpp"
#include "qks/partition.hpp"
#include "qks/quiver.hpp"

namespace qks {

// A tableau letter: (step, position), both 1-based, totally ordered by (k,r).
using Letter = std::pair<int, int>;

std::string letter_str(const Letter& l);  // "k.r"

// A semistandard tableau over the letter alphabet: rows weakly increase,
// columns strictly increase.
struct Tableau {
    std::vector<std::vector<Letter>> rows;

    int cells() const;
    bool empty() const { return rows.empty(); }
    Partition shape() const;
    bool semistandard() const;
    // Rows left to right, bottom row first.
    std::vector<Letter> reading_word() const;
    std::string str() const;  // one row per line

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Row-inserts the word into an initially given tableau (Schensted bumping
// for weakly increasing rows / strictly increasing columns).
Tableau insert_word(Tableau t, const std::vector<Letter>& word);

// The superstandard tableau of shape mu whose row r is filled with the r-th
// letter of the step's window.
Tableau yamanouchi(const Partition& mu, int step);

// Column insertion of the moved entries into the target: the tableau
// Knuth-equivalent to moved_word * word(target). `moved_word` may be any
// reading word of the moved skew tableau. target_first selects the opposite
// product order; the default is pinned by the regression suite.
Tableau column_insert(const Tableau& target, const std::vector<Letter>& moved_word,
                      bool target_first = false);

struct MultiTableau {
    std::vector<Tableau> at;  // one per vertex, canonical order

    PartitionTuple shape() const;
    std::string str() const;  // vertices separated by blank lines

    friend bool operator==(const MultiTableau&, const MultiTableau&) = default;
};

struct CatOutcome {
    bool ok = false;
    MultiTableau result;
    int moved = 0;  // |T_n|
};

// One catabolism move for the given step: peels the Yamanouchi tableau of the
// step's window off the tableau at the step's vertex, splits off the first
// `width` remaining rows, and column-inserts them at the unique out-neighbor.
// Rejects (ok = false) when the window restriction is not Yamanouchi or when
// a sink vertex would have to move entries. Throws BranchingVertex if the
// vertex has more than one outgoing arrow.
CatOutcome cat_step(const MultiTableau& t, const Quiver& q, const CurrentStep& step,
                    int step_index, bool target_first = false);

// Weighted enumeration of catabolizable multitableaux of the given shape:
// sum of prod t_{arrow}^{moved} over every multitableau of shape lambda and
// window content mu(.) that survives the full catabolism chain. Requires a
// nonbranching quiver.
LaurentPoly enumerate_catabolizable(const CurrentData& data,
                                    const PartitionTuple& lambda);

// Same, also returning the surviving tableaux with their weights (for
// counterexample reports). target_first selects the alternative plactic
// convention; the default is pinned by the regression tests.
LaurentPoly enumerate_catabolizable(const CurrentData& data,
                                    const PartitionTuple& lambda,
                                    std::vector<std::pair<MultiTableau, Monomial>>* survivors,
                                    bool target_first = false);

}  // namespace qks
