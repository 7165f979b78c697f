#pragma once

// Independent Kostka-Foulkes oracle for the test harness: enumerates
// semistandard tableaux of a given shape and content and sums t^charge with
// the classical charge statistic. Shares nothing with the engine's operator
// or Kostant paths.

#include <vector>

#include "qks/laurent.hpp"
#include "qks/partition.hpp"

namespace qks::testing {

// charge of a word over {1..k} whose content is a partition
int charge_of_word(const std::vector<int>& word);

// All semistandard fillings of `shape` with content `content` (entry v used
// content[v-1] times), as reading words (rows left to right, bottom row
// first).
std::vector<std::vector<int>> ssyt_words(const Partition& shape,
                                         const Partition& content);

// K_{shape,content}(t) = sum over SSYT of t^charge, in the given variable.
LaurentPoly kostka_foulkes(const Partition& shape, const Partition& content,
                           const VarId& tvar);

}  // namespace qks::testing
