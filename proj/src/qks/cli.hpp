#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "qks/hl.hpp"
#include "qks/quiver.hpp"

namespace qks {

// A validated command dispatch. Exit codes of run():
//   0 success
//   2 invalid input (schema or usage)
//   3 engine disagreement in compare mode (with reproducer on err)
//   4 conjecture-probe violation (negativity under dominance, or catabolism
//     mismatch), with diagnostics on err
struct JobSpec {
    enum class Cmd { Compute, Table, Catabolism, ShufflePsi, Compare };
    Cmd cmd = Cmd::Compute;
    std::optional<CurrentData> data;          // absent only for randomized compare
    std::optional<PartitionTuple> lambda;
    std::string method = "operator";          // operator | kostant | catabolism
    int truncate = -1;                        // >= 0: truncate output arrow degree
    bool collapse_t = false;
    bool json = false;
    int trials = 0;
    unsigned long long seed = 0;
};

int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Deterministic random instance used by compare --trials (also used by the
// acceptance suite). Quivers rotate through Jordan, A2, 2-cycle, 3-cycle.
CurrentSequence random_instance(unsigned long long seed, int max_total_width = 6,
                                int max_weight = 3);

// Greedily shrinks an instance while the predicate stays true: drops steps,
// trims widths, and lowers weight entries. Used to minimize disagreement
// reproducers before they are dumped.
CurrentSequence minimize_instance(
    CurrentSequence cs, const std::function<bool(const CurrentSequence&)>& pred);

}  // namespace qks
