#pragma once

// Shared builders for the test suites.

#include <string>
#include <vector>

#include "qks/quiver.hpp"

namespace qks::testing {

inline Quiver jordan() {
    return {{"0"}, {{"t_00", 0, 0}}};
}

inline Quiver a2() {
    return {{"0", "1"}, {{"t_01", 0, 1}}};
}

inline Quiver cycle2() {
    return {{"0", "1"}, {{"t_01", 0, 1}, {"t_10", 1, 0}}};
}

inline Quiver cycle3() {
    return {{"0", "1", "2"}, {{"t_01", 0, 1}, {"t_12", 1, 2}, {"t_20", 2, 0}}};
}

struct StepSpec {
    int vertex;
    int width;
    std::vector<int> mu;
};

inline CurrentSequence make_cs(Quiver q, const std::vector<StepSpec>& steps) {
    CurrentSequence cs;
    cs.quiver = std::move(q);
    for (const auto& s : steps) {
        std::vector<int> mu = s.mu;
        mu.resize(s.width, 0);
        cs.steps.push_back({s.vertex, s.width, DominantWeight(std::move(mu))});
    }
    return cs;
}

// The two-vertex running example: one loop at 0 and one arrow 0 -> 1.
inline Quiver loop_plus_arrow() {
    return {{"0", "1"}, {{"t_00", 0, 0}, {"t_01", 0, 1}}};
}

// The degree-14 regression instance on the 2-cycle quiver.
inline CurrentSequence two_cycle_deg14() {
    return make_cs(cycle2(), {{0, 2, {4, 2}},
                              {1, 2, {0, 0}},
                              {0, 2, {2, 2}},
                              {1, 2, {0, 0}},
                              {0, 3, {2, 1, 1}}});
}

}  // namespace qks::testing
