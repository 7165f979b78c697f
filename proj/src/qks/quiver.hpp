#pragma once

#include <string>
#include <vector>

#include "qks/partition.hpp"

namespace qks {

struct Arrow {
    std::string id;  // doubles as the arrow-variable name
    int tail = 0;    // vertex indices into Quiver::vertices
    int head = 0;
};

// A finite directed graph; loops and multiple arrows are allowed. Vertex ids
// are strings; the vector order is the canonical vertex order everywhere.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;  // -1 when absent
    std::vector<int> out_arrows(int v) const;       // arrow indices, arrow order
    std::vector<int> in_arrows(int v) const;
    int nvertices() const { return static_cast<int>(vertices.size()); }
};

struct CurrentStep {
    int vertex = 0;      // index into Quiver::vertices
    int width = 1;       // a_k
    DominantWeight mu;   // rank == width
};

// The triple (i, a, mu(.)) of a sequence of currents over a quiver.
struct CurrentSequence {
    Quiver quiver;
    std::vector<CurrentStep> steps;

    int nsteps() const { return static_cast<int>(steps.size()); }
    int total_width() const;
    int total_weight_size() const;  // sum |mu(k)|
};

// Per-vertex integer weight vectors of lengths nu^(i).
using VertexWeights = std::vector<std::vector<int>>;

// Slot bookkeeping for the pair (i, a): the block x(k) of each step, the
// ordered slot list of each vertex, and the maps between the two indexings.
// Blocks of the same vertex appear in step order within that vertex's list.
struct FlagIndexing {
    struct Slot {
        int step, pos;     // sequence coordinates (0-based)
        int vertex, vpos;  // vertex coordinates (0-based)
    };
    std::vector<Slot> slots;                    // global, step-major order
    std::vector<std::vector<int>> step_slots;   // step -> global slot ids
    std::vector<std::vector<int>> vertex_slots; // vertex -> global slot ids
    std::vector<int> nu;                        // dimension vector

    static FlagIndexing build(const CurrentSequence& cs);
    int nslots() const { return static_cast<int>(slots.size()); }
    int slot_of_step(int k, int p) const { return step_slots[k][p]; }
    int slot_of_vertex(int i, int r) const { return vertex_slots[i][r]; }
};

// nu^(i) = sum of a_k over steps at vertex i.
std::vector<int> dimension_vector(const CurrentSequence& cs);

// a^(i): the subsequence of widths at vertex i.
std::vector<std::vector<int>> width_subsequences(const CurrentSequence& cs);

// mu^(i): concatenation of the mu(k) with i_k = i, in step order.
VertexWeights concat_weights(const CurrentSequence& cs);

// True iff every concatenated weight mu^(i) is weakly decreasing.
bool is_ia_dominant(const CurrentSequence& cs);

// One weight-basis vector of the fiber: arrow b with tail at the earlier step
// k and head at the later step l, positions p <= a_k, q <= a_l. Its lattice
// vector is e_{src_slot} - e_{tgt_slot}.
struct Root {
    int arrow;
    int src_step, src_pos;
    int tgt_step, tgt_pos;
    int src_slot, tgt_slot;
};

struct RootSet {
    std::vector<Root> roots;
};

// Roots in (src_step, tgt_step, arrow, src_pos, tgt_pos) order. The tail of
// the arrow sits at the earlier step; every lattice vector is
// earlier-minus-later, which makes the Kostant enumeration terminate.
RootSet build_roots(const CurrentSequence& cs, const FlagIndexing& fi);

// Structural classification, plus a generating set for the lattice of
// directed-cycle arrow multisets (used by the grading checks).
struct QuiverClass {
    bool acyclic = false;
    bool nonbranching = false;
    int cycle_r = 0;  // r >= 1 when the quiver is exactly a directed r-cycle
    std::vector<std::vector<int>> cycle_basis;  // arrow-multiset vectors
};

QuiverClass classify_quiver(const Quiver& q);

// For a directed r-cycle: the arrows in cycle order, starting from the
// lexicographically smallest vertex id.
std::vector<int> cycle_arrow_order(const Quiver& q);

// Is `target` in the integer span of the generators? (Small exact solver.)
bool in_integer_span(const std::vector<std::vector<int>>& gens,
                     const std::vector<int>& target);

// Everything derived from one CurrentSequence, built once and shared.
struct CurrentData {
    CurrentSequence cs;
    FlagIndexing flags;
    RootSet roots;
    QuiverClass cls;

    static CurrentData build(CurrentSequence cs);
    int nvertices() const { return cs.quiver.nvertices(); }
};

// Decides lambda - mu in Z>=0{root vectors} + Z>=0{within-vertex e_r - e_s,
// r earlier}, by exhaustive search over non-negative integer flows. Both
// weights are per-vertex vectors of lengths nu^(i).
bool dominance_succeq(const CurrentData& data, const VertexWeights& lambda,
                      const VertexWeights& mu);

}  // namespace qks
