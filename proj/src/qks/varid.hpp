#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qks {

// Kinds of formal variables, listed in canonical order.
//
//   Arrow  - one parameter per quiver arrow, named by the arrow id (e.g. "t_01")
//   Q      - the parameter q of the doubled-quiver setting
//   AggT   - the single aggregate parameter t (image of all arrow variables
//            under the collapsing substitution)
//   X      - torus variable x(v,j) attached to slot j at vertex v
//   U      - auxiliary variable u(k,p) attached to position p of step k
enum class VarKind : std::uint8_t { Arrow = 0, Q = 1, AggT = 2, X = 3, U = 4 };

// A formal variable. The total order -- kind first, then name
// lexicographically -- is fixed and determines term ordering and canonical
// printing everywhere. The name is the canonical printed form.
struct VarId {
    VarKind kind = VarKind::Arrow;
    std::string name;

    static VarId arrow(std::string id) { return {VarKind::Arrow, std::move(id)}; }
    static VarId q() { return {VarKind::Q, "q"}; }
    static VarId agg_t() { return {VarKind::AggT, "t"}; }
    static VarId x(const std::string& vertex, int index);  // x(v,j), 1-based j
    static VarId u(int step, int pos);                     // u(k,p), 1-based

    // True for the parameter kinds that carry the arrow grading (Arrow, Q,
    // AggT); X and U variables are alphabet variables.
    bool is_parameter() const { return kind <= VarKind::AggT; }

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId VarId::x(const std::string& vertex, int index) {
    return {VarKind::X, "x(" + vertex + "," + std::to_string(index) + ")"};
}

inline VarId VarId::u(int step, int pos) {
    return {VarKind::U, "u(" + std::to_string(step) + "," + std::to_string(pos) + ")"};
}

// Recovers the kind from a canonical name (used by the polynomial parser).
VarId var_from_name(const std::string& name);

}  // namespace qks
