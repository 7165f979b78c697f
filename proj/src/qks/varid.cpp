#include "qks/varid.hpp"

namespace qks {

VarId var_from_name(const std::string& name) {
    if (name == "q") return VarId::q();
    if (name == "t") return VarId::agg_t();
    if (name.rfind("x(", 0) == 0) return {VarKind::X, name};
    if (name.rfind("u(", 0) == 0) return {VarKind::U, name};
    return VarId::arrow(name);
}

}  // namespace qks
