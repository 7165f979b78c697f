#pragma once

#include <stdexcept>
#include <string>

namespace qks {

// Named failure modes of the engine. Everything derives from std::runtime_error
// so callers can catch broadly; the CLI maps specific types to exit codes.

struct NonInvertibleSubstitution : std::runtime_error {
    explicit NonInvertibleSubstitution(const std::string& m) : std::runtime_error(m) {}
};

// Raised when an alternant fails to divide exactly by the Vandermonde.
// Indicates an internal bug; must never fire.
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& m) : std::runtime_error(m) {}
};
using DivisionMismatch = InexactDivision;

struct RankViolation : std::runtime_error {
    explicit RankViolation(const std::string& m) : std::runtime_error(m) {}
};

struct NonPartitionWeight : std::runtime_error {
    explicit NonPartitionWeight(const std::string& m) : std::runtime_error(m) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct FactorizationViolation : std::runtime_error {
    explicit FactorizationViolation(const std::string& m) : std::runtime_error(m) {}
};

struct BranchingVertex : std::runtime_error {
    explicit BranchingVertex(const std::string& m) : std::runtime_error(m) {}
};

struct GroupMismatch : std::runtime_error {
    explicit GroupMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct SchemaError : std::runtime_error {
    std::string pointer;  // JSON pointer to the offending field
    SchemaError(std::string ptr, const std::string& m)
        : std::runtime_error(m + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace qks
