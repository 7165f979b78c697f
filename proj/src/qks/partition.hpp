#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qks {

// A fixed-length integer vector (weights, lattice vectors).
using IntVector = std::vector<int>;

// An integer partition: weakly decreasing non-negative parts. Trailing zeros
// are accepted on input and stripped for storage, so equality and ordering
// see the normalized form; padded() provides the fixed-length view needed in
// GL_a weight contexts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition single_row(int m) { return Partition(std::vector<int>{m}); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }  // nonzero parts
    int row(int r) const { return r < length() ? parts_[r] : 0; }   // 0-based
    bool empty() const { return parts_.empty(); }

    std::vector<int> padded(int n) const;  // length-n view; requires n >= length()
    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    std::string str() const;  // "(6,3,3,1,1)", "()" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts with implicit trailing zeros.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;  // strictly positive, weakly decreasing
};

bool operator<(const Partition& a, const Partition& b);

// A dominant integral GL_n weight: weakly decreasing integer parts of a fixed
// rank (length is exactly the rank; entries may be negative).
struct DominantWeight {
    std::vector<int> parts;

    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> p);
    static DominantWeight rho(int n);  // (n-1, n-2, ..., 1, 0)
    static DominantWeight from_partition(const Partition& p, int rank);

    int rank() const { return static_cast<int>(parts.size()); }
    int sum() const;
    bool is_partition() const;  // all parts non-negative
    Partition to_partition() const;
    std::string str() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

struct StraightenResult {
    int sign = 0;  // -1, 0, +1
    std::optional<DominantWeight> weight;
};

// Jacobi-Trudi straightening: adds rho, returns sign 0 if seq+rho has a
// repeated entry, otherwise the sign of the sorting permutation together with
// sort_desc(seq+rho) - rho. The result may have negative parts.
StraightenResult straighten_weight(const IntVector& seq);

bool weakly_decreasing(const std::vector<int>& v);

}  // namespace qks
