#include "qks/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qks {

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing(parts_))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be non-negative");
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
    if (n < length()) throw std::invalid_argument("pad length below partition length");
    std::vector<int> v = parts_;
    v.resize(n, 0);
    return v;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 0; r < inner.length(); ++r)
        if (parts_[r] < inner.parts_[r]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (int col = 0; col < parts_[0]; ++col)
        for (int r = 0; r < length(); ++r)
            if (parts_[r] > col) ++c[col];
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.parts_.size() ? a.parts_[i] : 0;
        int y = i < b.parts_.size() ? b.parts_[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

bool operator<(const Partition& a, const Partition& b) {
    return (a <=> b) < 0;
}

DominantWeight::DominantWeight(std::vector<int> p) : parts(std::move(p)) {
    if (!weakly_decreasing(parts))
        throw std::invalid_argument("dominant weight must be weakly decreasing");
}

DominantWeight DominantWeight::rho(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return DominantWeight(std::move(p));
}

DominantWeight DominantWeight::from_partition(const Partition& p, int rank) {
    return DominantWeight(p.padded(rank));
}

int DominantWeight::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool DominantWeight::is_partition() const {
    return parts.empty() || parts.back() >= 0;
}

Partition DominantWeight::to_partition() const {
    if (!is_partition()) throw std::invalid_argument("weight has negative parts");
    return Partition(parts);
}

std::string DominantWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

StraightenResult straighten_weight(const IntVector& seq) {
    int n = static_cast<int>(seq.size());
    std::vector<int> v(seq);
    for (int i = 0; i < n; ++i) v[i] += n - 1 - i;  // add rho
    // Sign of the permutation sorting v into strictly decreasing order equals
    // the parity of the number of out-of-order pairs.
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (v[i] == v[j]) return {0, std::nullopt};
            if (v[i] < v[j]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<int>());
    for (int i = 0; i < n; ++i) v[i] -= n - 1 - i;  // subtract rho
    return {inversions % 2 == 0 ? 1 : -1, DominantWeight(std::move(v))};
}

}  // namespace qks
