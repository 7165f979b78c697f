#include <doctest.h>

#include <random>

#include "qks/partition.hpp"

using namespace qks;

TEST_CASE("partition normalization and views") {
    Partition p(std::vector<int>{4, 2, 0, 0});
    CHECK(p.length() == 2);
    CHECK(p.size() == 6);
    CHECK(p == Partition(std::vector<int>{4, 2}));
    CHECK(p.padded(4) == std::vector<int>{4, 2, 0, 0});
    CHECK(p.str() == "(4,2)");
    CHECK(Partition().str() == "()");
    CHECK(Partition(std::vector<int>{4, 2, 1}).conjugate() ==
          Partition(std::vector<int>{3, 2, 1, 1}));
}

TEST_CASE("straightening of already dominant weight") {
    auto [sign, w] = straighten_weight({2, 1});
    CHECK(sign == 1);
    CHECK(w->parts == std::vector<int>{2, 1});
}

TEST_CASE("straightening detects repeats") {
    auto [sign, w] = straighten_weight({1, 2});  // (1,2)+(1,0) = (2,2)
    CHECK(sign == 0);
    CHECK(!w.has_value());
}

TEST_CASE("straightening with a sign flip") {
    auto [sign, w] = straighten_weight({0, 2});
    CHECK(sign == -1);
    CHECK(w->parts == std::vector<int>{1, 1});
}

TEST_CASE("rho constructor") {
    CHECK(DominantWeight::rho(4).parts == std::vector<int>{3, 2, 1, 0});
    CHECK(DominantWeight::rho(1).parts == std::vector<int>{0});
}

TEST_CASE("random straightening properties") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + gen() % 5;
        IntVector seq(n);
        for (int i = 0; i < n; ++i) seq[i] = static_cast<int>(gen() % 9) - 3;
        auto [sign, w] = straighten_weight(seq);
        // zero iff seq + rho has a repeated entry
        std::vector<int> shifted(seq);
        for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;
        std::sort(shifted.begin(), shifted.end());
        bool repeat = std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end();
        CHECK((sign == 0) == repeat);
        if (sign != 0) {
            // re-sorting the straightened weight is a fixed point with sign +1
            auto [sign2, w2] = straighten_weight(w->parts);
            CHECK(sign2 == 1);
            CHECK(w2->parts == w->parts);
        }
    }
}
