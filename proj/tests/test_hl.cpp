#include <doctest.h>

#include <random>

#include "common.hpp"
#include "qks/catabolism.hpp"
#include "qks/cli.hpp"
#include "qks/errors.hpp"
#include "qks/hl.hpp"

using namespace qks;
using namespace qks::testing;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

LaurentPoly tvar(const char* name, int e = 1) {
    return LaurentPoly::variable(VarId::arrow(name), e);
}

}  // namespace

TEST_CASE("single current on the Jordan quiver") {
    Quiver q = jordan();
    TensorSchurElement f(1);
    f.add({P({1})}, LaurentPoly::one());
    TensorSchurElement r = current_apply(standard_current(q, 0, 1, P({1})), f);
    CHECK(r.coefficient({P({1, 1})}) == LaurentPoly::one());
    CHECK(r.coefficient({P({2})}) == tvar("t_00"));
    CHECK(r.terms().size() == 2);
}

TEST_CASE("any current applied to the vacuum creates its weight") {
    for (const auto& q : {jordan(), a2(), cycle2()}) {
        TensorSchurElement one = TensorSchurElement::unit(q.nvertices());
        TensorSchurElement r =
            current_apply(standard_current(q, 0, 2, P({3, 1})), one);
        PartitionTuple expect(q.nvertices());
        expect[0] = P({3, 1});
        CHECK(r.coefficient(expect) == LaurentPoly::one());
        CHECK(r.terms().size() == 1);
    }
}

TEST_CASE("current skewing across an arrow") {
    Quiver q = a2();
    TensorSchurElement f(2);
    f.add({P({}), P({1})}, LaurentPoly::one());
    TensorSchurElement r = current_apply(standard_current(q, 0, 1, P({1})), f);
    CHECK(r.coefficient({P({1}), P({1})}) == LaurentPoly::one());
    CHECK(r.coefficient({P({2}), P({})}) == tvar("t_01"));
    CHECK(r.terms().size() == 2);
}

TEST_CASE("hall-littlewood function small cases") {
    CurrentData zeros =
        CurrentData::build(make_cs(jordan(), {{0, 1, {0}}, {0, 1, {0}}}));
    TensorSchurElement h = hl_function(zeros);
    CHECK(h.coefficient({P({})}) == LaurentPoly::one());
    CHECK(h.terms().size() == 1);

    CurrentData ones = CurrentData::build(
        make_cs(jordan(), {{0, 1, {1}}, {0, 1, {1}}, {0, 1, {1}}}));
    TensorSchurElement h3 = hl_function(ones);
    CHECK(h3.coefficient({P({1, 1, 1})}) == LaurentPoly::one());
    CHECK(h3.coefficient({P({2, 1})}) == tvar("t_00") + tvar("t_00", 2));
    CHECK(h3.coefficient({P({3})}) == tvar("t_00", 3));
    CHECK(h3.terms().size() == 3);

    CurrentData single = CurrentData::build(make_cs(a2(), {{1, 2, {2, 1}}}));
    TensorSchurElement hs = hl_function(single);
    CHECK(hs.coefficient({P({}), P({2, 1})}) == LaurentPoly::one());
    CHECK(hs.terms().size() == 1);
}

TEST_CASE("degree-14 two-cycle regression, operator engine") {
    CurrentData data = CurrentData::build(two_cycle_deg14());
    LaurentPoly k = kostka_shoji_operator(data, {P({6, 3, 3, 1, 1}), P({})});
    LaurentPoly expect = LaurentPoly(Int(2)) * (tvar("t_01") * tvar("t_10")).pow(6) +
                         LaurentPoly(Int(5)) * (tvar("t_01") * tvar("t_10")).pow(5) +
                         (tvar("t_01") * tvar("t_10")).pow(4);
    CHECK(k == expect);
    CHECK(k.substitute(collapse_substitution(data.cs.quiver)).str() == "2*t^6 + 5*t^5 + t^4");
}

TEST_CASE("kostka-shoji coefficient edge cases") {
    CurrentData ones = CurrentData::build(
        make_cs(jordan(), {{0, 1, {1}}, {0, 1, {1}}, {0, 1, {1}}}));
    CHECK(kostka_shoji_operator(ones, {P({2, 1})}) ==
          tvar("t_00") + tvar("t_00", 2));
    // wrong total size
    CHECK(kostka_shoji_operator(ones, {P({2, 2})}).is_zero());
    // more rows than the dimension vector allows, at the right total size
    CurrentData two = CurrentData::build(make_cs(jordan(), {{0, 1, {2}}, {0, 1, {1}}}));
    CHECK(kostka_shoji_operator(two, {P({1, 1, 1})}).is_zero());
    CHECK(kostant_coefficient(two, PartitionTuple{P({1, 1, 1})}).is_zero());
}

TEST_CASE("kostant oracle reproduces the shifted series coefficients") {
    for (int p = 1; p <= 4; ++p) {
        CurrentData shifted =
            CurrentData::build(make_cs(jordan(), {{0, 1, {p}}, {0, 1, {p}}}));
        CHECK(kostant_coefficient(shifted, VertexWeights{{2 * p, 0}}) ==
              tvar("t_00", p));

        CurrentData zero =
            CurrentData::build(make_cs(jordan(), {{0, 1, {0}}, {0, 1, {0}}}));
        CHECK(kostant_coefficient(zero, VertexWeights{{p, -p}}) == tvar("t_00", p));
    }
}

TEST_CASE("kostant oracle vanishes without dominance") {
    CurrentData d =
        CurrentData::build(make_cs(jordan(), {{0, 1, {2}}, {0, 1, {0}}}));
    CHECK(kostant_coefficient(d, VertexWeights{{1, 1}}).is_zero());
}

TEST_CASE("kostant oracle rejects wrong lengths") {
    CurrentData d = CurrentData::build(make_cs(jordan(), {{0, 1, {1}}}));
    CHECK_THROWS_AS(kostant_coefficient(d, VertexWeights{{1, 0}}), DimensionMismatch);
}

TEST_CASE("operator engine rejects weights with negative parts") {
    CurrentSequence cs;
    cs.quiver = jordan();
    cs.steps.push_back({0, 1, DominantWeight({-1})});
    CurrentData d = CurrentData::build(cs);
    CHECK_THROWS_AS(hl_function(d), NonPartitionWeight);
    // the series oracle still serves it
    CHECK(kostant_coefficient(d, VertexWeights{{-1}}) == LaurentPoly::one());
}

TEST_CASE("operator engine equals kostant oracle on random instances") {
    for (unsigned long long seed = 0; seed < 12; ++seed) {
        CurrentData data = CurrentData::build(random_instance(1000 + seed, 5, 2));
        TensorSchurElement h = hl_function(data);
        for (const auto& lambda :
             weight_table(data.flags.nu, data.cs.total_weight_size())) {
            LaurentPoly op = h.coefficient(lambda);
            LaurentPoly ko = kostant_coefficient(data, lambda);
            CHECK_MESSAGE(op == ko, "seed ", seed, " lambda ", tuple_str(lambda),
                          " operator ", op.str(), " kostant ", ko.str());
        }
    }
}

TEST_CASE("cross-engine agreement beyond the standard corpus quivers") {
    // multiple parallel arrows and a loop sharing a vertex with an arrow
    Quiver par{{"0", "1"}, {{"a", 0, 1}, {"b", 0, 1}}};
    std::vector<CurrentData> suite;
    suite.push_back(CurrentData::build(make_cs(par, {{0, 2, {2, 1}}, {1, 1, {1}}})));
    suite.push_back(
        CurrentData::build(make_cs(par, {{1, 1, {1}}, {0, 1, {2}}, {1, 1, {0}}})));
    suite.push_back(CurrentData::build(
        make_cs(loop_plus_arrow(), {{0, 1, {2}}, {0, 1, {1}}, {1, 1, {1}}})));
    suite.push_back(CurrentData::build(
        make_cs(loop_plus_arrow(), {{1, 2, {1, 1}}, {0, 2, {2, 0}}})));
    for (const auto& data : suite) {
        TensorSchurElement h = hl_function(data);
        for (const auto& lam :
             weight_table(data.flags.nu, data.cs.total_weight_size())) {
            LaurentPoly op = h.coefficient(lam);
            LaurentPoly ko = kostant_coefficient(data, lam);
            CHECK_MESSAGE(op == ko, "lambda ", tuple_str(lam), " operator ",
                          op.str(), " kostant ", ko.str());
        }
    }
}

TEST_CASE("degree law and row bounds hold for the operator engine") {
    for (unsigned long long seed = 50; seed < 56; ++seed) {
        CurrentData data = CurrentData::build(random_instance(seed, 5, 3));
        TensorSchurElement h = hl_function(data);
        int n = data.cs.total_weight_size();
        for (const auto& [lambda, c] : h.terms()) {
            int total = 0;
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                total += lambda[i].size();
                CHECK(lambda[i].length() <= data.flags.nu[i]);
            }
            CHECK(total == n);
        }
    }
}

TEST_CASE("nonzero coefficients require dominance") {
    for (unsigned long long seed = 20; seed < 26; ++seed) {
        CurrentData data = CurrentData::build(random_instance(seed, 4, 2));
        TensorSchurElement h = hl_function(data);
        VertexWeights mu = concat_weights(data.cs);
        for (const auto& [lambda, c] : h.terms()) {
            VertexWeights lw(data.nvertices());
            for (int i = 0; i < data.nvertices(); ++i)
                lw[i] = lambda[i].padded(data.flags.nu[i]);
            CHECK(dominance_succeq(data, lw, mu));
        }
    }
}

TEST_CASE("support lies in a single cycle coset") {
    for (unsigned long long seed = 30; seed < 40; ++seed) {
        CurrentData data = CurrentData::build(random_instance(seed, 5, 2));
        TensorSchurElement h = hl_function(data);
        for (const auto& [lambda, c] : h.terms()) {
            CHECK(support_in_cycle_coset(data.cls, data.cs.quiver, c));
            CHECK((data.cls.acyclic ? is_single_monomial(c) : true));
            if (data.cls.acyclic && is_ia_dominant(data.cs))
                CHECK(is_nonneg_monomial(c));
        }
    }
}

TEST_CASE("cyclic reduced factorization") {
    // the degree-14 regression value
    LaurentPoly K = LaurentPoly(Int(2)) * (tvar("t_01") * tvar("t_10")).pow(6) +
                    LaurentPoly(Int(5)) * (tvar("t_01") * tvar("t_10")).pow(5) +
                    (tvar("t_01") * tvar("t_10")).pow(4);
    auto [pre, red] = reduced_polynomial(cycle2(), K);
    CHECK(pre.is_unit());
    CHECK(red.str() == "2*t^6 + 5*t^5 + t^4");

    // Jordan quiver: r = 1 has an empty prefactor product
    LaurentPoly KJ = tvar("t_00", 2) + tvar("t_00");
    auto [prej, redj] = reduced_polynomial(jordan(), KJ);
    CHECK(prej.is_unit());
    CHECK(redj.str() == "t^2 + t");

    auto [pre0, red0] = reduced_polynomial(cycle2(), LaurentPoly::zero());
    CHECK(pre0.is_unit());
    CHECK(red0.is_zero());

    // mismatched support reports a violation
    LaurentPoly bad = tvar("t_01") + tvar("t_10");
    CHECK_THROWS_AS(reduced_polynomial(cycle2(), bad), FactorizationViolation);

    // unbalanced but coset-consistent support carries a prefactor
    LaurentPoly shifted =
        tvar("t_01", 3) * tvar("t_10", 2) + tvar("t_01", 4) * tvar("t_10", 3);
    auto [pres, reds] = reduced_polynomial(cycle2(), shifted);
    CHECK(pres.str() == "t_01");
    CHECK(reds.str() == "t^3 + t^2");
}

TEST_CASE("qt current reduces to the standard current at q = 0") {
    std::map<VarId, LaurentPoly> q_to_zero{{VarId::q(), LaurentPoly::zero()}};
    for (unsigned long long seed = 60; seed < 70; ++seed) {
        CurrentSequence cs = random_instance(seed, 4, 2);
        if (cs.steps.empty()) continue;
        CurrentData data = CurrentData::build(cs);
        // a small input element produced by the collapsed engine
        TensorSchurElement f = hl_function(data, /*collapse_t=*/true);
        const auto& st = cs.steps[0];
        TensorSchurElement viaqt =
            qt_current_apply(cs.quiver, st.vertex, st.width, st.mu.to_partition(), f)
                .substitute(q_to_zero);
        TensorSchurElement direct = current_apply(
            standard_current(cs.quiver, st.vertex, st.width, st.mu.to_partition(),
                             /*collapse_t=*/true),
            f);
        CHECK(viaqt == direct);
    }
}

TEST_CASE("qt current skew structure on a directed cycle") {
    // width-1 current at vertex i of the 3-cycle: a plain t entry at the head
    // of the out-arrow, a plain q entry at the tail of the in-arrow, and the
    // conjugate-sign qt self-correction
    Quiver q = cycle3();
    CurrentOperator op = qt_current(q, 1, 1, P({2}));
    REQUIRE(op.skews.size() == 3);
    LaurentPoly tq = LaurentPoly::variable(VarId::agg_t());
    LaurentPoly qq = LaurentPoly::variable(VarId::q());
    CHECK(op.skews[0].target == 2);
    CHECK(op.skews[0].scalar == tq);
    CHECK_FALSE(op.skews[0].conjugate);
    CHECK(op.skews[1].target == 0);
    CHECK(op.skews[1].scalar == qq);
    CHECK_FALSE(op.skews[1].conjugate);
    CHECK(op.skews[2].target == 1);
    CHECK(op.skews[2].scalar == qq * tq);
    CHECK(op.skews[2].conjugate);
}

TEST_CASE("qt current applied to the vacuum creates its weight") {
    Quiver q = cycle2();
    TensorSchurElement one = TensorSchurElement::unit(2);
    TensorSchurElement r = qt_current_apply(q, 0, 2, P({2, 1}), one);
    CHECK(r.coefficient({P({2, 1}), P({})}) == LaurentPoly::one());
    CHECK(r.terms().size() == 1);
}

TEST_CASE("qt current on the Jordan quiver against the derived oracle") {
    // coefficient of s_(2) in the width-1 qt current applied to s_(1); the
    // value t + q - q*t was derived independently through the finite-variable
    // shuffle route (the qt bridge in the shuffle suite) and frozen here
    Quiver q = jordan();
    TensorSchurElement f(1);
    f.add({P({1})}, LaurentPoly::one());
    TensorSchurElement r = qt_current_apply(q, 0, 1, P({1}), f);
    LaurentPoly c2 = r.coefficient({P({2})});
    LaurentPoly tq = LaurentPoly::variable(VarId::agg_t());
    LaurentPoly qq = LaurentPoly::variable(VarId::q());
    CHECK(c2 == tq + qq - qq * tq);
    std::map<VarId, LaurentPoly> qzero{{VarId::q(), LaurentPoly::zero()}};
    CHECK(c2.substitute(qzero) == tq);
}

TEST_CASE("positivity of dominant instances in a small sample") {
    for (unsigned long long seed = 80; seed < 110; ++seed) {
        CurrentData data = CurrentData::build(random_instance(seed, 5, 3));
        if (!is_ia_dominant(data.cs)) continue;
        TensorSchurElement h = hl_function(data);
        for (const auto& [lambda, c] : h.terms()) CHECK(c.nonnegative());
    }
}
