#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qks/varid.hpp"

namespace qks {

using Int = mpz_class;

// A Laurent monomial: a sparse exponent vector over VarIds. Exponents may be
// negative; zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(const VarId& v, int exp = 1);

    const std::vector<std::pair<VarId, int>>& exps() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    int exponent(const VarId& v) const;
    int total_degree() const;
    int parameter_degree() const;  // total degree in Arrow/Q/AggT variables only

    Monomial times(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    // Canonical form: variables ascending, "name" or "name^e"; unit prints "1".
    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Constructs from a list that may be unsorted / contain zeros.
    static Monomial from_exps(std::vector<std::pair<VarId, int>> e);

private:
    std::vector<std::pair<VarId, int>> exps_;  // sorted by VarId, exponents nonzero
};

// Graded lexicographic order over the VarId order: compare total degree, then
// exponent vectors variable by variable ascending (absent exponent = 0,
// smaller exponent first).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact multivariate Laurent polynomial with Int coefficients.
// Terms are kept canonical: no zero coefficients. Values are immutable in
// spirit; all operations return fresh polynomials.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int, GradedLexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Int& c);
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    static LaurentPoly variable(const VarId& v, int exp = 1);
    static LaurentPoly term(const Monomial& m, const Int& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    // Single-term access; callers check term_count()==1 beforehand.
    const Monomial& only_monomial() const { return terms_.begin()->first; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&);

    LaurentPoly times_monomial(const Monomial& m, const Int& c = Int(1)) const;
    LaurentPoly pow(int k) const;  // k < 0 requires a unit-monomial base

    // Exact substitution v -> assignment[v]; unassigned variables are kept.
    // A negative power of v requires assignment[v] to be a unit monomial
    // (single term with coefficient +-1); otherwise NonInvertibleSubstitution.
    LaurentPoly substitute(const std::map<VarId, LaurentPoly>& assignment) const;

    // Drops terms whose parameter degree (Arrow/Q/AggT) exceeds cap.
    LaurentPoly truncate_parameter_degree(int cap) const;
    int max_parameter_degree() const;  // 0 for the zero polynomial

    // Exact division by (u - v) for distinct variables u, v, done by solving
    // the coefficient recursion in powers of u. Throws InexactDivision when
    // the division leaves a remainder.
    LaurentPoly divide_linear_exact(const VarId& u, const VarId& v) const;

    // Renames variables according to the map (used by symmetrizers).
    LaurentPoly rename(const std::map<VarId, VarId>& names) const;

    // All coefficients non-negative?
    bool nonnegative() const;

    // Canonical text form, bit-exact and parseable: terms in descending
    // graded-lex order joined by " + " / " - "; coefficient omitted when +-1
    // (unless the term is constant); exponent omitted when 1; zero prints "0".
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Int& c);
};

}  // namespace qks
