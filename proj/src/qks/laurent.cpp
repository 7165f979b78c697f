#include "qks/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qks/errors.hpp"

namespace qks {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(const VarId& v, int exp) {
    Monomial m;
    if (exp != 0) m.exps_.push_back({v, exp});
    return m;
}

Monomial Monomial::from_exps(std::vector<std::pair<VarId, int>> e) {
    std::sort(e.begin(), e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, k] : e) {
        if (k == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == v)
            m.exps_.back().second += k;
        else
            m.exps_.push_back({v, k});
    }
    std::erase_if(m.exps_, [](const auto& p) { return p.second == 0; });
    return m;
}

int Monomial::exponent(const VarId& v) const {
    for (const auto& [w, k] : exps_)
        if (w == v) return k;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, k] : exps_) d += k;
    return d;
}

int Monomial::parameter_degree() const {
    int d = 0;
    for (const auto& [v, k] : exps_)
        if (v.is_parameter()) d += k;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m;
    m.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first)
            m.exps_.push_back(*a++);
        else if (b->first < a->first)
            m.exps_.push_back(*b++);
        else {
            int k = a->second + b->second;
            if (k != 0) m.exps_.push_back({a->first, k});
            ++a, ++b;
        }
    }
    m.exps_.insert(m.exps_.end(), a, exps_.end());
    m.exps_.insert(m.exps_.end(), b, o.exps_.end());
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (auto& [v, k] : m.exps_) k = -k;
    return m;
}

Monomial Monomial::pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m = *this;
    for (auto& [v, e] : m.exps_) e *= k;
    return m;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, k] : exps_) {
        if (!s.empty()) s += "*";
        s += v.name;
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto i = a.exps().begin(), j = b.exps().begin();
    while (i != a.exps().end() || j != b.exps().end()) {
        // Exponent of the smallest not-yet-compared variable on each side.
        int ea = 0, eb = 0;
        if (j == b.exps().end() || (i != a.exps().end() && i->first < j->first)) {
            ea = i->second;
            ++i;
        } else if (i == a.exps().end() || j->first < i->first) {
            eb = j->second;
            ++j;
        } else {
            ea = i->second, eb = j->second;
            ++i, ++j;
        }
        if (ea != eb) return ea < eb;
    }
    return false;
}

// -------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) terms_[Monomial()] = c;
}

LaurentPoly LaurentPoly::variable(const VarId& v, int exp) {
    LaurentPoly p;
    p.terms_[Monomial::var(v, exp)] = 1;
    return p;
}

LaurentPoly LaurentPoly::term(const Monomial& m, const Int& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second == 1;
}

Int LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p += o;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p -= o;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) p.add_term(m1.times(m2), c1 * c2);
    return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::times_monomial(const Monomial& m, const Int& c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (const auto& [m1, c1] : terms_) p.terms_[m1.times(m)] = c1 * c;
    return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k == 0) return one();
    if (k < 0) {
        if (terms_.size() != 1)
            throw NonInvertibleSubstitution("negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw NonInvertibleSubstitution("negative power of a non-unit coefficient");
        Int cc = (k % 2 == 0) ? Int(1) : c;
        return term(m.pow(k), cc);
    }
    LaurentPoly p = one(), base = *this;
    for (int i = 0; i < k; ++i) p *= base;
    return p;
}

LaurentPoly LaurentPoly::substitute(const std::map<VarId, LaurentPoly>& assignment) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        LaurentPoly prod(c);
        Monomial untouched;
        for (const auto& [v, k] : m.exps()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                untouched = untouched.times(Monomial::var(v, k));
            } else {
                prod *= it->second.pow(k);
            }
        }
        out += prod.times_monomial(untouched);
    }
    return out;
}

LaurentPoly LaurentPoly::truncate_parameter_degree(int cap) const {
    LaurentPoly p;
    for (const auto& [m, c] : terms_)
        if (m.parameter_degree() <= cap) p.terms_[m] = c;
    return p;
}

int LaurentPoly::max_parameter_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.parameter_degree());
    return d;
}

LaurentPoly LaurentPoly::divide_linear_exact(const VarId& u, const VarId& v) const {
    if (is_zero()) return zero();
    // Split into coefficients of powers of u.
    std::map<int, LaurentPoly> by_exp;
    for (const auto& [m, c] : terms_) {
        int k = m.exponent(u);
        by_exp[k] += term(m.times(Monomial::var(u, -k)), c);
    }
    int lo = by_exp.begin()->first, hi = by_exp.rbegin()->first;
    // f = (u - v) q resolves as q_{k-1} = f_k + v*q_k, going down from k = hi.
    LaurentPoly quotient, carry;  // carry = q_k while processing exponent k
    for (int k = hi; k >= lo; --k) {
        LaurentPoly fk;
        if (auto it = by_exp.find(k); it != by_exp.end()) fk = it->second;
        LaurentPoly qk1 = fk + carry.times_monomial(Monomial::var(v));
        if (k == lo) {
            if (!qk1.is_zero())
                throw InexactDivision("remainder after dividing by (" + u.name +
                                      " - " + v.name + ")");
        } else {
            quotient += qk1.times_monomial(Monomial::var(u, k - 1));
            carry = qk1;
        }
    }
    return quotient;
}

LaurentPoly LaurentPoly::rename(const std::map<VarId, VarId>& names) const {
    LaurentPoly p;
    for (const auto& [m, c] : terms_) {
        std::vector<std::pair<VarId, int>> e;
        e.reserve(m.exps().size());
        for (const auto& [v, k] : m.exps()) {
            auto it = names.find(v);
            e.push_back({it == names.end() ? v : it->second, k});
        }
        p.add_term(Monomial::from_exps(std::move(e)), c);
    }
    return p;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        if (m.is_unit())
            s += a.get_str();
        else if (a == 1)
            s += m.str();
        else
            s += a.get_str() + "*" + m.str();
    }
    return s;
}

namespace {

// Minimal recursive-descent parser for the canonical grammar.
struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    void expect(char c) {
        if (done() || s[i] != c) throw ParseError("expected '" + std::string(1, c) + "' at " + std::to_string(i));
        ++i;
    }

    Int parse_int() {
        std::size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw ParseError("expected integer at " + std::to_string(i));
        Int v(s.substr(i, k - i));
        i = k;
        return v;
    }

    std::string parse_name() {
        std::size_t j = i;
        int depth = 0;
        while (j < s.size()) {
            char c = s[j];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '^' || c == '*' || c == ' ')) break;
            if (c == ')' && depth < 0) break;
            ++j;
        }
        if (j == i) throw ParseError("expected variable name at " + std::to_string(i));
        std::string n = s.substr(i, j - i);
        i = j;
        return n;
    }

    // term := int | [int*] factor (* factor)*
    // factor := name [^ int]
    std::pair<Monomial, Int> parse_term() {
        Int coeff = 1;
        std::vector<std::pair<VarId, int>> exps;
        bool lead_int = !done() && std::isdigit(static_cast<unsigned char>(peek()));
        if (lead_int) {
            coeff = parse_int();
            if (done() || peek() != '*') return {Monomial(), coeff};
            ++i;  // '*'
        }
        while (true) {
            std::string name = parse_name();
            int e = 1;
            if (!done() && peek() == '^') {
                ++i;
                e = static_cast<int>(parse_int().get_si());
            }
            exps.push_back({var_from_name(name), e});
            if (!done() && peek() == '*')
                ++i;
            else
                break;
        }
        return {Monomial::from_exps(std::move(exps)), coeff};
    }

    LaurentPoly parse() {
        LaurentPoly p;
        if (s == "0") return p;
        bool neg = false;
        if (!done() && peek() == '-') {
            neg = true;
            ++i;
        }
        while (true) {
            auto [m, c] = parse_term();
            p += LaurentPoly::term(m, neg ? -c : c);
            if (done()) break;
            if (s.compare(i, 3, " + ") == 0)
                neg = false, i += 3;
            else if (s.compare(i, 3, " - ") == 0)
                neg = true, i += 3;
            else
                throw ParseError("unexpected input at " + std::to_string(i));
        }
        return p;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    return PolyParser(text).parse();
}

}  // namespace qks
