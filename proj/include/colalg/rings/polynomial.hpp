#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colalg/error.hpp"
#include "colalg/rings/concepts.hpp"
#include "colalg/rings/parse.hpp"

namespace colalg {

/// Exponent vector t0^e0 * ... * tn^en.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    std::uint32_t degree() const { return std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0}); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r{a.exponents.size() >= b.exponents.size() ? a.exponents : b.exponents};
        const auto& other = a.exponents.size() >= b.exponents.size() ? b.exponents : a.exponents;
        for (std::size_t i = 0; i < other.size(); ++i) r.exponents[i] += other[i];
        return r;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order, largest first: total degree, then t0 > t1 > ...
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

/// All monomials of total degree `degree` in `nvars` variables, grlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars, 0);
    // Recursive fill: exponent of variable i ranges downward so the output is
    // lexicographically descending.
    auto fill = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
        if (i + 1 == nvars) {
            e[i] = remaining;
            out.push_back(Monomial{e});
            return;
        }
        for (std::uint32_t k = remaining + 1; k-- > 0;) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial{});
        return out;
    }
    fill(fill, 0, degree);
    return out;
}

/// Sparse polynomial with coefficients in C; no stored zero coefficients.
template <RingElement C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C, GrlexDescending>;

    Polynomial() = default;

    static Polynomial term(Monomial m, C c) {
        Polynomial p;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    /// -1 for the zero polynomial.
    long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree()); }

    bool is_constant() const { return terms_.empty() || terms_.begin()->first.degree() == 0; }

    bool is_homogeneous(std::uint32_t degree) const {
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == degree; });
    }

    Polynomial homogeneous_component(std::uint32_t degree) const {
        Polynomial p;
        for (const auto& [m, c] : terms_)
            if (m.degree() == degree) p.terms_.emplace(m, c);
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Base[t0, ..., tk] over one of the scalar rings.
template <CommutativeRing Base>
class PolynomialRing : public OperatorArithmetic<Polynomial<element_t<Base>>> {
public:
    using coefficient_type = element_t<Base>;
    using element_type = Polynomial<coefficient_type>;

    PolynomialRing(Base base, std::vector<std::string> variables)
        : base_(std::move(base)), vars_(std::move(variables)) {
        if (vars_.empty()) throw Error(ErrorCode::InvalidConfig, "polynomial ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[i] == vars_[j]) throw Error(ErrorCode::InvalidConfig, "duplicate variable '" + vars_[i] + "'");
    }

    const Base& base() const { return base_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }

    Monomial unit_monomial() const { return Monomial{std::vector<std::uint32_t>(vars_.size(), 0)}; }

    element_type constant(const coefficient_type& c) const { return element_type::term(unit_monomial(), c); }
    element_type zero() const { return element_type(); }
    element_type one() const { return constant(base_.one()); }
    element_type from_integer(const mpz_class& z) const { return constant(base_.from_integer(z)); }
    element_type variable(std::size_t i) const {
        Monomial m = unit_monomial();
        m.exponents.at(i) = 1;
        return element_type::term(std::move(m), base_.one());
    }

    /// Only nonzero constants with a unit coefficient are invertible.
    bool is_unit(const element_type& x) const {
        return !x.is_zero() && x.is_constant() && base_.is_unit(x.terms().begin()->second);
    }
    element_type inverse(const element_type& x) const {
        if (!is_unit(x)) throw Error(ErrorCode::NotAUnit, format(x) + " is not a unit of " + name());
        return constant(base_.inverse(x.terms().begin()->second));
    }
    bool is_field() const { return false; }
    bool is_finite() const { return false; }

    element_type parse(std::string_view text) const {
        element_type result;
        for (const auto& t : detail::parse_expression(text)) {
            Monomial m = unit_monomial();
            for (const auto& v : t.variables) {
                auto it = std::find(vars_.begin(), vars_.end(), v.name);
                if (it == vars_.end()) throw ParseError(v.position, "unknown variable '" + v.name + "'");
                m.exponents[static_cast<std::size_t>(it - vars_.begin())] += v.exponent;
            }
            result.add_term(m, detail::coefficient_in(base_, t.coefficient, t.position));
        }
        return result;
    }

    std::string format(const element_type& x) const {
        if (x.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : x.terms()) {
            bool neg = is_negative(c);
            coefficient_type mag = neg ? -c : c;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono = format_monomial(m);
            if (mono.empty()) {
                out += base_.format(mag);
            } else if (mag == base_.one()) {
                out += mono;
            } else {
                out += base_.format(mag) + "*" + mono;
            }
        }
        return out;
    }

    std::string format_monomial(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
        }
        return s;
    }

    std::string name() const {
        std::string s = base_.name() + "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
        return s + "]";
    }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
        return a.base_ == b.base_ && a.vars_ == b.vars_;
    }

private:
    Base base_;
    std::vector<std::string> vars_;
};

}  // namespace colalg
