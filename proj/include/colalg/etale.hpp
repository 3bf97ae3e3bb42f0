#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "colalg/error.hpp"
#include "colalg/rings.hpp"

namespace colalg {

/// (first, second) is the pair (a, b) in R x R for the split torus and
/// a + b*sqrt(d) for a Kummer algebra. Addition and R-scaling are
/// coordinatewise in both cases; multiplication needs the algebra handle.
template <RingElement E>
struct EtaleElement {
    E first{};
    E second{};

    bool is_zero() const { return first.is_zero() && second.is_zero(); }

    friend EtaleElement operator+(const EtaleElement& x, const EtaleElement& y) { return {x.first + y.first, x.second + y.second}; }
    friend EtaleElement operator-(const EtaleElement& x, const EtaleElement& y) { return {x.first - y.first, x.second - y.second}; }
    friend EtaleElement operator-(const EtaleElement& x) { return {-x.first, -x.second}; }
    friend EtaleElement operator*(const E& r, const EtaleElement& x) { return {r * x.first, r * x.second}; }
    friend bool operator==(const EtaleElement&, const EtaleElement&) = default;
};

enum class EtaleKind { SplitTorus, Kummer };

/// Quadratic étale R-algebra S with its canonical involution.
template <CommutativeRing R>
class EtaleAlgebra {
public:
    using scalar_type = element_t<R>;
    using element_type = EtaleElement<scalar_type>;

    static EtaleAlgebra split(R base) { return EtaleAlgebra(std::move(base), EtaleKind::SplitTorus, {}); }

    /// R[x]/(x^2 - d); d must be a unit of R.
    static EtaleAlgebra kummer(R base, scalar_type d) {
        if (!base.is_unit(d))
            throw Error(ErrorCode::NotAUnit, "Kummer parameter " + base.format(d) + " is not a unit");
        return EtaleAlgebra(std::move(base), EtaleKind::Kummer, std::move(d));
    }

    const R& base() const { return base_; }
    EtaleKind kind() const { return kind_; }
    const scalar_type& d() const { return d_; }
    bool is_split() const { return kind_ == EtaleKind::SplitTorus; }

    element_type zero() const { return {base_.zero(), base_.zero()}; }
    element_type one() const { return is_split() ? element_type{base_.one(), base_.one()} : element_type{base_.one(), base_.zero()}; }
    element_type embed(const scalar_type& r) const { return is_split() ? element_type{r, r} : element_type{r, base_.zero()}; }
    /// sqrt(d) for Kummer, the idempotent (1, 0) for the split torus.
    element_type generator() const { return {base_.one(), base_.zero()}; }

    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    element_type mul(const element_type& x, const element_type& y) const {
        if (is_split()) return {x.first * y.first, x.second * y.second};
        return {x.first * y.first + d_ * (x.second * y.second), x.first * y.second + x.second * y.first};
    }

    element_type conj(const element_type& x) const {
        if (is_split()) return {x.second, x.first};
        return {x.first, -x.second};
    }

    /// n_S(x) = x * conj(x), as an element of R.
    scalar_type norm(const element_type& x) const {
        if (is_split()) return x.first * x.second;
        return x.first * x.first - d_ * (x.second * x.second);
    }

    /// t_S(x) = x + conj(x), as an element of R.
    scalar_type trace(const element_type& x) const {
        if (is_split()) return x.first + x.second;
        return x.first + x.first;
    }

    bool is_fixed(const element_type& x) const { return x == conj(x); }

    /// The R-element of a conj-fixed x.
    scalar_type fixed_part(const element_type& x) const {
        if (!is_fixed(x)) throw Error(ErrorCode::WrongRing, format(x) + " is not conjugation-fixed");
        return x.first;
    }

    bool is_unit(const element_type& x) const { return base_.is_unit(norm(x)); }
    element_type inverse(const element_type& x) const {
        auto n = norm(x);
        if (!base_.is_unit(n)) throw Error(ErrorCode::NotAUnit, format(x) + " is not a unit of " + name());
        return base_.inverse(n) * conj(x);
    }

    std::string format(const element_type& x) const {
        return "(" + base_.format(x.first) + ", " + base_.format(x.second) + ")";
    }
    std::string name() const {
        return is_split() ? base_.name() + "xR" : base_.name() + "[sqrt(" + base_.format(d_) + ")]";
    }

    nlohmann::json to_json(const element_type& x) const { return nlohmann::json::array({base_.format(x.first), base_.format(x.second)}); }
    element_type from_json(const nlohmann::json& j) const {
        if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
            throw Error(ErrorCode::ParseError, "etale element must be a pair of strings, got " + j.dump());
        return {base_.parse(j[0].get<std::string>()), base_.parse(j[1].get<std::string>())};
    }

    nlohmann::json spec_json() const {
        if (is_split()) return {{"kind", "split"}};
        return {{"kind", "kummer"}, {"d", base_.format(d_)}};
    }

private:
    EtaleAlgebra(R base, EtaleKind kind, scalar_type d) : base_(std::move(base)), kind_(kind), d_(std::move(d)) {}

    R base_;
    EtaleKind kind_;
    scalar_type d_;
};

template <CommutativeRing R>
EtaleAlgebra<R> etale_from_json(const R& base, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorCode::InvalidConfig, "etale spec must be an object with a string \"kind\"");
    auto kind = j["kind"].get<std::string>();
    if (kind == "split") return EtaleAlgebra<R>::split(base);
    if (kind == "kummer") {
        if (!j.contains("d") || !j["d"].is_string())
            throw Error(ErrorCode::InvalidConfig, "kummer spec needs string \"d\"");
        return EtaleAlgebra<R>::kummer(base, base.parse(j["d"].get<std::string>()));
    }
    throw Error(ErrorCode::InvalidConfig, "unknown etale kind '" + kind + "'");
}

}  // namespace colalg
