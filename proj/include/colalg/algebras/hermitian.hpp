#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "colalg/algebras/common.hpp"
#include "colalg/trivec.hpp"

namespace colalg {

/// (a, u) in S + P.
template <RingElement E>
struct CayElement {
    EtaleElement<E> a{};
    Vec3<EtaleElement<E>> u{};

    bool is_zero() const { return a.is_zero() && u.is_zero(); }
    friend CayElement operator+(const CayElement& x, const CayElement& y) { return {x.a + y.a, x.u + y.u}; }
    friend CayElement operator-(const CayElement& x, const CayElement& y) { return {x.a - y.a, x.u - y.u}; }
    friend CayElement operator-(const CayElement& x) { return {-x.a, -x.u}; }
    friend CayElement operator*(const E& r, const CayElement& x) { return {r * x.a, r * x.u}; }
    friend bool operator==(const CayElement&, const CayElement&) = default;
};

/// (a, u) in R + P.
template <RingElement E>
struct ColHermElement {
    E a{};
    Vec3<EtaleElement<E>> u{};

    bool is_zero() const { return a.is_zero() && u.is_zero(); }
    friend ColHermElement operator+(const ColHermElement& x, const ColHermElement& y) { return {x.a + y.a, x.u + y.u}; }
    friend ColHermElement operator-(const ColHermElement& x, const ColHermElement& y) { return {x.a - y.a, x.u - y.u}; }
    friend ColHermElement operator-(const ColHermElement& x) { return {-x.a, -x.u}; }
    friend ColHermElement operator*(const E& r, const ColHermElement& x) { return {r * x.a, r * x.u}; }
    friend bool operator==(const ColHermElement&, const ColHermElement&) = default;
};

template <RingElement E>
struct WHermElement {
    Vec3<EtaleElement<E>> u{};

    bool is_zero() const { return u.is_zero(); }
    friend WHermElement operator+(const WHermElement& x, const WHermElement& y) { return {x.u + y.u}; }
    friend WHermElement operator-(const WHermElement& x, const WHermElement& y) { return {x.u - y.u}; }
    friend WHermElement operator-(const WHermElement& x) { return {-x.u}; }
    friend WHermElement operator*(const E& r, const WHermElement& x) { return {r * x.u}; }
    friend bool operator==(const WHermElement&, const WHermElement&) = default;
};

template <CommutativeRing R>
class HermitianBase {
public:
    using ring_type = R;
    using scalar_type = element_t<R>;
    using space_type = HermitianSpace<R>;
    using vector_type = typename space_type::vector_type;

    explicit HermitianBase(space_type space)
        : space_(std::move(space)), half_(ring().inverse(ring().from_integer(2))) {}

    const R& ring() const { return space_.base(); }
    const space_type& space() const { return space_; }
    const EtaleAlgebra<R>& etale() const { return space_.etale(); }
    const scalar_type& half() const { return half_; }

    nlohmann::json spec_json() const { return space_.spec_json(); }

protected:
    vector_type vector_from_json(const nlohmann::json& j, const char* key) const {
        try {
            return space_.vector_from_json(detail::field(j, key));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            throw Error(ErrorCode::ParseError, std::string(key) + ": " + e.what());
        }
    }

    space_type space_;
    scalar_type half_;
};

/// Octonion algebra Cay(S, P, h, alpha) on S + P, rank 8 over R.
template <CommutativeRing R>
class CayAlgebra : public HermitianBase<R> {
public:
    using typename HermitianBase<R>::scalar_type;
    using typename HermitianBase<R>::vector_type;
    using element_type = CayElement<scalar_type>;

    static constexpr Family family = Family::Cay;
    static constexpr bool unital = true;
    static constexpr bool quadratic = true;
    static constexpr bool composition = true;
    static constexpr bool anticommutative = false;
    static constexpr bool hermitian = true;

    explicit CayAlgebra(HermitianSpace<R> space) : HermitianBase<R>(std::move(space)) {}

    std::size_t rank() const { return 8; }
    std::vector<std::string> basis_labels() const {
        auto v = detail::etale_vector_labels("u");
        v.insert(v.begin(), {"a.0", "a.1"});
        return v;
    }
    std::string name() const { return "Cay(" + this->etale().name() + ")"; }

    element_type zero() const { return {this->etale().zero(), this->space_.zero_vector()}; }
    element_type one() const { return {this->etale().one(), this->space_.zero_vector()}; }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    /// (ab - h(v,u), a v + conj(b) u + u x v).
    element_type mul(const element_type& x, const element_type& y) const {
        const auto& s = this->etale();
        const auto& p = this->space_;
        return {s.sub(s.mul(x.a, y.a), p.herm(y.u, x.u)),
                p.scale(x.a, y.u) + p.scale(s.conj(y.a), x.u) + p.cross(x.u, y.u)};
    }

    /// n_S(a) + h(u,u).
    scalar_type norm(const element_type& x) const { return this->etale().norm(x.a) + this->space_.quadratic(x.u); }
    scalar_type trace(const element_type& x) const { return this->etale().trace(x.a); }
    element_type involution(const element_type& x) const { return {this->etale().conj(x.a), -x.u}; }

    vector_type vector_part(const element_type& x) const { return x.u; }
    element_type from_vector(const vector_type& u) const { return {this->etale().zero(), u}; }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c;
        detail::push(c, x.a);
        detail::push(c, x.u);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        element_type x;
        x.a = rd.etale();
        x.u = rd.etale_vec();
        return x;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"a", this->etale().to_json(x.a)}, {"u", this->space_.vector_to_json(x.u)}};
    }
    element_type from_json(const nlohmann::json& j) const {
        return {this->etale().from_json(detail::field(j, "a")), this->vector_from_json(j, "u")};
    }
};

/// Colour algebra Col(S, P, h, alpha) on R + P, rank 7 over R.
template <CommutativeRing R>
class ColHermAlgebra : public HermitianBase<R> {
public:
    using typename HermitianBase<R>::scalar_type;
    using typename HermitianBase<R>::vector_type;
    using element_type = ColHermElement<scalar_type>;

    static constexpr Family family = Family::ColHerm;
    static constexpr bool unital = true;
    static constexpr bool quadratic = true;
    static constexpr bool composition = false;
    static constexpr bool anticommutative = false;
    static constexpr bool hermitian = true;

    explicit ColHermAlgebra(HermitianSpace<R> space) : HermitianBase<R>(std::move(space)) {}

    std::size_t rank() const { return 7; }
    std::vector<std::string> basis_labels() const {
        auto v = detail::etale_vector_labels("u");
        v.insert(v.begin(), "1");
        return v;
    }
    std::string name() const { return "Col(" + this->etale().name() + ")"; }

    element_type zero() const { return {this->ring().zero(), this->space_.zero_vector()}; }
    element_type one() const { return {this->ring().one(), this->space_.zero_vector()}; }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    /// (ab - (h(u,v) + conj h(u,v))/2, a v + b u + u x v).
    element_type mul(const element_type& x, const element_type& y) const {
        return {x.a * y.a - this->half_ * this->space_.bilinear(x.u, y.u),
                x.a * y.u + y.a * x.u + this->space_.cross(x.u, y.u)};
    }

    /// a^2 + h(u,u).
    scalar_type norm(const element_type& x) const { return x.a * x.a + this->space_.quadratic(x.u); }
    scalar_type trace(const element_type& x) const { return x.a + x.a; }
    element_type involution(const element_type& x) const { return {x.a, -x.u}; }

    vector_type vector_part(const element_type& x) const { return x.u; }
    element_type from_vector(const vector_type& u) const { return {this->ring().zero(), u}; }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c{x.a};
        detail::push(c, x.u);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        element_type x;
        x.a = rd.next();
        x.u = rd.etale_vec();
        return x;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"a", this->ring().format(x.a)}, {"u", this->space_.vector_to_json(x.u)}};
    }
    element_type from_json(const nlohmann::json& j) const {
        return {detail::scalar_from_json(this->ring(), detail::field(j, "a"), "a"), this->vector_from_json(j, "u")};
    }
};

/// Vector colour algebra W(S, P, h, alpha) = (P, x_alpha), rank 6 over R.
template <CommutativeRing R>
class WHermAlgebra : public HermitianBase<R> {
public:
    using typename HermitianBase<R>::scalar_type;
    using typename HermitianBase<R>::vector_type;
    using element_type = WHermElement<scalar_type>;

    static constexpr Family family = Family::WHerm;
    static constexpr bool unital = false;
    static constexpr bool quadratic = false;
    static constexpr bool composition = false;
    static constexpr bool anticommutative = true;
    static constexpr bool hermitian = true;

    explicit WHermAlgebra(HermitianSpace<R> space) : HermitianBase<R>(std::move(space)) {}

    std::size_t rank() const { return 6; }
    std::vector<std::string> basis_labels() const { return detail::etale_vector_labels("u"); }
    std::string name() const { return "W(" + this->etale().name() + ")"; }

    element_type zero() const { return {this->space_.zero_vector()}; }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    element_type mul(const element_type& x, const element_type& y) const { return {this->space_.cross(x.u, y.u)}; }

    /// n(v) = h(v, v) in the quartic identity ((u v) v) v = n(v) (u v).
    scalar_type quartic_norm(const element_type& v) const { return this->space_.quadratic(v.u); }

    vector_type vector_part(const element_type& x) const { return x.u; }
    element_type from_vector(const vector_type& u) const { return {u}; }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c;
        detail::push(c, x.u);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        return {rd.etale_vec()};
    }

    nlohmann::json to_json(const element_type& x) const { return {{"u", this->space_.vector_to_json(x.u)}}; }
    element_type from_json(const nlohmann::json& j) const { return {this->vector_from_json(j, "u")}; }
};

}  // namespace colalg
