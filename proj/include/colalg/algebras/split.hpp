#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "colalg/algebras/common.hpp"
#include "colalg/trivec.hpp"

namespace colalg {

// ---------------------------------------------------------------------------
// Elements

/// [[a, u], [ud, a]] with u in T and ud in the dual of T.
template <RingElement E>
struct ColSplitElement {
    E a{};
    Vec3<E> u{};
    DualVec3<E> ud{};

    bool is_zero() const { return a.is_zero() && u.is_zero() && ud.is_zero(); }
    friend ColSplitElement operator+(const ColSplitElement& x, const ColSplitElement& y) { return {x.a + y.a, x.u + y.u, x.ud + y.ud}; }
    friend ColSplitElement operator-(const ColSplitElement& x, const ColSplitElement& y) { return {x.a - y.a, x.u - y.u, x.ud - y.ud}; }
    friend ColSplitElement operator-(const ColSplitElement& x) { return {-x.a, -x.u, -x.ud}; }
    friend ColSplitElement operator*(const E& r, const ColSplitElement& x) { return {r * x.a, r * x.u, r * x.ud}; }
    friend bool operator==(const ColSplitElement&, const ColSplitElement&) = default;
};

/// Vector matrix [[a, u], [ud, ap]].
template <RingElement E>
struct ZornElement {
    E a{};
    Vec3<E> u{};
    DualVec3<E> ud{};
    E ap{};

    bool is_zero() const { return a.is_zero() && u.is_zero() && ud.is_zero() && ap.is_zero(); }
    friend ZornElement operator+(const ZornElement& x, const ZornElement& y) { return {x.a + y.a, x.u + y.u, x.ud + y.ud, x.ap + y.ap}; }
    friend ZornElement operator-(const ZornElement& x, const ZornElement& y) { return {x.a - y.a, x.u - y.u, x.ud - y.ud, x.ap - y.ap}; }
    friend ZornElement operator-(const ZornElement& x) { return {-x.a, -x.u, -x.ud, -x.ap}; }
    friend ZornElement operator*(const E& r, const ZornElement& x) { return {r * x.a, r * x.u, r * x.ud, r * x.ap}; }
    friend bool operator==(const ZornElement&, const ZornElement&) = default;
};

template <RingElement E>
struct WSplitElement {
    Vec3<E> u{};
    DualVec3<E> ud{};

    bool is_zero() const { return u.is_zero() && ud.is_zero(); }
    friend WSplitElement operator+(const WSplitElement& x, const WSplitElement& y) { return {x.u + y.u, x.ud + y.ud}; }
    friend WSplitElement operator-(const WSplitElement& x, const WSplitElement& y) { return {x.u - y.u, x.ud - y.ud}; }
    friend WSplitElement operator-(const WSplitElement& x) { return {-x.u, -x.ud}; }
    friend WSplitElement operator*(const E& r, const WSplitElement& x) { return {r * x.u, r * x.ud}; }
    friend bool operator==(const WSplitElement&, const WSplitElement&) = default;
};

// ---------------------------------------------------------------------------
// Shared state of the three constructions on T = R^3 with trivialization lambda.

template <CommutativeRing R>
class SplitBase {
public:
    using ring_type = R;
    using scalar_type = element_t<R>;

    SplitBase(R ring, const scalar_type& lambda)
        : ring_(std::move(ring)),
          alpha_(make_trivialization(ring_, lambda)),
          beta_(dual_trivialization(ring_, alpha_)),
          half_(ring_.inverse(ring_.from_integer(2))) {}

    const R& ring() const { return ring_; }
    const Trivialization<scalar_type>& alpha() const { return alpha_; }
    const Trivialization<scalar_type>& beta() const { return beta_; }
    const scalar_type& lambda() const { return alpha_.lambda; }
    const scalar_type& half() const { return half_; }

    nlohmann::json spec_json() const { return {{"lambda", ring_.format(alpha_.lambda)}}; }

protected:
    nlohmann::json vec_json(const std::array<scalar_type, 3>& c) const { return detail::coords_to_json(ring_, c); }

    R ring_;
    Trivialization<scalar_type> alpha_;
    Trivialization<scalar_type> beta_;
    scalar_type half_;
};

// ---------------------------------------------------------------------------

/// Split colour algebra Col(T, alpha) on R + T + dual(T), rank 7.
template <CommutativeRing R>
class ColSplitAlgebra : public SplitBase<R> {
public:
    using typename SplitBase<R>::scalar_type;
    using element_type = ColSplitElement<scalar_type>;

    static constexpr Family family = Family::ColSplit;
    static constexpr bool unital = true;
    static constexpr bool quadratic = true;
    static constexpr bool composition = false;
    static constexpr bool anticommutative = false;
    static constexpr bool hermitian = false;

    ColSplitAlgebra(R ring, const scalar_type& lambda) : SplitBase<R>(std::move(ring), lambda) {}
    explicit ColSplitAlgebra(R ring) : ColSplitAlgebra(ring, ring.one()) {}

    std::size_t rank() const { return 7; }
    std::vector<std::string> basis_labels() const { return {"1", "u1", "u2", "u3", "ud1", "ud2", "ud3"}; }
    std::string name() const { return "Col(" + this->ring_.name() + ", " + this->ring_.format(this->lambda()) + ")"; }

    element_type zero() const {
        auto z = this->ring_.zero();
        return {z, {{z, z, z}}, {{z, z, z}}};
    }
    element_type one() const {
        auto x = zero();
        x.a = this->ring_.one();
        return x;
    }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    /// (ab + (<u,vd> + <v,ud>)/2, av + bu - ud x vd, b ud + a vd + u x v).
    element_type mul(const element_type& x, const element_type& y) const {
        return {x.a * y.a + this->half_ * (pairing(x.u, y.ud) + pairing(y.u, x.ud)),
                x.a * y.u + y.a * x.u - dual_twisted_cross(this->beta_, x.ud, y.ud),
                y.a * x.ud + x.a * y.ud + twisted_cross(this->alpha_, x.u, y.u)};
    }

    scalar_type norm(const element_type& x) const { return x.a * x.a - pairing(x.u, x.ud); }
    scalar_type trace(const element_type& x) const { return x.a + x.a; }
    element_type involution(const element_type& x) const { return {x.a, -x.u, -x.ud}; }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c{x.a};
        detail::push(c, x.u.c);
        detail::push(c, x.ud.c);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        element_type x;
        x.a = rd.next();
        x.u = rd.vec();
        x.ud = rd.dual();
        return x;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"a", this->ring_.format(x.a)}, {"u", this->vec_json(x.u.c)}, {"ud", this->vec_json(x.ud.c)}};
    }
    element_type from_json(const nlohmann::json& j) const {
        return {detail::scalar_from_json(this->ring_, detail::field(j, "a"), "a"),
                {detail::coords_from_json(this->ring_, detail::field(j, "u"), "u")},
                {detail::coords_from_json(this->ring_, detail::field(j, "ud"), "ud")}};
    }
};

/// Zorn vector matrices Zor(T, alpha), rank 8; lambda = 1 is the classical Zorn algebra.
template <CommutativeRing R>
class ZornAlgebra : public SplitBase<R> {
public:
    using typename SplitBase<R>::scalar_type;
    using element_type = ZornElement<scalar_type>;

    static constexpr Family family = Family::Zorn;
    static constexpr bool unital = true;
    static constexpr bool quadratic = true;
    static constexpr bool composition = true;
    static constexpr bool anticommutative = false;
    static constexpr bool hermitian = false;

    ZornAlgebra(R ring, const scalar_type& lambda) : SplitBase<R>(std::move(ring), lambda) {}
    explicit ZornAlgebra(R ring) : ZornAlgebra(ring, ring.one()) {}

    std::size_t rank() const { return 8; }
    std::vector<std::string> basis_labels() const { return {"a", "u1", "u2", "u3", "ud1", "ud2", "ud3", "ap"}; }
    std::string name() const { return "Zor(" + this->ring_.name() + ", " + this->ring_.format(this->lambda()) + ")"; }

    element_type zero() const {
        auto z = this->ring_.zero();
        return {z, {{z, z, z}}, {{z, z, z}}, z};
    }
    element_type one() const {
        auto x = zero();
        x.a = x.ap = this->ring_.one();
        return x;
    }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    element_type mul(const element_type& x, const element_type& y) const {
        return {x.a * y.a + pairing(x.u, y.ud),
                x.a * y.u + y.ap * x.u - dual_twisted_cross(this->beta_, x.ud, y.ud),
                y.a * x.ud + x.ap * y.ud + twisted_cross(this->alpha_, x.u, y.u),
                pairing(y.u, x.ud) + x.ap * y.ap};
    }

    /// det = a ap - <u, ud>.
    scalar_type norm(const element_type& x) const { return x.a * x.ap - pairing(x.u, x.ud); }
    scalar_type trace(const element_type& x) const { return x.a + x.ap; }
    element_type involution(const element_type& x) const { return {x.ap, -x.u, -x.ud, x.a}; }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c{x.a};
        detail::push(c, x.u.c);
        detail::push(c, x.ud.c);
        c.push_back(x.ap);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        element_type x;
        x.a = rd.next();
        x.u = rd.vec();
        x.ud = rd.dual();
        x.ap = rd.next();
        return x;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"a", this->ring_.format(x.a)},
                {"u", this->vec_json(x.u.c)},
                {"ud", this->vec_json(x.ud.c)},
                {"ap", this->ring_.format(x.ap)}};
    }
    element_type from_json(const nlohmann::json& j) const {
        return {detail::scalar_from_json(this->ring_, detail::field(j, "a"), "a"),
                {detail::coords_from_json(this->ring_, detail::field(j, "u"), "u")},
                {detail::coords_from_json(this->ring_, detail::field(j, "ud"), "ud")},
                detail::scalar_from_json(this->ring_, detail::field(j, "ap"), "ap")};
    }
};

/// Split vector colour algebra W(T, alpha) on T + dual(T), rank 6.
template <CommutativeRing R>
class WSplitAlgebra : public SplitBase<R> {
public:
    using typename SplitBase<R>::scalar_type;
    using element_type = WSplitElement<scalar_type>;

    static constexpr Family family = Family::WSplit;
    static constexpr bool unital = false;
    static constexpr bool quadratic = false;
    static constexpr bool composition = false;
    static constexpr bool anticommutative = true;
    static constexpr bool hermitian = false;

    WSplitAlgebra(R ring, const scalar_type& lambda) : SplitBase<R>(std::move(ring), lambda) {}
    explicit WSplitAlgebra(R ring) : WSplitAlgebra(ring, ring.one()) {}

    std::size_t rank() const { return 6; }
    std::vector<std::string> basis_labels() const { return {"u1", "u2", "u3", "ud1", "ud2", "ud3"}; }
    std::string name() const { return "W(" + this->ring_.name() + ", " + this->ring_.format(this->lambda()) + ")"; }

    element_type zero() const {
        auto z = this->ring_.zero();
        return {{{z, z, z}}, {{z, z, z}}};
    }
    element_type add(const element_type& x, const element_type& y) const { return x + y; }
    element_type sub(const element_type& x, const element_type& y) const { return x - y; }
    element_type neg(const element_type& x) const { return -x; }
    element_type scale(const scalar_type& r, const element_type& x) const { return r * x; }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    /// (-ud x vd, u x v).
    element_type mul(const element_type& x, const element_type& y) const {
        return {-dual_twisted_cross(this->beta_, x.ud, y.ud), twisted_cross(this->alpha_, x.u, y.u)};
    }

    /// The scalar n((v, vd)) = -<v, vd> attached to the quartic identity
    /// ((w v) v) v = n(v) (w v).
    scalar_type quartic_norm(const element_type& v) const { return -pairing(v.u, v.ud); }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c;
        detail::push(c, x.u.c);
        detail::push(c, x.ud.c);
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        detail::CoordReader<scalar_type> rd{c};
        element_type x;
        x.u = rd.vec();
        x.ud = rd.dual();
        return x;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"u", this->vec_json(x.u.c)}, {"ud", this->vec_json(x.ud.c)}};
    }
    element_type from_json(const nlohmann::json& j) const {
        return {{detail::coords_from_json(this->ring_, detail::field(j, "u"), "u")},
                {detail::coords_from_json(this->ring_, detail::field(j, "ud"), "ud")}};
    }
};

}  // namespace colalg
