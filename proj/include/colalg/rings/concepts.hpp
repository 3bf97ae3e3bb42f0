#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace colalg {

/// A value type with exact ring arithmetic. Equality is structural on the
/// canonical form, so `==` is ring equality.
template <class E>
concept RingElement = std::regular<E> && requires(const E& a, const E& b) {
    { a + b } -> std::same_as<E>;
    { a - b } -> std::same_as<E>;
    { a * b } -> std::same_as<E>;
    { -a } -> std::same_as<E>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// A ring handle: owns whatever context the elements need (modulus,
/// variable names) and exposes constants, units, and text I/O.
template <class K>
concept CommutativeRing = RingElement<typename K::element_type> &&
    requires(const K& ring, const typename K::element_type& x, const mpz_class& z,
             std::string_view text) {
        { ring.zero() } -> std::same_as<typename K::element_type>;
        { ring.one() } -> std::same_as<typename K::element_type>;
        { ring.from_integer(z) } -> std::same_as<typename K::element_type>;
        { ring.is_unit(x) } -> std::convertible_to<bool>;
        { ring.inverse(x) } -> std::same_as<typename K::element_type>;
        { ring.parse(text) } -> std::same_as<typename K::element_type>;
        { ring.format(x) } -> std::convertible_to<std::string>;
        { ring.is_field() } -> std::convertible_to<bool>;
    };

/// Handle-style arithmetic shared by the base rings and the étale algebras,
/// so the 3x3 linear algebra can be written once for both.
template <class Elem>
struct OperatorArithmetic {
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

template <class K>
using element_t = typename K::element_type;

}  // namespace colalg
