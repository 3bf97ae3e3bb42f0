#pragma once

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "json.hpp"

#include "colalg/algebras/common.hpp"

namespace colalg {

/// Common surface of every algebra family: an R-algebra that is free of
/// finite rank with fixed coordinates.
template <class A>
concept Algebra = requires(const A& alg, const typename A::element_type& x, const typename A::scalar_type& r,
                           const std::vector<typename A::scalar_type>& c, const nlohmann::json& j) {
    typename A::ring_type;
    { A::family } -> std::convertible_to<Family>;
    { alg.ring() } -> std::convertible_to<const typename A::ring_type&>;
    { alg.rank() } -> std::convertible_to<std::size_t>;
    { alg.zero() } -> std::same_as<typename A::element_type>;
    { alg.mul(x, x) } -> std::same_as<typename A::element_type>;
    { alg.add(x, x) } -> std::same_as<typename A::element_type>;
    { alg.sub(x, x) } -> std::same_as<typename A::element_type>;
    { alg.scale(r, x) } -> std::same_as<typename A::element_type>;
    { alg.equal(x, x) } -> std::convertible_to<bool>;
    { alg.coords(x) } -> std::same_as<std::vector<typename A::scalar_type>>;
    { alg.from_coords(c) } -> std::same_as<typename A::element_type>;
    { alg.to_json(x) } -> std::same_as<nlohmann::json>;
    { alg.from_json(j) } -> std::same_as<typename A::element_type>;
};

/// Unital quadratic algebra with norm n, trace t and involution.
template <class A>
concept QuadraticAlgebra = Algebra<A> && A::quadratic && requires(const A& alg, const typename A::element_type& x) {
    { alg.one() } -> std::same_as<typename A::element_type>;
    { alg.norm(x) } -> std::same_as<typename A::scalar_type>;
    { alg.trace(x) } -> std::same_as<typename A::scalar_type>;
    { alg.involution(x) } -> std::same_as<typename A::element_type>;
};

/// Families carrying a hermitian space P with x -> its P-component.
template <class A>
concept HermitianFamily = Algebra<A> && A::hermitian && requires(const A& alg, const typename A::element_type& x) {
    alg.space();
    alg.vector_part(x);
    alg.from_vector(alg.vector_part(x));
};

template <Algebra A>
typename A::element_type basis_element(const A& alg, std::size_t i) {
    std::vector<typename A::scalar_type> c(alg.rank(), alg.ring().zero());
    c.at(i) = alg.ring().one();
    return alg.from_coords(c);
}

template <Algebra A>
std::vector<typename A::element_type> basis(const A& alg) {
    std::vector<typename A::element_type> out;
    for (std::size_t i = 0; i < alg.rank(); ++i) out.push_back(basis_element(alg, i));
    return out;
}

/// n(x, y) = n(x + y) - n(x) - n(y).
template <QuadraticAlgebra A>
typename A::scalar_type polar_norm(const A& alg, const typename A::element_type& x, const typename A::element_type& y) {
    return alg.norm(alg.add(x, y)) - alg.norm(x) - alg.norm(y);
}

/// x = t(x)/2 * 1 + x0 with t(x0) = 0.
template <QuadraticAlgebra A>
std::pair<typename A::scalar_type, typename A::element_type> quadratic_decompose(const A& alg,
                                                                              const typename A::element_type& x) {
    const auto& ring = alg.ring();
    auto c = ring.inverse(ring.from_integer(2)) * alg.trace(x);
    return {c, alg.sub(x, alg.scale(c, alg.one()))};
}

/// Trace-zero projection of x0 y0; x0 y0 = -n(x0, y0)/2 * 1 + x0 x y0.
template <QuadraticAlgebra A>
typename A::element_type vector_product_of_quadratic(const A& alg, const typename A::element_type& x0,
                                                     const typename A::element_type& y0) {
    if (!alg.trace(x0).is_zero() || !alg.trace(y0).is_zero())
        throw Error(ErrorCode::NotTraceZero, "vector product needs trace-zero arguments");
    return quadratic_decompose(alg, alg.mul(x0, y0)).second;
}

/// All rank^2 basis products as rows {"i", "j", "product": coordinate strings}.
template <Algebra A>
nlohmann::json structure_constants(const A& alg) {
    auto b = basis(alg);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& c : alg.coords(alg.mul(b[i], b[j]))) coords.push_back(alg.ring().format(c));
            rows.push_back({{"i", i}, {"j", j}, {"product", coords}});
        }
    return rows;
}

}  // namespace colalg
