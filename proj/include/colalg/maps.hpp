#pragma once

#include <functional>
#include <string>
#include <utility>

#include "json.hpp"

#include "colalg/algebras.hpp"
#include "colalg/checks/report.hpp"
#include "colalg/checks/sampler.hpp"
#include "colalg/error.hpp"
#include "colalg/trivec.hpp"

namespace colalg {

/// Matrix acting on column vectors; with `conjugate` set the map is
/// x -> M conj(x), i.e. semilinear for the involution of S.
template <class E>
struct LinearMap3 {
    Mat3<E> matrix;
    bool conjugate = false;
};

template <CommutativeRing R>
Vec3<EtaleElement<element_t<R>>> apply(const HermitianSpace<R>& p, const LinearMap3<EtaleElement<element_t<R>>>& f,
                                       const Vec3<EtaleElement<element_t<R>>>& x) {
    return mat_vec(p.etale(), f.matrix, f.conjugate ? p.conj(x) : x);
}

/// conj(M)^T.
template <CommutativeRing R>
Mat3<EtaleElement<element_t<R>>> adjoint(const EtaleAlgebra<R>& s, const Mat3<EtaleElement<element_t<R>>>& a) {
    Mat3<EtaleElement<element_t<R>>> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = s.conj(a(j, i));
    return r;
}

template <CommutativeRing R>
Mat3<EtaleElement<element_t<R>>> conj_entries(const EtaleAlgebra<R>& s, const Mat3<EtaleElement<element_t<R>>>& a) {
    Mat3<EtaleElement<element_t<R>>> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = s.conj(a(i, j));
    return r;
}

template <class K, class E>
nlohmann::json matrix_to_json(const K& k, const Mat3<E>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < 3; ++j) {
            if constexpr (requires { k.to_json(m(i, j)); }) {
                row.push_back(k.to_json(m(i, j)));
            } else {
                row.push_back(k.format(m(i, j)));
            }
        }
        rows.push_back(row);
    }
    return rows;
}

/// 3x3 matrix of ring-element strings.
template <CommutativeRing R>
Mat3<element_t<R>> scalar_matrix_from_json(const R& ring, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidConfig, "matrix must be a 3x3 array");
    Mat3<element_t<R>> m;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) throw Error(ErrorCode::InvalidConfig, "matrix must be a 3x3 array");
        for (std::size_t k = 0; k < 3; ++k) m(i, k) = detail::scalar_from_json(ring, j[i][k], "matrix entry");
    }
    return m;
}

// ---------------------------------------------------------------------------

/// A map between two algebras, carried as a closure plus a description.
template <Algebra Dom, Algebra Cod>
struct AlgebraMap {
    std::string kind;
    Dom domain;
    Cod codomain;
    std::function<typename Cod::element_type(const typename Dom::element_type&)> apply;
    nlohmann::json params = nlohmann::json::object();

    typename Cod::element_type operator()(const typename Dom::element_type& x) const { return apply(x); }
    nlohmann::json to_json() const { return {{"kind", kind}, {"params", params}}; }
};

template <Algebra A>
AlgebraMap<A, A> identity_map(const A& alg) {
    return {"identity", alg, alg, [](const typename A::element_type& x) { return x; }};
}

// ---------------------------------------------------------------------------
// Maps between split algebras built from phi: T -> T'.

namespace detail {

template <class R>
void require_morphism_condition(const R& ring, const element_t<R>& det, const element_t<R>& lambda,
                                const element_t<R>& lambda_prime) {
    if (!ring.is_unit(det)) throw Error(ErrorCode::NotAUnit, "det(phi) = " + ring.format(det) + " is not a unit");
    if (!(det * lambda_prime == lambda))
        throw Error(ErrorCode::MorphismConditionFailed, "det(phi) * lambda' = " + ring.format(det * lambda_prime) +
                                                            " but lambda = " + ring.format(lambda));
}

/// (phi(u), phi^{-T}(ud)) for a split element's vector slots.
template <class R>
struct DiagonalAction {
    R ring;
    Mat3<element_t<R>> phi;
    Mat3<element_t<R>> phi_inv_t;

    Vec3<element_t<R>> on_vector(const Vec3<element_t<R>>& u) const { return mat_vec(ring, phi, u); }
    DualVec3<element_t<R>> on_dual(const DualVec3<element_t<R>>& ud) const {
        return transpose(mat_vec(ring, phi_inv_t, transpose(ud)));
    }
};

template <class R>
DiagonalAction<R> diagonal_action(const R& ring, const Mat3<element_t<R>>& phi) {
    return {ring, phi, transpose(inverse3(ring, phi))};
}

}  // namespace detail

/// (a, u, ud) -> (a, phi u, phi^{-T} ud) without checking det(phi) lambda' = lambda.
template <CommutativeRing R>
AlgebraMap<ColSplitAlgebra<R>, ColSplitAlgebra<R>> diagonal_map(const ColSplitAlgebra<R>& dom,
                                                                const ColSplitAlgebra<R>& cod,
                                                                const Mat3<element_t<R>>& phi) {
    auto act = detail::diagonal_action(dom.ring(), phi);
    return {"diagonal", dom, cod,
            [act](const ColSplitElement<element_t<R>>& x) {
                return ColSplitElement<element_t<R>>{x.a, act.on_vector(x.u), act.on_dual(x.ud)};
            },
            {{"phi", matrix_to_json(dom.ring(), phi)}}};
}

template <CommutativeRing R>
AlgebraMap<ZornAlgebra<R>, ZornAlgebra<R>> diagonal_map(const ZornAlgebra<R>& dom, const ZornAlgebra<R>& cod,
                                                        const Mat3<element_t<R>>& phi) {
    auto act = detail::diagonal_action(dom.ring(), phi);
    return {"diagonal", dom, cod,
            [act](const ZornElement<element_t<R>>& x) {
                return ZornElement<element_t<R>>{x.a, act.on_vector(x.u), act.on_dual(x.ud), x.ap};
            },
            {{"phi", matrix_to_json(dom.ring(), phi)}}};
}

/// Col(T, lambda) -> Col(T', lambda') (or Zor) induced by phi; requires det(phi) lambda' = lambda.
template <class A>
    requires(A::family == Family::ColSplit || A::family == Family::Zorn)
AlgebraMap<A, A> diagonal_iso(const A& dom, const A& cod, const Mat3<typename A::scalar_type>& phi) {
    detail::require_morphism_condition(dom.ring(), det3(dom.ring(), phi), dom.lambda(), cod.lambda());
    return diagonal_map(dom, cod, phi);
}

/// Col(T, alpha) -> Col(dual T, beta): (a, u, ud) -> (a, -ud, -u).
template <CommutativeRing R>
AlgebraMap<ColSplitAlgebra<R>, ColSplitAlgebra<R>> dual_iso(const ColSplitAlgebra<R>& dom) {
    ColSplitAlgebra<R> cod(dom.ring(), dom.beta().lambda);
    return {"dual", dom, cod, [](const ColSplitElement<element_t<R>>& x) {
                return ColSplitElement<element_t<R>>{x.a, -transpose(x.ud), -transpose(x.u)};
            }};
}

/// Zor(T, alpha) -> Zor(dual T, beta): (a, u, ud, ap) -> (ap, -ud, -u, a).
template <CommutativeRing R>
AlgebraMap<ZornAlgebra<R>, ZornAlgebra<R>> dual_iso(const ZornAlgebra<R>& dom) {
    ZornAlgebra<R> cod(dom.ring(), dom.beta().lambda);
    return {"dual", dom, cod, [](const ZornElement<element_t<R>>& x) {
                return ZornElement<element_t<R>>{x.ap, -transpose(x.ud), -transpose(x.u), x.a};
            }};
}

/// (a, u, ud) -> (a, mu u, mu^{-1} ud) for mu^3 = 1.
template <class A>
    requires(A::family == Family::ColSplit || A::family == Family::Zorn)
AlgebraMap<A, A> cube_root_auto(const A& alg, const typename A::scalar_type& mu) {
    const auto& ring = alg.ring();
    if (!(mu * mu * mu == ring.one()))
        throw Error(ErrorCode::NotCubeRoot, ring.format(mu) + "^3 = " + ring.format(mu * mu * mu) + ", not 1");
    auto inv = ring.inverse(mu);
    return {"cube-root", alg, alg,
            [mu, inv](typename A::element_type x) {
                x.u = mu * x.u;
                x.ud = inv * x.ud;
                return x;
            },
            {{"mu", ring.format(mu)}}};
}

// ---------------------------------------------------------------------------
// Hermitian spaces: isometries, unitary groups, lambda_{u,v}.

/// Validates f: (P, h, alpha) -> (P', h', alpha').
///
/// S-linear f = M: M^* H' M = H and det(M) lambda' = lambda.
/// conj-semilinear f = M conj: M^* H' M = conj(H) and det(M) lambda' = conj(lambda).
template <CommutativeRing R>
void validate_isometry(const HermitianSpace<R>& p, const HermitianSpace<R>& pp,
                       const LinearMap3<EtaleElement<element_t<R>>>& f, bool allow_semilinear) {
    const auto& s = p.etale();
    if (f.conjugate && !allow_semilinear) throw Error(ErrorCode::NotSLinear, "map is conj-semilinear, not S-linear");
    auto pulled = mat_mul(s, adjoint(s, f.matrix), mat_mul(s, pp.gram(), f.matrix));
    auto expected = f.conjugate ? conj_entries(s, p.gram()) : p.gram();
    if (!(pulled == expected)) throw Error(ErrorCode::NotIsometry, "M^* H' M differs from H");
    auto det = det3(s, f.matrix);
    auto lhs = s.mul(det, pp.alpha());
    auto rhs = f.conjugate ? s.conj(p.alpha()) : p.alpha();
    if (!(lhs == rhs))
        throw Error(ErrorCode::MorphismConditionFailed,
                    "det(phi) * lambda' = " + s.format(lhs) + " but lambda = " + s.format(rhs));
}

enum class LiftTarget { Colour, Cayley };

/// G_phi: Col(S, P, h, alpha) -> Col(S, P', h', alpha'), (a, u) -> (a, phi u).
template <CommutativeRing R>
AlgebraMap<ColHermAlgebra<R>, ColHermAlgebra<R>> lift_isometry_colour(const HermitianSpace<R>& p,
                                                                      const HermitianSpace<R>& pp,
                                                                      const LinearMap3<EtaleElement<element_t<R>>>& f) {
    validate_isometry(p, pp, f, false);
    return {"G-phi", ColHermAlgebra<R>(p), ColHermAlgebra<R>(pp),
            [p, f](const ColHermElement<element_t<R>>& x) {
                return ColHermElement<element_t<R>>{x.a, apply(p, f, x.u)};
            },
            {{"phi", matrix_to_json(p.etale(), f.matrix)}}};
}

/// H_phi: Cay(S, P, h, alpha) -> Cay(S, P', h', alpha'), (a, u) -> (a, phi u).
template <CommutativeRing R>
AlgebraMap<CayAlgebra<R>, CayAlgebra<R>> lift_isometry_cayley(const HermitianSpace<R>& p, const HermitianSpace<R>& pp,
                                                              const LinearMap3<EtaleElement<element_t<R>>>& f) {
    validate_isometry(p, pp, f, false);
    return {"H-phi", CayAlgebra<R>(p), CayAlgebra<R>(pp),
            [p, f](const CayElement<element_t<R>>& x) { return CayElement<element_t<R>>{x.a, apply(p, f, x.u)}; },
            {{"phi", matrix_to_json(p.etale(), f.matrix)}}};
}

/// f: W(P) -> W(P') for an S-linear or conj-semilinear isometry.
template <CommutativeRing R>
AlgebraMap<WHermAlgebra<R>, WHermAlgebra<R>> isometry_on_w(const HermitianSpace<R>& p, const HermitianSpace<R>& pp,
                                                           const LinearMap3<EtaleElement<element_t<R>>>& f) {
    validate_isometry(p, pp, f, true);
    return {"isometry", WHermAlgebra<R>(p), WHermAlgebra<R>(pp),
            [p, f](const WHermElement<element_t<R>>& x) { return WHermElement<element_t<R>>{apply(p, f, x.u)}; },
            {{"phi", matrix_to_json(p.etale(), f.matrix)}, {"conjugate", f.conjugate}}};
}

/// Restriction of an automorphism of Col(S, P, h, alpha) or Cay to P, read
/// as a map of W(S, P, h, alpha). Valid when the map preserves P.
template <class A>
    requires(A::family == Family::ColHerm || A::family == Family::Cay)
AlgebraMap<WHermAlgebra<typename A::ring_type>, WHermAlgebra<typename A::ring_type>> restrict_to_w(
    const AlgebraMap<A, A>& g) {
    using R = typename A::ring_type;
    return {g.kind + "|P", WHermAlgebra<R>(g.domain.space()), WHermAlgebra<R>(g.codomain.space()),
            [g](const WHermElement<element_t<R>>& x) {
                return WHermElement<element_t<R>>{g.codomain.vector_part(g(g.domain.from_vector(x.u)))};
            },
            g.params};
}

/// lambda_{u,v}: x -> h(u, x) v - h(v, x) u, an S-linear endomorphism of P.
template <CommutativeRing R>
LinearMap3<EtaleElement<element_t<R>>> lambda_map(const HermitianSpace<R>& p,
                                                  const Vec3<EtaleElement<element_t<R>>>& u,
                                                  const Vec3<EtaleElement<element_t<R>>>& v) {
    Mat3<EtaleElement<element_t<R>>> m;
    for (std::size_t j = 0; j < 3; ++j) {
        auto e = p.basis_vector(j);
        auto col = p.scale(p.herm(u, e), v) - p.scale(p.herm(v, e), u);
        for (std::size_t i = 0; i < 3; ++i) m(i, j) = col[i];
    }
    return {m, false};
}

/// f in U(P, h) (or SU when `special`): invertible, f^* H f = H, det f = 1.
template <CommutativeRing R>
bool in_unitary(const HermitianSpace<R>& p, const LinearMap3<EtaleElement<element_t<R>>>& f, bool special) {
    const auto& s = p.etale();
    if (f.conjugate) return false;
    auto det = det3(s, f.matrix);
    if (!s.is_unit(det)) return false;
    if (!(mat_mul(s, adjoint(s, f.matrix), mat_mul(s, p.gram(), f.matrix)) == p.gram())) return false;
    return !special || det == s.one();
}

/// f in u(P, h) (or su when `special`): h(f e_i, e_j) + h(e_i, f e_j) = 0, tr f = 0.
template <CommutativeRing R>
bool in_lie_unitary(const HermitianSpace<R>& p, const LinearMap3<EtaleElement<element_t<R>>>& f, bool special) {
    const auto& s = p.etale();
    if (f.conjugate) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto ei = p.basis_vector(i), ej = p.basis_vector(j);
            if (!s.add(p.herm(apply(p, f, ei), ej), p.herm(ei, apply(p, f, ej))).is_zero()) return false;
        }
    return !special || trace3(s, f.matrix).is_zero();
}

/// An endomorphism d of P acting on a hermitian family: by d on P and by 0
/// on the scalar part.
template <class A>
    requires HermitianFamily<A>
std::function<typename A::element_type(const typename A::element_type&)> extend_by_zero(
    const A& alg, const LinearMap3<EtaleElement<typename A::scalar_type>>& d) {
    return [alg, d](const typename A::element_type& x) { return alg.from_vector(apply(alg.space(), d, alg.vector_part(x))); };
}

// ---------------------------------------------------------------------------
// Verification

/// f(1) = 1 (unital case), f(e_i e_j) = f(e_i) f(e_j) on all basis pairs, then
/// f(x + r y) = f(x) + r f(y) and f(xy) = f(x) f(y) on the sample stream.
template <Algebra Dom, Algebra Cod>
CheckReport is_homomorphism(const AlgebraMap<Dom, Cod>& f, const Sampler& sampler) {
    const auto& dom = f.domain;
    const auto& cod = f.codomain;
    CheckReport report{"homomorphism:" + f.kind};
    auto fail = [&](const char* what, std::initializer_list<typename Dom::element_type> xs) {
        nlohmann::json inputs = nlohmann::json::array();
        for (const auto& x : xs) inputs.push_back(dom.to_json(x));
        report.record_failure({{"check", what}, {"index", report.samples - 1}, {"inputs", inputs}});
    };
    auto product = [&](const auto& x, const auto& y) {
        ++report.samples;
        if (!cod.equal(f(dom.mul(x, y)), cod.mul(f(x), f(y)))) fail("product", {x, y});
    };

    if constexpr (Dom::unital && Cod::unital) {
        ++report.samples;
        if (!cod.equal(f(dom.one()), cod.one())) fail("unit", {dom.one()});
    }
    auto b = basis(dom);
    for (const auto& x : b)
        for (const auto& y : b) product(x, y);

    if (sampler.mode == SampleMode::Exhaustive) {
        auto all = exhaustive_elements(dom, sampler.cap);
        for (const auto& x : all)
            for (const auto& y : all) product(x, y);
        return report;
    }
    SampleStream<Dom> stream(dom, sampler.seed);
    for (std::size_t k = 0; k < sampler.count; ++k) {
        auto x = stream.next(), y = stream.next();
        auto r = stream.scalar();
        ++report.samples;
        if (!cod.equal(f(dom.add(x, dom.scale(r, y))), cod.add(f(x), cod.scale(r, f(y))))) fail("linear", {x, y});
        product(x, y);
    }
    return report;
}

/// d(xy) = d(x) y + x d(y) on basis pairs and on the sample stream.
template <Algebra A, class D>
CheckReport is_derivation(const A& alg, const D& d, const Sampler& sampler, std::string name = "derivation") {
    CheckReport report{std::move(name)};
    auto leibniz = [&](const auto& x, const auto& y) {
        ++report.samples;
        auto lhs = d(alg.mul(x, y));
        auto rhs = alg.add(alg.mul(d(x), y), alg.mul(x, d(y)));
        if (!alg.equal(lhs, rhs))
            report.record_failure(
                {{"index", report.samples - 1}, {"inputs", nlohmann::json::array({alg.to_json(x), alg.to_json(y)})}});
    };
    auto b = basis(alg);
    for (const auto& x : b)
        for (const auto& y : b) leibniz(x, y);
    if (sampler.mode == SampleMode::Exhaustive) {
        auto all = exhaustive_elements(alg, sampler.cap);
        for (const auto& x : all)
            for (const auto& y : all) leibniz(x, y);
        return report;
    }
    SampleStream<A> stream(alg, sampler.seed);
    for (std::size_t k = 0; k < sampler.count; ++k) {
        auto x = stream.next(), y = stream.next();
        leibniz(x, y);
    }
    return report;
}

}  // namespace colalg
