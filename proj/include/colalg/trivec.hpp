#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "colalg/error.hpp"
#include "colalg/etale.hpp"
#include "colalg/linalg.hpp"
#include "colalg/rings.hpp"

namespace colalg {

// ---------------------------------------------------------------------------
// Free rank-3 modules T = R^3 with a trivialization of det(T).

/// alpha(u ^ v ^ w) = lambda * det(u|v|w); lambda is a unit of R.
template <RingElement E>
struct Trivialization {
    E lambda{};
};

template <CommutativeRing R>
Trivialization<element_t<R>> make_trivialization(const R& ring, const element_t<R>& lambda) {
    if (!ring.is_unit(lambda))
        throw Error(ErrorCode::NotAUnit, "trivialization scalar " + ring.format(lambda) + " is not a unit");
    return {lambda};
}

/// The trivialization beta of the dual module. On R^3 the defining relation
/// alpha(u1^u2^u3) beta(v1^v2^v3) = det(<u_i, v_j>) forces lambda_beta = lambda^{-1}.
template <CommutativeRing R>
Trivialization<element_t<R>> dual_trivialization(const R& ring, const Trivialization<element_t<R>>& alpha) {
    return {ring.inverse(alpha.lambda)};
}

/// <u, ud> = ud(u).
template <RingElement E>
E pairing(const Vec3<E>& u, const DualVec3<E>& ud) {
    return dot(OperatorArithmetic<E>{}, u.c, ud.c);
}

template <RingElement E>
Vec3<E> classical_cross(const Vec3<E>& u, const Vec3<E>& v) {
    return {cross(OperatorArithmetic<E>{}, u.c, v.c)};
}

/// det(u|v|w) with u, v, w as columns.
template <RingElement E>
E det_columns(const Vec3<E>& u, const Vec3<E>& v, const Vec3<E>& w) {
    return dot(OperatorArithmetic<E>{}, u.c, cross(OperatorArithmetic<E>{}, v.c, w.c));
}

/// u x_alpha v = alpha(u ^ v ^ -), a functional on T.
template <RingElement E>
DualVec3<E> twisted_cross(const Trivialization<E>& alpha, const Vec3<E>& u, const Vec3<E>& v) {
    return alpha.lambda * transpose(classical_cross(u, v));
}

/// ud x_beta vd = beta(ud ^ vd ^ -), an element of T.
template <RingElement E>
Vec3<E> dual_twisted_cross(const Trivialization<E>& beta, const DualVec3<E>& ud, const DualVec3<E>& vd) {
    return beta.lambda * classical_cross(transpose(ud), transpose(vd));
}

// ---------------------------------------------------------------------------
// Hermitian spaces (P, h) with P = S^3.

/// Nondegenerate hermitian form on S^3 with Gram matrix H (h(e_i, e_j) =
/// H_ij), conjugate-linear in the first slot, together with a unit lambda
/// of S trivializing its determinant: n_S(lambda) * det(H) = 1.
///
/// The cross product is defined by h(v x w, u) = lambda * det(u|v|w) for all
/// u, i.e. h(u, v x w) = conj(lambda * det(u|v|w)).
template <CommutativeRing R>
class HermitianSpace {
public:
    using etale_type = EtaleAlgebra<R>;
    using scalar_type = element_t<R>;
    using element_type = EtaleElement<scalar_type>;
    using vector_type = Vec3<element_type>;
    using matrix_type = Mat3<element_type>;

    static HermitianSpace make(etale_type s, matrix_type gram, element_type alpha) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (!(gram(j, i) == s.conj(gram(i, j))))
                    throw Error(ErrorCode::NotHermitian, "H(" + std::to_string(j) + "," + std::to_string(i) +
                                                             ") != conj(H(" + std::to_string(i) + "," +
                                                             std::to_string(j) + "))");
        element_type det = det3(s, gram);
        if (!s.is_unit(det)) throw Error(ErrorCode::Degenerate, "det(H) = " + s.format(det) + " is not a unit");
        element_type check = s.mul(s.embed(s.norm(alpha)), det);
        if (!(check == s.one()))
            throw Error(ErrorCode::DeterminantNotTrivial,
                        "n_S(lambda) * det(H) = " + s.format(check) + ", expected 1");
        return HermitianSpace(std::move(s), std::move(gram), std::move(alpha));
    }

    static HermitianSpace identity(etale_type s) {
        auto one = s.one();
        return make(s, identity3<etale_type, element_type>(s), one);
    }

    const etale_type& etale() const { return s_; }
    const R& base() const { return s_.base(); }
    const matrix_type& gram() const { return gram_; }
    const element_type& alpha() const { return alpha_; }

    /// h(u, v) = sum conj(u_i) H_ij v_j.
    element_type herm(const vector_type& u, const vector_type& v) const {
        return dot(s_, conj(u).c, mat_vec(s_, gram_, v).c);
    }

    /// The unique p with h(p, u) = lambda * det(u|v|w) for all u:
    /// p = conj(H^{-T} * lambda * (v x w)).
    vector_type cross(const vector_type& v, const vector_type& w) const {
        return conj(mat_vec(s_, cross_matrix_, vector_type{colalg::cross(s_, v.c, w.c)}));
    }

    /// n(u, v) = h(u, v) + conj(h(u, v)), an R-valued symmetric bilinear form.
    scalar_type bilinear(const vector_type& u, const vector_type& v) const { return s_.trace(herm(u, v)); }

    /// h(v, v), always conj-fixed.
    scalar_type quadratic(const vector_type& v) const { return s_.fixed_part(herm(v, v)); }

    vector_type conj(const vector_type& v) const { return {{s_.conj(v[0]), s_.conj(v[1]), s_.conj(v[2])}}; }
    vector_type scale(const element_type& a, const vector_type& v) const { return colalg::scale(s_, a, v); }
    vector_type zero_vector() const { return {{s_.zero(), s_.zero(), s_.zero()}}; }
    vector_type basis_vector(std::size_t i) const {
        vector_type v = zero_vector();
        v[i] = s_.one();
        return v;
    }

    nlohmann::json vector_to_json(const vector_type& v) const {
        return nlohmann::json::array({s_.to_json(v[0]), s_.to_json(v[1]), s_.to_json(v[2])});
    }
    vector_type vector_from_json(const nlohmann::json& j) const {
        if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, "vector over S must have 3 entries");
        return {{s_.from_json(j[0]), s_.from_json(j[1]), s_.from_json(j[2])}};
    }

    nlohmann::json spec_json() const {
        nlohmann::json g = nlohmann::json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < 3; ++j) row.push_back(s_.to_json(gram_(i, j)));
            g.push_back(row);
        }
        return {{"etale", s_.spec_json()}, {"gram", g}, {"alpha", s_.to_json(alpha_)}};
    }

private:
    HermitianSpace(etale_type s, matrix_type gram, element_type alpha)
        : s_(std::move(s)), gram_(std::move(gram)), alpha_(std::move(alpha)) {
        cross_matrix_ = mat_scale(s_, alpha_, transpose(inverse3(s_, gram_)));
    }

    etale_type s_;
    matrix_type gram_;
    element_type alpha_;
    matrix_type cross_matrix_;  // lambda * H^{-T}
};

template <CommutativeRing R>
Mat3<EtaleElement<element_t<R>>> matrix_from_json(const EtaleAlgebra<R>& s, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidConfig, "matrix must be a 3x3 array");
    Mat3<EtaleElement<element_t<R>>> m;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) throw Error(ErrorCode::InvalidConfig, "matrix must be a 3x3 array");
        for (std::size_t k = 0; k < 3; ++k) m(i, k) = s.from_json(j[i][k]);
    }
    return m;
}

/// {"etale": {...}, "gram": [[pair x3] x3], "alpha": pair}
template <CommutativeRing R>
HermitianSpace<R> hermitian_from_json(const R& base, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("etale") || !j.contains("gram") || !j.contains("alpha"))
        throw Error(ErrorCode::InvalidConfig, "hermitian space needs \"etale\", \"gram\" and \"alpha\"");
    auto s = etale_from_json(base, j["etale"]);
    auto gram = matrix_from_json(s, j["gram"]);
    auto alpha = s.from_json(j["alpha"]);
    return HermitianSpace<R>::make(std::move(s), std::move(gram), std::move(alpha));
}

}  // namespace colalg
