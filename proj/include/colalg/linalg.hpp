#pragma once

#include <array>
#include <cstddef>

#include "colalg/error.hpp"

namespace colalg {

/// Column vector in a free rank-3 module (over R or over S).
template <class E>
struct Vec3 {
    std::array<E, 3> c{};

    E& operator[](std::size_t i) { return c[i]; }
    const E& operator[](std::size_t i) const { return c[i]; }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

    friend Vec3 operator+(const Vec3& u, const Vec3& v) { return {{u[0] + v[0], u[1] + v[1], u[2] + v[2]}}; }
    friend Vec3 operator-(const Vec3& u, const Vec3& v) { return {{u[0] - v[0], u[1] - v[1], u[2] - v[2]}}; }
    friend Vec3 operator-(const Vec3& u) { return {{-u[0], -u[1], -u[2]}}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Row functional on R^3; kept distinct from Vec3 so T and its dual never mix.
template <class E>
struct DualVec3 {
    std::array<E, 3> c{};

    E& operator[](std::size_t i) { return c[i]; }
    const E& operator[](std::size_t i) const { return c[i]; }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

    friend DualVec3 operator+(const DualVec3& u, const DualVec3& v) { return {{u[0] + v[0], u[1] + v[1], u[2] + v[2]}}; }
    friend DualVec3 operator-(const DualVec3& u, const DualVec3& v) { return {{u[0] - v[0], u[1] - v[1], u[2] - v[2]}}; }
    friend DualVec3 operator-(const DualVec3& u) { return {{-u[0], -u[1], -u[2]}}; }
    friend bool operator==(const DualVec3&, const DualVec3&) = default;
};

/// Scalar action of anything that acts on the coordinates (R on R^3, R on S^3).
template <class S, class E>
    requires requires(const S& s, const E& e) { { s * e } -> std::same_as<E>; }
Vec3<E> operator*(const S& s, const Vec3<E>& v) {
    return {{s * v[0], s * v[1], s * v[2]}};
}

template <class S, class E>
    requires requires(const S& s, const E& e) { { s * e } -> std::same_as<E>; }
DualVec3<E> operator*(const S& s, const DualVec3<E>& v) {
    return {{s * v[0], s * v[1], s * v[2]}};
}

template <class E>
DualVec3<E> transpose(const Vec3<E>& v) { return {v.c}; }
template <class E>
Vec3<E> transpose(const DualVec3<E>& v) { return {v.c}; }

template <class E>
struct Mat3 {
    std::array<std::array<E, 3>, 3> m{};

    E& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }
    Vec3<E> column(std::size_t j) const { return {{m[0][j], m[1][j], m[2][j]}}; }

    friend bool operator==(const Mat3&, const Mat3&) = default;
};

// Handle-generic operations: K is a base ring or an étale algebra handle.

template <class K, class E>
Mat3<E> identity3(const K& k) {
    Mat3<E> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = i == j ? k.one() : k.zero();
    return r;
}

template <class K, class E>
Mat3<E> from_columns(const K&, const Vec3<E>& a, const Vec3<E>& b, const Vec3<E>& c) {
    Mat3<E> r;
    for (std::size_t i = 0; i < 3; ++i) {
        r(i, 0) = a[i];
        r(i, 1) = b[i];
        r(i, 2) = c[i];
    }
    return r;
}

template <class E>
Mat3<E> transpose(const Mat3<E>& a) {
    Mat3<E> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

template <class K, class E>
E dot(const K& k, const std::array<E, 3>& a, const std::array<E, 3>& b) {
    return k.add(k.add(k.mul(a[0], b[0]), k.mul(a[1], b[1])), k.mul(a[2], b[2]));
}

/// Classical vector product: (u x v)_k = sum eps_{ijk} u_i v_j.
template <class K, class E>
std::array<E, 3> cross(const K& k, const std::array<E, 3>& u, const std::array<E, 3>& v) {
    return {k.sub(k.mul(u[1], v[2]), k.mul(u[2], v[1])),
            k.sub(k.mul(u[2], v[0]), k.mul(u[0], v[2])),
            k.sub(k.mul(u[0], v[1]), k.mul(u[1], v[0]))};
}

template <class K, class E>
Vec3<E> scale(const K& k, const E& s, const Vec3<E>& v) {
    return {{k.mul(s, v[0]), k.mul(s, v[1]), k.mul(s, v[2])}};
}

template <class K, class E>
Vec3<E> mat_vec(const K& k, const Mat3<E>& a, const Vec3<E>& v) {
    Vec3<E> r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = dot(k, a.m[i], v.c);
    return r;
}

template <class K, class E>
Mat3<E> mat_mul(const K& k, const Mat3<E>& a, const Mat3<E>& b) {
    Mat3<E> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            r(i, j) = k.add(k.add(k.mul(a(i, 0), b(0, j)), k.mul(a(i, 1), b(1, j))), k.mul(a(i, 2), b(2, j)));
    return r;
}

template <class K, class E>
Mat3<E> mat_scale(const K& k, const E& s, const Mat3<E>& a) {
    Mat3<E> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = k.mul(s, a(i, j));
    return r;
}

template <class K, class E>
bool mat_equal(const K& k, const Mat3<E>& a, const Mat3<E>& b) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!k.equal(a(i, j), b(i, j))) return false;
    return true;
}

template <class K, class E>
E trace3(const K& k, const Mat3<E>& a) {
    return k.add(k.add(a(0, 0), a(1, 1)), a(2, 2));
}

/// det(a) = <row0, row1 x row2>.
template <class K, class E>
E det3(const K& k, const Mat3<E>& a) {
    return dot(k, a.m[0], cross(k, a.m[1], a.m[2]));
}

/// Classical adjoint: adj(a) * a = a * adj(a) = det(a) * I, valid over any
/// commutative ring (no division).
template <class K, class E>
Mat3<E> adjugate(const K& k, const Mat3<E>& a) {
    // Row i of the cofactor matrix is (row_{i+1} x row_{i+2}); adj is its transpose.
    Mat3<E> cof;
    for (std::size_t i = 0; i < 3; ++i) cof.m[i] = cross(k, a.m[(i + 1) % 3], a.m[(i + 2) % 3]);
    return transpose(cof);
}

/// a^{-1} = det(a)^{-1} adj(a); throws NotAUnit when det(a) is not a unit.
template <class K, class E>
Mat3<E> inverse3(const K& k, const Mat3<E>& a) {
    E d = det3(k, a);
    if (!k.is_unit(d)) throw Error(ErrorCode::NotAUnit, "matrix determinant is not a unit");
    return mat_scale(k, k.inverse(d), adjugate(k, a));
}

}  // namespace colalg
