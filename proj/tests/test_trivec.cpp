#include <array>
#include <random>

#include <gtest/gtest.h>

#include "colalg/trivec.hpp"

using namespace colalg;

namespace {

using V = Vec3<Rational>;
using S = EtaleAlgebra<RationalField>;
using SE = S::element_type;
using P = HermitianSpace<RationalField>;

Rational rq(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}
V rv(std::mt19937_64& rng) { return {{rq(rng), rq(rng), rq(rng)}}; }
SE rs(std::mt19937_64& rng) { return {rq(rng), rq(rng)}; }
P::vector_type rp(std::mt19937_64& rng) { return {{rs(rng), rs(rng), rs(rng)}}; }

// Leibniz expansion over the six permutations, independent of the cofactor code.
template <class K, class E>
E leibniz_det(const K& k, const std::array<std::array<E, 3>, 3>& m) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    E total = k.zero();
    for (int p = 0; p < 6; ++p) {
        E term = k.mul(k.mul(m[0][perms[p][0]], m[1][perms[p][1]]), m[2][perms[p][2]]);
        total = p < 3 ? k.add(total, term) : k.sub(total, term);
    }
    return total;
}

template <class E>
std::array<std::array<E, 3>, 3> columns(const Vec3<E>& a, const Vec3<E>& b, const Vec3<E>& c) {
    return {{{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}}};
}

P::matrix_type diag(const S& s, SE a, SE b, SE c) {
    auto m = identity3<S, SE>(s);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

}  // namespace

TEST(Trivec, ClassicalCross) {
    V e1{{1, 0, 0}}, e2{{0, 1, 0}}, e3{{0, 0, 1}};
    EXPECT_EQ(classical_cross(e1, e2), e3);
    EXPECT_EQ(classical_cross(V{{1, 2, 3}}, V{{4, 5, 6}}), (V{{-3, 6, -3}}));
    std::mt19937_64 rng(1);
    RationalField q;
    for (int i = 0; i < 100; ++i) {
        auto u = rv(rng), v = rv(rng), w = rv(rng);
        EXPECT_TRUE(classical_cross(u, u).is_zero());
        EXPECT_EQ(classical_cross(u, v), -classical_cross(v, u));
        EXPECT_EQ(dot(q, w.c, classical_cross(u, v).c), leibniz_det(q, columns(u, v, w)));
    }
}

TEST(Trivec, TwistedCross) {
    RationalField q;
    V e1{{1, 0, 0}}, e2{{0, 1, 0}};
    auto one = make_trivialization(q, q.one());
    EXPECT_EQ(twisted_cross(one, e1, e2), transpose(classical_cross(e1, e2)));

    auto f7 = ModularRing::prime_field(7);
    auto two = make_trivialization(f7, f7.element(2));
    Vec3<ModInt> f1{{f7.one(), f7.zero(), f7.zero()}}, f2{{f7.zero(), f7.one(), f7.zero()}};
    EXPECT_EQ(twisted_cross(two, f1, f2), (DualVec3<ModInt>{{f7.zero(), f7.zero(), f7.element(2)}}));

    std::mt19937_64 rng(2);
    auto alpha = make_trivialization(q, Rational(mpz_class(-3), mpz_class(5)));
    for (int i = 0; i < 100; ++i) {
        auto u = rv(rng), v = rv(rng), w = rv(rng);
        EXPECT_EQ(pairing(w, twisted_cross(alpha, u, v)), alpha.lambda * leibniz_det(q, columns(u, v, w)));
    }
    EXPECT_THROW(make_trivialization(q, q.zero()), Error);
}

TEST(Trivec, DualTrivialization) {
    RationalField q;
    EXPECT_EQ(dual_trivialization(q, make_trivialization(q, q.one())).lambda, q.one());
    auto f7 = ModularRing::prime_field(7);
    auto alpha = make_trivialization(f7, f7.element(2));
    auto beta = dual_trivialization(f7, alpha);
    EXPECT_EQ(beta.lambda.value(), 4u);
    // standard bases are dual, so det(<e_i, f_j>) = 1
    EXPECT_EQ(alpha.lambda * beta.lambda, f7.one());
}

TEST(Trivec, MakeHermitianSpace) {
    RationalField q;
    auto s = S::split(q);
    EXPECT_NO_THROW(P::identity(s));
    SE c{3, Rational(mpz_class(1), mpz_class(3))};
    EXPECT_NO_THROW(P::make(s, identity3<S, SE>(s), c));

    auto ks = S::kummer(q, Rational(3));
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidConfig;
    };
    EXPECT_EQ(code([&] { P::make(ks, diag(ks, ks.one(), ks.one(), ks.embed(2)), ks.one()); }),
              ErrorCode::DeterminantNotTrivial);
    auto bad = identity3<S, SE>(ks);
    bad(0, 1) = SE{1, 1};
    EXPECT_EQ(code([&] { P::make(ks, bad, ks.one()); }), ErrorCode::NotHermitian);
    EXPECT_EQ(code([&] { P::make(ks, diag(ks, ks.one(), ks.one(), ks.zero()), ks.one()); }), ErrorCode::Degenerate);
}

TEST(Trivec, HermAndCross) {
    RationalField q;
    auto s = S::split(q);
    auto p = P::identity(s);
    EXPECT_EQ(p.herm(p.basis_vector(0), p.basis_vector(0)), s.one());
    EXPECT_EQ(p.cross(p.basis_vector(0), p.basis_vector(1)), p.basis_vector(2));
    EXPECT_EQ(p.bilinear(p.basis_vector(0), p.basis_vector(0)), Rational(2));
}

TEST(Trivec, HermProperties) {
    RationalField q;
    std::mt19937_64 rng(9);
    auto ks = S::kummer(q, Rational(3));
    // Gram with a non-real off-diagonal entry and det 1
    SE z{1, 1};
    auto g = identity3<S, SE>(ks);
    g(0, 1) = z;
    g(1, 0) = ks.conj(z);
    g(1, 1) = ks.embed(ks.norm(z) + 1);
    for (const auto& space : {P::identity(S::split(q)), P::make(ks, g, ks.one()),
                              P::make(S::split(q), identity3<S, SE>(S::split(q)), SE{2, Rational(mpz_class(1), mpz_class(2))})}) {
        const auto& es = space.etale();
        for (int i = 0; i < 200; ++i) {
            auto u = rp(rng), v = rp(rng), w = rp(rng);
            auto a = rs(rng);
            EXPECT_EQ(space.herm(u, v), es.conj(space.herm(v, u)));
            EXPECT_EQ(space.herm(space.scale(a, u), v), es.mul(es.conj(a), space.herm(u, v)));
            EXPECT_EQ(space.herm(u, space.scale(a, v)), es.mul(space.herm(u, v), a));
            EXPECT_EQ(space.bilinear(u, v), space.bilinear(v, u));
            // defining property of the cross product: h(v x w, u) = lambda det(u|v|w)
            EXPECT_EQ(space.herm(space.cross(v, w), u),
                      es.mul(space.alpha(), leibniz_det(es, columns(u, v, w))));
            EXPECT_TRUE(space.herm(u, space.cross(u, v)).is_zero());
            EXPECT_TRUE(space.herm(space.cross(u, v), v).is_zero());
        }
    }
}

TEST(Trivec, GramJson) {
    RationalField q;
    auto j = nlohmann::json::parse(R"({"etale": {"kind": "split"},
        "gram": [[["1","1"],["0","0"],["0","0"]], [["0","0"],["1","1"],["0","0"]], [["0","0"],["0","0"],["1","1"]]],
        "alpha": ["2","1/2"]})");
    auto p = hermitian_from_json(q, j);
    EXPECT_EQ(p.spec_json(), j);
    EXPECT_EQ(p.alpha(), (SE{2, Rational(mpz_class(1), mpz_class(2))}));
}
