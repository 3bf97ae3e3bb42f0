#include <random>

#include <gtest/gtest.h>

#include "colalg/algebras.hpp"
#include "support.hpp"

using namespace colalg;
using testing_support::error_code;
using testing_support::random_element;

namespace {

using S = EtaleAlgebra<RationalField>;
using SE = S::element_type;

template <class E>
Vec3<E> vec(E a, E b, E c) { return {{a, b, c}}; }
template <class E>
DualVec3<E> dvec(E a, E b, E c) { return {{a, b, c}}; }

Rational half() { return Rational(mpz_class(1), mpz_class(2)); }

HermitianSpace<RationalField> gram_space(const S& s, SE z) {
    auto g = identity3<S, SE>(s);
    g(0, 1) = z;
    g(1, 0) = s.conj(z);
    g(1, 1) = s.embed(s.norm(z) + 1);
    return HermitianSpace<RationalField>::make(s, g, s.one());
}

template <class A>
void expect_quadratic_relation(const A& alg, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        auto x = random_element(alg, rng);
        auto rel = alg.add(alg.sub(alg.mul(x, x), alg.scale(alg.trace(x), x)), alg.scale(alg.norm(x), alg.one()));
        ASSERT_TRUE(rel.is_zero()) << alg.to_json(x).dump();
        ASSERT_EQ(alg.mul(alg.one(), x), x);
        ASSERT_EQ(alg.mul(x, alg.one()), x);
        ASSERT_EQ(alg.mul(alg.involution(x), x), alg.scale(alg.norm(x), alg.one()));
        ASSERT_EQ(alg.involution(alg.involution(x)), x);
    }
}

template <class A>
void expect_flexible_jordan(const A& alg, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        auto x = random_element(alg, rng), y = random_element(alg, rng);
        auto xx = alg.mul(x, x);
        ASSERT_EQ(alg.mul(alg.mul(x, y), x), alg.mul(x, alg.mul(y, x)));
        ASSERT_EQ(alg.mul(alg.mul(x, y), xx), alg.mul(x, alg.mul(y, xx)));
        ASSERT_EQ(alg.mul(xx, x), alg.mul(x, xx));
        ASSERT_EQ(alg.mul(xx, xx), alg.mul(alg.mul(xx, x), x));
    }
}

template <class A>
void expect_composition(const A& alg, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        auto x = random_element(alg, rng), y = random_element(alg, rng);
        ASSERT_EQ(alg.norm(alg.mul(x, y)), alg.norm(x) * alg.norm(y));
    }
}

template <class A>
void expect_json_round_trip(const A& alg, unsigned seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
        auto x = random_element(alg, rng);
        ASSERT_EQ(alg.from_json(alg.to_json(x)), x);
        ASSERT_EQ(alg.from_coords(alg.coords(x)), x);
    }
    EXPECT_EQ(alg.basis_labels().size(), alg.rank());
}

}  // namespace

TEST(ColSplit, BasisRelations) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    Rational o = 1, z = 0;
    ColSplitElement<Rational> u1{z, vec(o, z, z), dvec(z, z, z)}, u2{z, vec(z, o, z), dvec(z, z, z)};
    ColSplitElement<Rational> v1{z, vec(z, z, z), dvec(o, z, z)};
    EXPECT_EQ(col.mul(u1, u2), (ColSplitElement<Rational>{z, vec(z, z, z), dvec(z, z, o)}));
    EXPECT_EQ(col.mul(u1, v1), (ColSplitElement<Rational>{half(), vec(z, z, z), dvec(z, z, z)}));
}

TEST(ColSplit, WorkedProduct) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    Rational o = 1, z = 0;
    ColSplitElement<Rational> x{1, vec(o, z, z), dvec(z, o, z)}, y{2, vec(z, o, z), dvec(o, z, z)};
    auto p = col.mul(x, y);
    EXPECT_EQ(p, (ColSplitElement<Rational>{3, vec<Rational>(2, 1, 1), dvec<Rational>(1, 2, 1)}));
}

TEST(ColSplit, NormTrace) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    EXPECT_EQ(col.norm(col.one()), Rational(1));
    EXPECT_EQ(col.trace(col.one()), Rational(2));
    ColSplitElement<Rational> x{2, vec<Rational>(1, 0, 0), dvec<Rational>(3, 0, 0)};
    EXPECT_EQ(col.norm(x), Rational(1));
    EXPECT_EQ(col.trace(x), Rational(4));
}

TEST(ColSplit, Identities) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q, Rational(mpz_class(-2), mpz_class(3)));
    expect_quadratic_relation(col, 500, 1);
    expect_flexible_jordan(col, 200, 2);
    expect_json_round_trip(col, 3);
    auto z15 = ModularRing::modular(15);
    ColSplitAlgebra<ModularRing> colz(z15, z15.element(7));
    expect_quadratic_relation(colz, 300, 4);
    expect_flexible_jordan(colz, 300, 5);
}

TEST(ColSplit, NormIsNotMultiplicative) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    std::mt19937_64 rng(6);
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        auto x = random_element(col, rng), y = random_element(col, rng);
        if (col.norm(col.mul(x, y)) != col.norm(x) * col.norm(y)) ++failures;
    }
    EXPECT_GT(failures, 0);
}

TEST(Zorn, Idempotents) {
    RationalField q;
    ZornAlgebra<RationalField> zorn(q);
    auto e11 = basis_element(zorn, 0), e22 = basis_element(zorn, 7);
    EXPECT_TRUE(zorn.mul(e11, e22).is_zero());
    EXPECT_EQ(zorn.mul(e11, e11), e11);
    EXPECT_EQ(zorn.mul(e22, e22), e22);
}

TEST(Zorn, NormAndHandExpansion) {
    RationalField q;
    ZornAlgebra<RationalField> zorn(q);
    EXPECT_EQ(zorn.norm(zorn.one()), Rational(1));
    ZornElement<Rational> x{2, vec<Rational>(1, 0, 0), dvec<Rational>(1, 0, 0), 3};
    EXPECT_EQ(zorn.norm(x), Rational(5));
    // [[1, e1], [0, 0]] [[0, 0], [f1, 1]] = [[<e1, f1>, e1], [0, 0]]
    ZornElement<Rational> a{1, vec<Rational>(1, 0, 0), dvec<Rational>(0, 0, 0), 0};
    ZornElement<Rational> b{0, vec<Rational>(0, 0, 0), dvec<Rational>(1, 0, 0), 1};
    EXPECT_EQ(zorn.mul(a, b), (ZornElement<Rational>{1, vec<Rational>(1, 0, 0), dvec<Rational>(0, 0, 0), 0}));
}

TEST(Zorn, Identities) {
    RationalField q;
    for (const Rational& lambda : {Rational(1), Rational(2), Rational(mpz_class(-5), mpz_class(7))}) {
        ZornAlgebra<RationalField> zorn(q, lambda);
        expect_quadratic_relation(zorn, 300, 7);
        expect_composition(zorn, 300, 8);
        expect_flexible_jordan(zorn, 100, 9);
        expect_json_round_trip(zorn, 10);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 100; ++i) {
            auto x = random_element(zorn, rng);
            EXPECT_EQ(zorn.norm(zorn.involution(x)), zorn.norm(x));
            // alternative laws
            auto y = random_element(zorn, rng);
            EXPECT_EQ(zorn.mul(zorn.mul(x, x), y), zorn.mul(x, zorn.mul(x, y)));
        }
    }
}

TEST(Cay, InvolutionNormTrace) {
    RationalField q;
    CayAlgebra<RationalField> cay(HermitianSpace<RationalField>::identity(S::split(q)));
    CayElement<Rational> x{{1, 2}, cay.space().zero_vector()};
    EXPECT_EQ(cay.involution(x), (CayElement<Rational>{{2, 1}, cay.space().zero_vector()}));
    EXPECT_EQ(cay.norm(x), Rational(2));
    EXPECT_EQ(cay.trace(x), Rational(3));
}

TEST(Cay, Identities) {
    RationalField q;
    auto split = S::split(q);
    auto kummer = S::kummer(q, Rational(3));
    for (const auto& space : {HermitianSpace<RationalField>::identity(split), HermitianSpace<RationalField>::identity(kummer),
                              gram_space(split, SE{1, 2}), gram_space(kummer, SE{1, 1})}) {
        CayAlgebra<RationalField> cay(space);
        expect_quadratic_relation(cay, 300, 12);
        expect_composition(cay, 300, 13);
        expect_flexible_jordan(cay, 100, 14);
        expect_json_round_trip(cay, 15);
    }
}

TEST(Cay, SplitIdentityGramMatchesZorn) {
    auto f5 = ModularRing::prime_field(5);
    using SF = EtaleAlgebra<ModularRing>;
    CayAlgebra<ModularRing> cay(HermitianSpace<ModularRing>::identity(SF::split(f5)));
    ZornAlgebra<ModularRing> zorn(f5);
    // ((a', a''), (u', u'')) -> (a', -u', u'', a'')
    auto psi = [&](const CayElement<ModInt>& x) {
        ZornElement<ModInt> z;
        z.a = x.a.first;
        z.ap = x.a.second;
        for (std::size_t i = 0; i < 3; ++i) {
            z.u[i] = -x.u[i].first;
            z.ud[i] = x.u[i].second;
        }
        return z;
    };
    auto b = basis(cay);
    ASSERT_EQ(b.size(), 8u);
    for (const auto& x : b)
        for (const auto& y : b) EXPECT_EQ(psi(cay.mul(x, y)), zorn.mul(psi(x), psi(y)));
    EXPECT_EQ(psi(cay.one()), zorn.one());
}

TEST(ColHerm, Identities) {
    auto f7 = ModularRing::prime_field(7);
    using SF = EtaleAlgebra<ModularRing>;
    for (const auto& s : {SF::split(f7), SF::kummer(f7, f7.element(3))}) {
        ColHermAlgebra<ModularRing> col(HermitianSpace<ModularRing>::identity(s));
        expect_quadratic_relation(col, 500, 16);
        expect_flexible_jordan(col, 300, 17);
        expect_json_round_trip(col, 18);
    }
    RationalField q;
    ColHermAlgebra<RationalField> colq(gram_space(S::kummer(q, Rational(-1)), SE{2, 1}));
    expect_quadratic_relation(colq, 300, 19);
    expect_flexible_jordan(colq, 100, 20);
}

TEST(ColHerm, SplitIdentityGramMatchesColSplit) {
    auto f5 = ModularRing::prime_field(5);
    using SF = EtaleAlgebra<ModularRing>;
    ColHermAlgebra<ModularRing> herm(HermitianSpace<ModularRing>::identity(SF::split(f5)));
    ColSplitAlgebra<ModularRing> col(f5);
    // (a, u, ud) -> (a, p) with p_i = (-u_i, ud_i)
    auto psi = [&](const ColSplitElement<ModInt>& x) {
        ColHermElement<ModInt> y;
        y.a = x.a;
        for (std::size_t i = 0; i < 3; ++i) y.u[i] = {-x.u[i], x.ud[i]};
        return y;
    };
    auto b = basis(col);
    for (const auto& x : b)
        for (const auto& y : b) EXPECT_EQ(psi(col.mul(x, y)), herm.mul(psi(x), psi(y)));
}

TEST(W, AnticommutativeAndQuarticSign) {
    RationalField q;
    WSplitAlgebra<RationalField> w(q, Rational(3));
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        auto x = random_element(w, rng), y = random_element(w, rng);
        EXPECT_TRUE(w.mul(x, x).is_zero());
        EXPECT_EQ(w.mul(x, y), -w.mul(y, x));
        // ((x v) v) v = <v, vd> (x v), the opposite sign of quartic_norm
        auto xv = w.mul(x, y);
        EXPECT_EQ(w.mul(w.mul(xv, y), y), w.scale(-w.quartic_norm(y), xv));
    }
    expect_json_round_trip(w, 22);

    WHermAlgebra<RationalField> wh(gram_space(S::kummer(q, Rational(3)), SE{1, 1}));
    for (int i = 0; i < 200; ++i) {
        auto x = random_element(wh, rng), y = random_element(wh, rng);
        EXPECT_TRUE(wh.mul(x, x).is_zero());
        auto xv = wh.mul(x, y);
        EXPECT_EQ(wh.mul(wh.mul(xv, y), y), wh.scale(-wh.quartic_norm(y), xv));
    }
    expect_json_round_trip(wh, 23);
}

TEST(W, ProjectionOfZorn) {
    RationalField q;
    ZornAlgebra<RationalField> zorn(q, Rational(2));
    WSplitAlgebra<RationalField> w(q, Rational(2));
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        auto x = random_element(w, rng), y = random_element(w, rng);
        ZornElement<Rational> zx{0, x.u, x.ud, 0}, zy{0, y.u, y.ud, 0};
        auto p = zorn.mul(zx, zy);
        EXPECT_EQ((WSplitElement<Rational>{p.u, p.ud}), w.mul(x, y));
    }
}

TEST(Quadratic, Decompose) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    auto [c1, r1] = quadratic_decompose(col, col.one());
    EXPECT_EQ(c1, Rational(1));
    EXPECT_TRUE(r1.is_zero());
    ColSplitElement<Rational> x{3, vec<Rational>(1, 2, 3), dvec<Rational>(4, 5, 6)};
    auto [c2, r2] = quadratic_decompose(col, x);
    EXPECT_EQ(c2, Rational(3));
    EXPECT_EQ(r2, (ColSplitElement<Rational>{0, x.u, x.ud}));

    ZornAlgebra<RationalField> zorn(q);
    ZornElement<Rational> z{1, vec<Rational>(1, 0, 0), dvec<Rational>(0, 1, 0), 4};
    auto [c3, r3] = quadratic_decompose(zorn, z);
    EXPECT_EQ(c3, Rational(mpz_class(5), mpz_class(2)));
    EXPECT_EQ(r3, (ZornElement<Rational>{Rational(mpz_class(-3), mpz_class(2)), z.u, z.ud, Rational(mpz_class(3), mpz_class(2))}));
}

TEST(Quadratic, VectorProduct) {
    RationalField q;
    ColSplitAlgebra<RationalField> col(q);
    EXPECT_EQ(error_code([&] { vector_product_of_quadratic(col, col.one(), col.zero()); }), ErrorCode::NotTraceZero);
    std::mt19937_64 rng(25);
    for (int i = 0; i < 300; ++i) {
        auto x0 = quadratic_decompose(col, random_element(col, rng)).second;
        auto y0 = quadratic_decompose(col, random_element(col, rng)).second;
        EXPECT_TRUE(vector_product_of_quadratic(col, x0, x0).is_zero());
        auto cross = vector_product_of_quadratic(col, x0, y0);
        EXPECT_TRUE(col.trace(cross).is_zero());
        auto rhs = col.add(col.scale(-half() * polar_norm(col, x0, y0), col.one()), cross);
        EXPECT_EQ(col.mul(x0, y0), rhs);
    }

    auto f5 = ModularRing::prime_field(5);
    ZornAlgebra<ModularRing> zorn(f5);
    auto h = f5.inverse(f5.element(2));
    for (int i = 0; i < 200; ++i) {
        auto x0 = quadratic_decompose(zorn, random_element(zorn, rng)).second;
        auto y0 = quadratic_decompose(zorn, random_element(zorn, rng)).second;
        auto p = zorn.mul(x0, y0);
        auto d = h * (p.a - p.ap);
        EXPECT_EQ(vector_product_of_quadratic(zorn, x0, y0), (ZornElement<ModInt>{d, p.u, p.ud, -d}));
    }
}
