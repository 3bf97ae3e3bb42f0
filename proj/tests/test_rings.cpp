#include <random>

#include <gtest/gtest.h>

#include "colalg/rings.hpp"

using namespace colalg;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidConfig;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace

TEST(Rings, RationalsHaveHalf) {
    RationalField q;
    auto half = q.inverse(q.from_integer(2));
    EXPECT_EQ(half + half, q.one());
    EXPECT_EQ(q.format(half), "1/2");
}

TEST(Rings, ModularFifteenIsValid) {
    auto z15 = ModularRing::modular(15);
    // oracle: brute-force search for the inverse of 2
    std::uint64_t inv2 = 0;
    for (std::uint64_t k = 1; k < 15; ++k)
        if (2 * k % 15 == 1) inv2 = k;
    EXPECT_EQ(inv2, 8u);
    EXPECT_EQ(z15.inverse(z15.element(2)).value(), inv2);
}

TEST(Rings, ConstructionErrors) {
    EXPECT_EQ(code_of([] { ModularRing::modular(4); }), ErrorCode::EvenModulus);
    EXPECT_EQ(code_of([] { ModularRing::prime_field(9); }), ErrorCode::BadPrime);
    EXPECT_EQ(code_of([] { ModularRing::prime_field(2); }), ErrorCode::BadPrime);
    EXPECT_EQ(code_of([] { ModularRing::modular(1); }), ErrorCode::BadModulus);
    EXPECT_EQ(code_of([] { make_ring(ring_spec_from_json({{"kind", "Zmod"}, {"n", 4}})); }), ErrorCode::EvenModulus);
}

TEST(Rings, Inverses) {
    auto f7 = ModularRing::prime_field(7);
    EXPECT_EQ(f7.inverse(f7.element(2)).value(), 4u);
    RationalField q;
    EXPECT_EQ(q.inverse(q.parse("3/4")), q.parse("4/3"));
    PolyQ poly(q, {"t0", "t1"});
    EXPECT_EQ(code_of([&] { poly.inverse(poly.variable(0)); }), ErrorCode::NotAUnit);
    EXPECT_EQ(poly.inverse(poly.parse("2")), poly.parse("1/2"));
    EXPECT_EQ(code_of([&] { q.inverse(q.zero()); }), ErrorCode::NotAUnit);
}

TEST(Rings, NotAUnitExactlyOnNonUnits) {
    for (std::uint64_t n = 3; n <= 99; n += 2) {
        auto r = ModularRing::modular(n);
        for (std::uint64_t v = 0; v < n; ++v) {
            bool brute_unit = false;
            for (std::uint64_t w = 0; w < n && !brute_unit; ++w) brute_unit = v * w % n == 1;
            ModInt x(v, n);
            ASSERT_EQ(r.is_unit(x), brute_unit) << v << " mod " << n;
            if (brute_unit) {
                EXPECT_EQ(r.inverse(x) * x, r.one());
            } else {
                EXPECT_EQ(code_of([&] { r.inverse(x); }), ErrorCode::NotAUnit);
            }
        }
    }
}

TEST(Rings, Parsing) {
    RationalField q;
    EXPECT_EQ(q.parse(" 3 / 4 "), Rational(mpz_class(3), mpz_class(4)));
    EXPECT_EQ(q.parse("-6/8"), Rational(mpz_class(-3), mpz_class(4)));
    auto z15 = ModularRing::modular(15);
    EXPECT_EQ(z15.parse("1/2").value(), 8u);
    EXPECT_EQ(z15.parse("-1").value(), 14u);
    EXPECT_EQ(code_of([&] { z15.parse("1/3"); }), ErrorCode::WrongRing);
    EXPECT_EQ(code_of([&] { q.parse("1/0"); }), ErrorCode::ParseError);

    PolyQ poly(q, {"t0", "t1"});
    auto p = poly.parse("2*t0^2*t1 + 1");
    EXPECT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.total_degree(), 3);
    EXPECT_EQ(poly.format(p), "2*t0^2*t1 + 1");
    EXPECT_EQ(poly.format(poly.parse("t1 - t0")), "-t0 + t1");
    EXPECT_EQ(poly.parse("t0*t0"), poly.parse("t0^2"));
    EXPECT_EQ(poly.parse("t0 - t0"), poly.zero());
}

TEST(Rings, ParseErrorPosition) {
    RationalField q;
    try {
        q.parse("1 + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    PolyQ poly(q, {"t0"});
    try {
        poly.parse("t0 + x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_EQ(code_of([&] { q.parse("t0"); }), ErrorCode::ParseError);
}

TEST(Rings, RationalAxiomsAndRoundTrip) {
    std::mt19937_64 rng(7);
    RationalField q;
    for (int i = 0; i < 300; ++i) {
        auto a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * q.one(), a);
        EXPECT_EQ(a + q.zero(), a);
        EXPECT_EQ(q.parse(q.format(a)), a);
        EXPECT_GT(a.denominator(), 0);
    }
}

TEST(Rings, ModularAxiomsAndRoundTrip) {
    std::mt19937_64 rng(11);
    auto r = ModularRing::modular(15);
    std::uniform_int_distribution<std::uint64_t> d(0, 14);
    for (int i = 0; i < 300; ++i) {
        ModInt a(d(rng), 15), b(d(rng), 15), c(d(rng), 15);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - b + b, a);
        EXPECT_EQ(r.parse(r.format(a)), a);
        EXPECT_LT(a.value(), 15u);
    }
    EXPECT_EQ(r.from_integer(mpz_class(-1)).value(), 14u);
}

TEST(Rings, PolynomialAxiomsAndRoundTrip) {
    std::mt19937_64 rng(3);
    RationalField q;
    PolyQ poly(q, {"t0", "t1", "t2"});
    auto random_poly = [&] {
        auto p = poly.zero();
        for (std::uint32_t deg = 0; deg <= 2; ++deg)
            for (const auto& m : monomials_of_degree(3, deg))
                if (rng() % 2) p.add_term(m, random_rational(rng));
        return p;
    };
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(poly.parse(poly.format(a)), a);
        for (const auto& [m, coeff] : a.terms()) EXPECT_FALSE(coeff.is_zero());
    }
}

TEST(Rings, MonomialEnumeration) {
    auto ms = monomials_of_degree(2, 2);
    ASSERT_EQ(ms.size(), 3u);
    RationalField q;
    PolyQ poly(q, {"t0", "t1"});
    EXPECT_EQ(poly.format_monomial(ms[0]), "t0^2");
    EXPECT_EQ(poly.format_monomial(ms[1]), "t0*t1");
    EXPECT_EQ(poly.format_monomial(ms[2]), "t1^2");
    EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
}

TEST(Rings, SpecJsonRoundTrip) {
    nlohmann::json j = {{"kind", "poly"}, {"base", {{"kind", "Fp"}, {"p", 7}}}, {"vars", {"t0", "t1"}}};
    auto spec = ring_spec_from_json(j);
    EXPECT_EQ(to_json(spec), j);
    auto ring = make_ring(spec);
    EXPECT_TRUE(std::holds_alternative<PolyMod>(ring));
    EXPECT_EQ(code_of([] { ring_spec_from_json({{"kind", "R"}}); }), ErrorCode::InvalidConfig);
    nlohmann::json nested = {{"kind", "poly"}, {"base", j}, {"vars", {"s"}}};
    EXPECT_EQ(code_of([&] { make_ring(ring_spec_from_json(nested)); }), ErrorCode::InvalidConfig);
}
