#include <gtest/gtest.h>

#include "colalg/checks/suites.hpp"
#include "colalg/graded.hpp"
#include "support.hpp"

using namespace colalg;
using testing_support::error_code;

namespace {

GradedAlgebra<ModularRing> f7_graded(std::uint32_t l, std::uint32_t m, std::uint32_t n) {
    return GradedAlgebra<ModularRing>(ModularRing::prime_field(7), {l, m, n});
}

// independent count: exponent vectors of n+1 variables with sum d
std::uint64_t brute_count(std::uint32_t d, std::uint32_t n) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> e(n + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == n) {
            ++count;
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) self(self, i + 1, left - k);
    };
    rec(rec, 0, d);
    return count;
}

}  // namespace

TEST(Graded, BasesAndRanks) {
    auto c = f7_graded(1, 1, 1);
    const auto& pr = c.polynomial_ring();
    std::vector<std::string> lm;
    for (const auto& mono : c.basis_lm()) lm.push_back(pr.format_monomial(mono));
    EXPECT_EQ(lm, (std::vector<std::string>{"t0^2", "t0*t1", "t1^2"}));
    EXPECT_EQ(c.basis_l().size(), 2u);
    EXPECT_EQ(c.rank(), 8u);
    auto d = f7_graded(2, 3, 2);
    EXPECT_EQ(d.basis_l().size(), 6u);
    EXPECT_EQ(d.basis_m().size(), 10u);
    EXPECT_EQ(d.basis_lm().size(), 21u);
    EXPECT_EQ(graded_rank({1, 1, 1}), 8u);
    EXPECT_EQ(graded_rank({1, 1, 2}), 13u);
    EXPECT_EQ(graded_rank({2, 3, 2}), 38u);
    EXPECT_EQ(projective_line_shortcut({1, 1, 1}), 9u);
    EXPECT_EQ(error_code([] { graded_rank({0, 1, 1}); }), ErrorCode::BadDegrees);
    EXPECT_EQ(error_code([] { f7_graded(1, 1, 0); }), ErrorCode::BadDegrees);
}

TEST(Graded, RankMatchesEnumeration) {
    for (std::uint32_t l = 1; l <= 10; ++l)
        for (std::uint32_t m = 1; l + m <= 11; ++m)
            for (std::uint32_t n = 1; l + m + n <= 12; ++n) {
                std::uint64_t enumerated = 1 + monomials_of_degree(n + 1, l).size() + monomials_of_degree(n + 1, m).size() +
                                           monomials_of_degree(n + 1, l + m).size();
                EXPECT_EQ(graded_rank({l, m, n}), enumerated);
                EXPECT_EQ(homogeneous_rank(l, n), brute_count(l, n));
                if (n == 1) {
                    EXPECT_EQ(graded_rank({l, m, n}) + 1, projective_line_shortcut({l, m, n}));
                }
            }
}

TEST(Graded, Products) {
    auto c = f7_graded(1, 1, 1);
    auto x = c.from_json(nlohmann::json::parse(R"({"a":"0","fl":"t0","fm":"0","flm":"0"})"));
    auto y = c.from_json(nlohmann::json::parse(R"({"a":"0","fl":"0","fm":"t1","flm":"0"})"));
    EXPECT_EQ(c.to_json(c.mul(x, y)), nlohmann::json::parse(R"({"a":"0","fl":"0","fm":"0","flm":"t0*t1"})"));
    EXPECT_EQ(c.to_json(c.mul(y, x)), nlohmann::json::parse(R"({"a":"0","fl":"0","fm":"0","flm":"6*t0*t1"})"));
    SampleStream<GradedAlgebra<ModularRing>> s(c, 1);
    for (int i = 0; i < 100; ++i) {
        auto z = s.next();
        EXPECT_EQ(c.mul(c.one(), z), z);
        EXPECT_EQ(c.from_json(c.to_json(z)), z);
    }
}

TEST(Graded, JsonErrors) {
    auto c = f7_graded(1, 2, 1);
    EXPECT_EQ(error_code([&] { c.from_json(nlohmann::json::parse(R"({"a":"1","fl":"t0^2","fm":"0","flm":"0"})")); }),
              ErrorCode::NotHomogeneous);
    EXPECT_EQ(error_code([&] { c.from_json(nlohmann::json::parse(R"({"a":"1","fl":"t0","fm":"t0+t1^2","flm":"0"})")); }),
              ErrorCode::NotHomogeneous);
    EXPECT_EQ(error_code([&] { c.from_json(nlohmann::json::parse(R"({"a":"1","fl":"t5","fm":"0","flm":"0"})")); }),
              ErrorCode::ParseError);
    EXPECT_EQ(error_code([&] { c.from_json(nlohmann::json::parse(R"({"a":"1","fl":"t0"})")); }), ErrorCode::ParseError);
}

TEST(Graded, Suites) {
    for (auto spec : {GradedSpec{1, 1, 1}, GradedSpec{1, 2, 1}, GradedSpec{2, 1, 2}}) {
        GradedAlgebra<ModularRing> c(ModularRing::prime_field(7), spec);
        for (const auto* suite : {"flexible", "jordan", "quadratic"})
            for (const auto& r : run_suite(c, suite, Sampler::seeded(3, 300))) EXPECT_TRUE(r.pass()) << r.identity;
    }
    GradedAlgebra<RationalField> q(RationalField{}, {1, 1, 1});
    for (const auto& r : run_suite(q, "all-applicable", Sampler::seeded(4, 200))) EXPECT_TRUE(r.pass()) << r.identity;
}

TEST(Graded, RadicalAnalysis) {
    for (auto [spec, dim] : {std::pair{GradedSpec{1, 1, 1}, 7u}, std::pair{GradedSpec{1, 2, 1}, 9u},
                             std::pair{GradedSpec{2, 2, 2}, 27u}}) {
        GradedAlgebra<ModularRing> c(ModularRing::prime_field(7), spec);
        auto rad = radical_analysis(c);
        EXPECT_EQ(rad.dimension, dim);
        EXPECT_EQ(rad.nilpotency, 3u);
        EXPECT_TRUE(rad.ideal);
        EXPECT_TRUE(rad.square_in_top_slot);
        for (const auto& r : graded_checks(c, &rad, Sampler::seeded(5, 300))) EXPECT_TRUE(r.pass()) << r.identity;
    }
    GradedAlgebra<ModularRing> z15(ModularRing::modular(15), {1, 1, 1});
    EXPECT_EQ(error_code([&] { radical_analysis(z15); }), ErrorCode::BaseNotField);
}

TEST(Graded, InfoFlagsShortcut) {
    auto c = f7_graded(1, 1, 1);
    auto rad = radical_analysis(c);
    auto checks = graded_checks(c, &rad, Sampler::seeded(6, 50));
    auto j = graded_info(c, checks, std::optional(rad));
    EXPECT_EQ(j["rank"], 8);
    EXPECT_EQ(j["radical_dim"], 7);
    EXPECT_EQ(j["nilpotency"], 3);
    EXPECT_EQ(j["n1_shortcut"]["value"], 9);
    EXPECT_FALSE(j["n1_shortcut"]["agrees"].get<bool>());
    auto d = f7_graded(1, 1, 2);
    EXPECT_FALSE(graded_info(d, {}, std::optional<RadicalAnalysis<ModularRing>>{}).contains("n1_shortcut"));
}
