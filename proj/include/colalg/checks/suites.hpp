#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "colalg/algebras/generic.hpp"
#include "colalg/checks/report.hpp"
#include "colalg/checks/sampler.hpp"
#include "colalg/error.hpp"

namespace colalg {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"flexible",  "jordan",  "quadratic",  "composition",  "anticommutative",
                                                   "quartic",   "herm-cross", "power-assoc", "all-applicable"};
    return names;
}

template <class A>
concept HasQuarticNorm = Algebra<A> && requires(const A& alg, const typename A::element_type& x) {
    { alg.quartic_norm(x) } -> std::same_as<typename A::scalar_type>;
};

template <Algebra A>
bool suite_applicable(const std::string& suite) {
    if (suite == "flexible" || suite == "jordan" || suite == "power-assoc" || suite == "all-applicable") return true;
    if (suite == "quadratic") return QuadraticAlgebra<A>;
    if (suite == "composition") return A::composition;
    if (suite == "anticommutative") return A::anticommutative;
    if (suite == "quartic") return HasQuarticNorm<A>;
    if (suite == "herm-cross") return HermitianFamily<A>;
    return false;
}

namespace suites {

template <Algebra A>
std::vector<CheckReport> flexible(const A& alg, const Sampler& s) {
    return {run_identity<2>(alg, "flexible", s, [&](const auto& xs) {
        const auto& [x, y] = xs;
        return alg.equal(alg.mul(alg.mul(x, y), x), alg.mul(x, alg.mul(y, x)));
    })};
}

template <Algebra A>
std::vector<CheckReport> jordan(const A& alg, const Sampler& s) {
    return {run_identity<2>(alg, "jordan", s, [&](const auto& xs) {
        const auto& [x, y] = xs;
        auto x2 = alg.mul(x, x);
        return alg.equal(alg.mul(alg.mul(x, y), x2), alg.mul(x, alg.mul(y, x2)));
    })};
}

template <Algebra A>
std::vector<CheckReport> power_assoc(const A& alg, const Sampler& s) {
    return {run_identity<1>(alg, "power-assoc", s, [&](const auto& xs) {
        const auto& x = xs[0];
        auto x2 = alg.mul(x, x);
        return alg.equal(alg.mul(x2, x), alg.mul(x, x2)) && alg.equal(alg.mul(x2, x2), alg.mul(alg.mul(x2, x), x));
    })};
}

template <QuadraticAlgebra A>
std::vector<CheckReport> quadratic(const A& alg, const Sampler& s) {
    auto one = alg.one();
    std::vector<CheckReport> out;
    out.push_back(run_identity<1>(alg, "quadratic-relation", s, [&](const auto& xs) {
        const auto& x = xs[0];
        auto lhs = alg.add(alg.sub(alg.mul(x, x), alg.scale(alg.trace(x), x)), alg.scale(alg.norm(x), one));
        return alg.equal(lhs, alg.zero());
    }));
    out.push_back(run_identity<1>(alg, "unit-law", s, [&](const auto& xs) {
        const auto& x = xs[0];
        return alg.equal(alg.mul(one, x), x) && alg.equal(alg.mul(x, one), x);
    }));
    return out;
}

template <QuadraticAlgebra A>
std::vector<CheckReport> composition(const A& alg, const Sampler& s) {
    return {run_identity<2>(alg, "norm-composition", s, [&](const auto& xs) {
        const auto& [x, y] = xs;
        return alg.norm(alg.mul(x, y)) == alg.norm(x) * alg.norm(y);
    })};
}

template <Algebra A>
std::vector<CheckReport> anticommutative(const A& alg, const Sampler& s) {
    std::vector<CheckReport> out;
    out.push_back(run_identity<1>(alg, "square-zero", s, [&](const auto& xs) {
        return alg.equal(alg.mul(xs[0], xs[0]), alg.zero());
    }));
    out.push_back(run_identity<2>(alg, "anticommutativity", s, [&](const auto& xs) {
        const auto& [x, y] = xs;
        return alg.equal(alg.mul(x, y), alg.neg(alg.mul(y, x)));
    }));
    return out;
}

/// ((w v) v) v = N(v) (w v) with the family's quartic norm N, plus the same
/// identity with -N, which is what the products actually satisfy.
template <HasQuarticNorm A>
std::vector<CheckReport> quartic(const A& alg, const Sampler& s) {
    auto residual = [&](const auto& w, const auto& v, bool flip) {
        auto wv = alg.mul(w, v);
        auto n = alg.quartic_norm(v);
        if (flip) n = -n;
        return alg.equal(alg.mul(alg.mul(wv, v), v), alg.scale(n, wv));
    };
    std::vector<CheckReport> out;
    out.push_back(run_identity<2>(alg, "quartic", s, [&](const auto& xs) { return residual(xs[0], xs[1], false); }));
    out.push_back(run_identity<2>(alg, "quartic-opposite-sign", s,
                                  [&](const auto& xs) { return residual(xs[0], xs[1], true); }));
    return out;
}

/// Identities of the hermitian cross product on the vector part P.
/// h is conjugate-linear in the first slot.
template <HermitianFamily A>
std::vector<CheckReport> herm_cross(const A& alg, const Sampler& s) {
    const auto& p = alg.space();
    const auto& S = p.etale();
    auto vec = [&](const auto& x) { return alg.vector_part(x); };
    std::vector<CheckReport> out;

    out.push_back(run_identity<3>(alg, "semilinearity", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        auto a = vec(xs[2])[0];
        auto lhs = p.scale(a, p.cross(u, v));
        return lhs == p.cross(p.scale(S.conj(a), u), v) && lhs == p.cross(u, p.scale(S.conj(a), v));
    }));
    out.push_back(run_identity<3>(alg, "trilinear-symmetry", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]), w = vec(xs[2]);
        auto x = p.herm(u, p.cross(v, w));
        auto uv = p.cross(u, v);
        return x == S.conj(p.herm(uv, w)) && x == p.herm(w, uv);
    }));
    out.push_back(run_identity<2>(alg, "polar-orthogonality", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        return p.bilinear(p.cross(u, v), u).is_zero();
    }));
    out.push_back(run_identity<2>(alg, "cross-flexible", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        return p.cross(p.cross(u, v), u) == p.cross(u, p.cross(v, u));
    }));
    out.push_back(run_identity<2>(alg, "left-orthogonality", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        return p.herm(u, p.cross(u, v)).is_zero();
    }));
    out.push_back(run_identity<2>(alg, "left-double-cross", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        auto rhs = p.scale(p.herm(u, v), u) - p.scale(p.herm(u, u), v);
        return p.cross(u, p.cross(u, v)) == rhs;
    }));
    out.push_back(run_identity<2>(alg, "right-orthogonality", s, [&](const auto& xs) {
        auto u = vec(xs[0]), v = vec(xs[1]);
        return p.herm(p.cross(u, v), v).is_zero();
    }));
    auto right = [&](const auto& u, const auto& v, bool flip) {
        auto rhs = p.scale(p.herm(v, v), u) - p.scale(p.herm(v, u), v);
        return p.cross(p.cross(u, v), v) == (flip ? -rhs : rhs);
    };
    out.push_back(run_identity<2>(alg, "right-double-cross", s,
                                  [&](const auto& xs) { return right(vec(xs[0]), vec(xs[1]), false); }));
    out.push_back(run_identity<2>(alg, "right-double-cross-opposite-sign", s,
                                  [&](const auto& xs) { return right(vec(xs[0]), vec(xs[1]), true); }));
    return out;
}

}  // namespace suites

/// One report per identity of the named suite. "all-applicable" runs every
/// suite that applies to A, in the order of suite_names().
template <Algebra A>
std::vector<CheckReport> run_suite(const A& alg, const std::string& suite, const Sampler& sampler) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw Error(ErrorCode::InvalidConfig, "unknown suite '" + suite + "'");
    if (!suite_applicable<A>(suite))
        throw Error(ErrorCode::SuiteNotApplicable, "suite '" + suite + "' does not apply to " + std::string(family_name(A::family)));

    if (suite == "all-applicable") {
        std::vector<CheckReport> out;
        for (const auto& name : names) {
            if (name == "all-applicable" || !suite_applicable<A>(name)) continue;
            auto part = run_suite(alg, name, sampler);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (suite == "flexible") return suites::flexible(alg, sampler);
    if (suite == "jordan") return suites::jordan(alg, sampler);
    if (suite == "power-assoc") return suites::power_assoc(alg, sampler);
    if constexpr (QuadraticAlgebra<A>) {
        if (suite == "quadratic") return suites::quadratic(alg, sampler);
        if (suite == "composition") return suites::composition(alg, sampler);
    }
    if (suite == "anticommutative") return suites::anticommutative(alg, sampler);
    if constexpr (HasQuarticNorm<A>)
        if (suite == "quartic") return suites::quartic(alg, sampler);
    if constexpr (HermitianFamily<A>)
        if (suite == "herm-cross") return suites::herm_cross(alg, sampler);
    throw Error(ErrorCode::SuiteNotApplicable, "suite '" + suite + "' does not apply to " + std::string(family_name(A::family)));
}

/// The norm-composition identity without suite gating; used to show that the
/// harness reports failures on families whose norm is not multiplicative.
template <QuadraticAlgebra A>
CheckReport composition_unchecked(const A& alg, const Sampler& sampler) {
    return suites::composition(alg, sampler).front();
}

}  // namespace colalg
