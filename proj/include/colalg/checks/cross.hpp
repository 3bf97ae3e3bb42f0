#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "colalg/algebras.hpp"
#include "colalg/checks/report.hpp"
#include "colalg/checks/sampler.hpp"

namespace colalg {

namespace detail {

/// pred(x, y) on every ordered pair of basis elements, then on `count` sampled
/// pairs. Basis pairs come first in the stream index.
template <Algebra A, class Pred>
CheckReport check_pairs(const A& alg, std::string name, const Sampler& sampler, Pred&& pred) {
    CheckReport report(std::move(name));
    auto check = [&](const auto& x, const auto& y) {
        ++report.samples;
        if (!pred(x, y))
            report.record_failure(
                {{"index", report.samples - 1}, {"inputs", nlohmann::json::array({alg.to_json(x), alg.to_json(y)})}});
    };
    auto b = basis(alg);
    for (const auto& x : b)
        for (const auto& y : b) check(x, y);
    if (sampler.mode == SampleMode::Seeded) {
        SampleStream<A> stream(alg, sampler.seed);
        for (std::size_t k = 0; k < sampler.count; ++k) {
            auto x = stream.next();
            auto y = stream.next();
            check(x, y);
        }
    }
    return report;
}

}  // namespace detail

/// (a, u, ud) -> (a, p) with p_i = (-u_i, ud_i) in R x R.
template <CommutativeRing R>
ColHermElement<element_t<R>> split_to_hermitian(const ColSplitElement<element_t<R>>& x) {
    ColHermElement<element_t<R>> y;
    y.a = x.a;
    for (std::size_t i = 0; i < 3; ++i) y.u[i] = {-x.u[i], x.ud[i]};
    return y;
}

/// ((a', a''), (p', p'')) -> (a', -p', p'', a'').
template <CommutativeRing R>
ZornElement<element_t<R>> cayley_to_zorn(const CayElement<element_t<R>>& x) {
    ZornElement<element_t<R>> z;
    z.a = x.a.first;
    z.ap = x.a.second;
    for (std::size_t i = 0; i < 3; ++i) {
        z.u[i] = -x.u[i].first;
        z.ud[i] = x.u[i].second;
    }
    return z;
}

/// Compares the split constructions with their hermitian counterparts over
/// the split torus S = R x R, the induced form on T + Td (H = I) and lambda = 1.
/// `space` replaces that hermitian space, e.g. to confirm that a wrong Gram
/// matrix is detected.
template <CommutativeRing R>
std::vector<CheckReport> cross_construction_check(const R& ring, const Sampler& sampler,
                                                  std::type_identity_t<std::optional<HermitianSpace<R>>> space = std::nullopt) {
    using E = element_t<R>;
    HermitianSpace<R> p = space ? *space : HermitianSpace<R>::identity(EtaleAlgebra<R>::split(ring));
    if (!p.etale().is_split()) throw Error(ErrorCode::InvalidConfig, "cross-construction check needs the split torus");

    ColSplitAlgebra<R> col(ring);
    ColHermAlgebra<R> col_h(p);
    ZornAlgebra<R> zorn(ring);
    WSplitAlgebra<R> w(ring);
    WHermAlgebra<R> w_h(p);
    CayAlgebra<R> cay(p);

    std::vector<CheckReport> out;
    auto psi = [](const ColSplitElement<E>& x) { return split_to_hermitian<R>(x); };
    out.push_back(detail::check_pairs(col, "col-hermitian-vs-col-split", sampler, [&](const auto& x, const auto& y) {
        return psi(col.mul(x, y)) == col_h.mul(psi(x), psi(y)) && psi(col.one()) == col_h.one();
    }));

    auto lift = [&](const WSplitElement<E>& x) { return ZornElement<E>{ring.zero(), x.u, x.ud, ring.zero()}; };
    out.push_back(detail::check_pairs(w, "zorn-projection-vs-w-split", sampler, [&](const auto& x, const auto& y) {
        auto z = zorn.mul(lift(x), lift(y));
        return WSplitElement<E>{z.u, z.ud} == w.mul(x, y);
    }));

    auto to_herm = [&](const WSplitElement<E>& x) {
        return split_to_hermitian<R>(ColSplitElement<E>{ring.zero(), x.u, x.ud}).u;
    };
    out.push_back(detail::check_pairs(w, "w-hermitian-vs-w-split", sampler, [&](const auto& x, const auto& y) {
        return to_herm(w.mul(x, y)) == w_h.mul({to_herm(x)}, {to_herm(y)}).u;
    }));

    auto phi = [](const CayElement<E>& x) { return cayley_to_zorn<R>(x); };
    out.push_back(detail::check_pairs(cay, "cayley-vs-zorn", sampler, [&](const auto& x, const auto& y) {
        return phi(cay.mul(x, y)) == zorn.mul(phi(x), phi(y)) && phi(cay.one()) == zorn.one();
    }));
    return out;
}

}  // namespace colalg
