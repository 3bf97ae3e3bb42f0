#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "colalg/algebras/common.hpp"
#include "colalg/algebras/generic.hpp"
#include "colalg/algebras/split.hpp"
#include "colalg/checks/report.hpp"
#include "colalg/checks/sampler.hpp"
#include "colalg/error.hpp"
#include "colalg/rings.hpp"

namespace colalg {

struct GradedSpec {
    std::uint32_t l = 1, m = 1, n = 1;

    void validate() const {
        if (l < 1 || m < 1 || n < 1)
            throw Error(ErrorCode::BadDegrees, "graded construction needs l, m, n >= 1 (got " + std::to_string(l) + ", " +
                                                   std::to_string(m) + ", " + std::to_string(n) + ")");
    }
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Rank of homogeneous degree-d polynomials in n+1 variables.
inline std::uint64_t homogeneous_rank(std::uint32_t d, std::uint32_t n) { return binomial(d + n, n); }

/// s = 1 + C(l+n, n) + C(m+n, n) + C(l+m+n, n).
inline std::uint64_t graded_rank(const GradedSpec& spec) {
    spec.validate();
    return 1 + homogeneous_rank(spec.l, spec.n) + homogeneous_rank(spec.m, spec.n) +
           homogeneous_rank(spec.l + spec.m, spec.n);
}

/// Closed form sometimes quoted for n = 1; it disagrees with graded_rank by one.
inline std::uint64_t projective_line_shortcut(const GradedSpec& spec) { return 5 + 2 * (std::uint64_t{spec.l} + spec.m); }

/// (a, f_l + f_m, f_lm) with each f a coefficient vector over the grlex
/// monomial basis of its degree.
template <RingElement E>
struct GradedElement {
    E a;
    std::vector<E> fl, fm, flm;

    friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

namespace detail {

template <CommutativeRing K>
std::vector<element_t<K>> zeros(const K& k, std::size_t n) {
    return std::vector<element_t<K>>(n, k.zero());
}

/// Row echelon form over a field; returns the rank and reduces `rows` in place.
template <CommutativeRing K>
std::size_t row_reduce(const K& k, std::vector<std::vector<element_t<K>>>& rows, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t rank = 0;
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        auto inv = k.inverse(rows[rank][col]);
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            auto f = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace detail

template <CommutativeRing B>
class GradedAlgebra {
public:
    using ring_type = B;
    using scalar_type = element_t<B>;
    using element_type = GradedElement<scalar_type>;
    using poly_ring_type = PolynomialRing<B>;
    using poly_type = element_t<poly_ring_type>;

    static constexpr Family family = Family::Graded;
    static constexpr bool unital = true;
    static constexpr bool quadratic = true;
    static constexpr bool composition = false;
    static constexpr bool anticommutative = false;
    static constexpr bool hermitian = false;

    GradedAlgebra(B ring, GradedSpec spec) : ring_(std::move(ring)), spec_(spec), poly_(ring_, variable_names(spec)) {
        spec_.validate();
        ml_ = monomials_of_degree(spec_.n + 1, spec_.l);
        mm_ = monomials_of_degree(spec_.n + 1, spec_.m);
        mlm_ = monomials_of_degree(spec_.n + 1, spec_.l + spec_.m);
        std::map<Monomial, std::size_t, GrlexDescending> index;
        for (std::size_t k = 0; k < mlm_.size(); ++k) index[mlm_[k]] = k;
        product_index_.resize(ml_.size());
        for (std::size_t i = 0; i < ml_.size(); ++i)
            for (const auto& g : mm_) product_index_[i].push_back(index.at(ml_[i] * g));
        two_ = ring_.from_integer(2);
    }

    const B& ring() const { return ring_; }
    const GradedSpec& spec() const { return spec_; }
    const poly_ring_type& polynomial_ring() const { return poly_; }
    const std::vector<Monomial>& basis_l() const { return ml_; }
    const std::vector<Monomial>& basis_m() const { return mm_; }
    const std::vector<Monomial>& basis_lm() const { return mlm_; }

    std::size_t rank() const { return 1 + ml_.size() + mm_.size() + mlm_.size(); }
    std::string name() const {
        return "C_{" + std::to_string(spec_.l) + "," + std::to_string(spec_.m) + "}(" + ring_.name() + ", n=" +
               std::to_string(spec_.n) + ")";
    }
    std::vector<std::string> basis_labels() const {
        std::vector<std::string> out = {"1"};
        for (const auto& mono : ml_) out.push_back("fl:" + poly_.format_monomial(mono));
        for (const auto& mono : mm_) out.push_back("fm:" + poly_.format_monomial(mono));
        for (const auto& mono : mlm_) out.push_back("flm:" + poly_.format_monomial(mono));
        return out;
    }

    element_type zero() const {
        return {ring_.zero(), detail::zeros(ring_, ml_.size()), detail::zeros(ring_, mm_.size()),
                detail::zeros(ring_, mlm_.size())};
    }
    element_type one() const {
        auto x = zero();
        x.a = ring_.one();
        return x;
    }

    element_type add(const element_type& x, const element_type& y) const { return combine(x, y, [](auto& a, const auto& b) { a = a + b; }); }
    element_type sub(const element_type& x, const element_type& y) const { return combine(x, y, [](auto& a, const auto& b) { a = a - b; }); }
    element_type neg(const element_type& x) const { return sub(zero(), x); }
    element_type scale(const scalar_type& r, const element_type& x) const {
        element_type y = x;
        y.a = r * y.a;
        for (auto* v : {&y.fl, &y.fm, &y.flm})
            for (auto& c : *v) c = r * c;
        return y;
    }
    bool equal(const element_type& x, const element_type& y) const { return x == y; }

    /// (ab, (a g_l + b f_l) + (a g_m + b f_m), b f_lm + a g_lm + f_l g_m - f_m g_l)
    element_type mul(const element_type& x, const element_type& y) const {
        element_type z;
        z.a = x.a * y.a;
        auto lin = [&](const std::vector<scalar_type>& f, const std::vector<scalar_type>& g) {
            std::vector<scalar_type> out(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) out[i] = x.a * g[i] + y.a * f[i];
            return out;
        };
        z.fl = lin(x.fl, y.fl);
        z.fm = lin(x.fm, y.fm);
        z.flm = lin(x.flm, y.flm);
        for (std::size_t i = 0; i < ml_.size(); ++i)
            for (std::size_t j = 0; j < mm_.size(); ++j) {
                auto& t = z.flm[product_index_[i][j]];
                t = t + x.fl[i] * y.fm[j] - x.fm[j] * y.fl[i];
            }
        return z;
    }

    /// n0(x) = a^2.
    scalar_type norm(const element_type& x) const { return x.a * x.a; }
    scalar_type trace(const element_type& x) const { return two_ * x.a; }
    element_type involution(const element_type& x) const {
        auto y = neg(x);
        y.a = x.a;
        return y;
    }

    std::vector<scalar_type> coords(const element_type& x) const {
        std::vector<scalar_type> c = {x.a};
        c.insert(c.end(), x.fl.begin(), x.fl.end());
        c.insert(c.end(), x.fm.begin(), x.fm.end());
        c.insert(c.end(), x.flm.begin(), x.flm.end());
        return c;
    }
    element_type from_coords(const std::vector<scalar_type>& c) const {
        if (c.size() != rank()) throw Error(ErrorCode::InvalidConfig, "expected " + std::to_string(rank()) + " coordinates");
        auto it = c.begin();
        element_type x;
        x.a = *it++;
        for (auto [v, k] : {std::pair{&x.fl, ml_.size()}, std::pair{&x.fm, mm_.size()}, std::pair{&x.flm, mlm_.size()}}) {
            v->assign(it, it + static_cast<std::ptrdiff_t>(k));
            it += static_cast<std::ptrdiff_t>(k);
        }
        return x;
    }

    poly_type to_polynomial(const std::vector<scalar_type>& f, const std::vector<Monomial>& monos) const {
        poly_type p;
        for (std::size_t i = 0; i < f.size(); ++i) p.add_term(monos[i], f[i]);
        return p;
    }
    std::vector<scalar_type> from_polynomial(const poly_type& p, const std::vector<Monomial>& monos, std::uint32_t degree,
                                             const char* slot) const {
        if (!p.is_homogeneous(degree))
            throw Error(ErrorCode::NotHomogeneous,
                        std::string(slot) + " must be homogeneous of degree " + std::to_string(degree) + ", got " + poly_.format(p));
        auto f = detail::zeros(ring_, monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (auto it = p.terms().find(monos[i]); it != p.terms().end()) f[i] = it->second;
        return f;
    }

    nlohmann::json to_json(const element_type& x) const {
        return {{"a", ring_.format(x.a)},
                {"fl", poly_.format(to_polynomial(x.fl, ml_))},
                {"fm", poly_.format(to_polynomial(x.fm, mm_))},
                {"flm", poly_.format(to_polynomial(x.flm, mlm_))}};
    }
    element_type from_json(const nlohmann::json& j) const {
        if (!j.is_object()) throw ParseError(0, "graded element must be a JSON object");
        auto poly = [&](const char* key) {
            const auto& v = detail::field(j, key);
            if (!v.is_string()) throw ParseError(0, std::string("field '") + key + "' must be a string");
            return poly_.parse(v.template get<std::string>());
        };
        element_type x;
        x.a = detail::scalar_from_json(ring_, detail::field(j, "a"), "a");
        x.fl = from_polynomial(poly("fl"), ml_, spec_.l, "fl");
        x.fm = from_polynomial(poly("fm"), mm_, spec_.m, "fm");
        x.flm = from_polynomial(poly("flm"), mlm_, spec_.l + spec_.m, "flm");
        return x;
    }

    nlohmann::json spec_json() const { return {{"l", spec_.l}, {"m", spec_.m}, {"n", spec_.n}}; }

    /// Image in the split colour algebra over R[t0..tn] with lambda = 1:
    /// T-slot (f_l, f_m, 0), dual slot (0, 0, f_lm).
    ColSplitElement<poly_type> embed(const element_type& x) const {
        ColSplitElement<poly_type> y;
        y.a = poly_.constant(x.a);
        y.u = {{to_polynomial(x.fl, ml_), to_polynomial(x.fm, mm_), poly_.zero()}};
        y.ud = {{poly_.zero(), poly_.zero(), to_polynomial(x.flm, mlm_)}};
        return y;
    }

private:
    static std::vector<std::string> variable_names(const GradedSpec& spec) {
        spec.validate();
        std::vector<std::string> v;
        for (std::uint32_t i = 0; i <= spec.n; ++i) v.push_back("t" + std::to_string(i));
        return v;
    }

    template <class F>
    element_type combine(const element_type& x, const element_type& y, F f) const {
        element_type z = x;
        f(z.a, y.a);
        for (std::size_t i = 0; i < z.fl.size(); ++i) f(z.fl[i], y.fl[i]);
        for (std::size_t i = 0; i < z.fm.size(); ++i) f(z.fm[i], y.fm[i]);
        for (std::size_t i = 0; i < z.flm.size(); ++i) f(z.flm[i], y.flm[i]);
        return z;
    }

    B ring_;
    GradedSpec spec_;
    poly_ring_type poly_;
    std::vector<Monomial> ml_, mm_, mlm_;
    std::vector<std::vector<std::size_t>> product_index_;
    scalar_type two_;
};

template <CommutativeRing B>
struct RadicalAnalysis {
    std::vector<std::vector<element_t<B>>> basis;  // coordinates of a basis of rad n0
    std::size_t dimension = 0;
    std::size_t nilpotency = 0;                    // least k with rad^k = 0
    std::vector<std::size_t> power_dimensions;     // dim rad^1, rad^2, ...
    bool ideal = false;
    bool square_in_top_slot = false;
};

/// Radical of the polar form of n0, its ideal property and nilpotency index.
template <CommutativeRing B>
RadicalAnalysis<B> radical_analysis(const GradedAlgebra<B>& alg) {
    const auto& k = alg.ring();
    if (!k.is_field()) throw Error(ErrorCode::BaseNotField, "radical analysis needs a field base, got " + k.name());
    using E = element_t<B>;
    std::size_t s = alg.rank();
    auto b = basis(alg);

    // kernel of the Gram matrix of n0(x, y) = n0(x + y) - n0(x) - n0(y)
    std::vector<std::vector<E>> gram(s, detail::zeros(k, s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) gram[i][j] = polar_norm(alg, b[i], b[j]);
    std::vector<std::size_t> pivots;
    detail::row_reduce(k, gram, &pivots);
    RadicalAnalysis<B> out;
    std::vector<bool> is_pivot(s, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < s; ++free) {
        if (is_pivot[free]) continue;
        auto v = detail::zeros(k, s);
        v[free] = k.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -gram[r][free];
        out.basis.push_back(std::move(v));
    }
    out.dimension = out.basis.size();

    auto span_rank = [&](std::vector<std::vector<E>> rows) { return detail::row_reduce(k, rows); };
    auto contains = [&](const std::vector<std::vector<E>>& span, const std::vector<E>& v) {
        auto rows = span;
        std::size_t r0 = span_rank(rows);
        rows.push_back(v);
        return span_rank(rows) == r0;
    };

    std::vector<typename GradedAlgebra<B>::element_type> rad;
    for (const auto& v : out.basis) rad.push_back(alg.from_coords(v));

    out.ideal = true;
    for (const auto& x : b)
        for (const auto& r : rad)
            out.ideal = out.ideal && contains(out.basis, alg.coords(alg.mul(x, r))) &&
                        contains(out.basis, alg.coords(alg.mul(r, x)));

    // rad^{k+1} = rad^k rad + rad rad^k
    std::vector<std::vector<E>> power = out.basis;
    detail::row_reduce(k, power);
    out.power_dimensions.push_back(power.size());
    while (!power.empty() && out.power_dimensions.size() <= s + 1) {
        std::vector<std::vector<E>> next;
        for (const auto& p : power) {
            auto x = alg.from_coords(p);
            for (const auto& r : rad) {
                next.push_back(alg.coords(alg.mul(x, r)));
                next.push_back(alg.coords(alg.mul(r, x)));
            }
        }
        detail::row_reduce(k, next);
        if (out.power_dimensions.size() == 1) {
            out.square_in_top_slot = true;
            std::size_t top = 1 + alg.basis_l().size() + alg.basis_m().size();
            for (const auto& v : next)
                for (std::size_t i = 0; i < top; ++i) out.square_in_top_slot = out.square_in_top_slot && v[i].is_zero();
        }
        power = std::move(next);
        out.power_dimensions.push_back(power.size());
    }
    out.nilpotency = out.power_dimensions.size();
    if (!power.empty()) out.nilpotency = 0;  // not nilpotent
    return out;
}

/// Structural checks reported by graded-info.
template <CommutativeRing B>
std::vector<CheckReport> graded_checks(const GradedAlgebra<B>& alg, const RadicalAnalysis<B>* rad, const Sampler& sampler) {
    const auto& sp = alg.spec();
    std::vector<CheckReport> out;
    auto single = [&](std::string name, bool ok, nlohmann::json detail) {
        CheckReport r(std::move(name));
        r.samples = 1;
        if (!ok) r.record_failure(std::move(detail));
        out.push_back(std::move(r));
    };
    single("rank-formula", graded_rank(sp) == alg.rank(),
           {{"enumerated", alg.rank()}, {"formula", graded_rank(sp)}});
    if (rad) {
        std::uint64_t expected = homogeneous_rank(sp.l, sp.n) + homogeneous_rank(sp.m, sp.n) + homogeneous_rank(sp.l + sp.m, sp.n);
        single("radical-dimension", rad->dimension == expected, {{"computed", rad->dimension}, {"formula", expected}});
        single("radical-ideal", rad->ideal, {{"ideal", false}});
        single("radical-square-in-top-slot", rad->square_in_top_slot, {{"square_in_top_slot", false}});
        single("radical-cube-zero", rad->power_dimensions.size() >= 3 && rad->power_dimensions[2] == 0,
               {{"power_dimensions", rad->power_dimensions}});
    }

    PolynomialRing<B> pr = alg.polynomial_ring();
    ColSplitAlgebra<PolynomialRing<B>> col(pr);
    out.push_back(run_identity<2>(alg, "embedding", sampler, [&](const auto& xs) {
        return col.mul(alg.embed(xs[0]), alg.embed(xs[1])) == alg.embed(alg.mul(xs[0], xs[1]));
    }));
    out.push_back(run_identity<2>(alg, "norm-multiplicative", sampler, [&](const auto& xs) {
        return alg.norm(alg.mul(xs[0], xs[1])) == alg.norm(xs[0]) * alg.norm(xs[1]);
    }));
    return out;
}

/// graded-info payload: rank, radical statistics, checks, and for n = 1 the
/// comparison with the 5 + 2(l + m) shortcut.
template <CommutativeRing B>
nlohmann::json graded_info(const GradedAlgebra<B>& alg, const std::vector<CheckReport>& checks,
                           const std::optional<RadicalAnalysis<B>>& rad) {
    const auto& sp = alg.spec();
    nlohmann::json j = {{"rank", alg.rank()},
                        {"spec", alg.spec_json()},
                        {"component_ranks", {alg.basis_l().size(), alg.basis_m().size(), alg.basis_lm().size()}}};
    j["radical_dim"] = rad ? nlohmann::json(rad->dimension) : nlohmann::json(nullptr);
    j["nilpotency"] = rad ? nlohmann::json(rad->nilpotency) : nlohmann::json(nullptr);
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    j["checks"] = cs;
    if (sp.n == 1) {
        auto shortcut = projective_line_shortcut(sp);
        j["n1_shortcut"] = {{"formula", "5+2(l+m)"},
                            {"value", shortcut},
                            {"general_formula", graded_rank(sp)},
                            {"agrees", shortcut == graded_rank(sp)}};
    }
    return j;
}

}  // namespace colalg
