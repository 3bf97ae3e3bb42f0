#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "colalg/algebras/generic.hpp"
#include "colalg/error.hpp"
#include "colalg/rings.hpp"

namespace colalg {

/// splitmix64: 64-bit state advanced by a fixed odd increment, output mixed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound) by rejection, so streams agree across platforms.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }
    /// Skip n outputs in O(1).
    void jump(std::uint64_t n) { state_ += n * 0x9e3779b97f4a7c15ULL; }

private:
    std::uint64_t state_;
};

enum class SampleMode { Seeded, Exhaustive };

struct Sampler {
    static constexpr std::size_t default_cap = 6561;  // 3^8

    std::uint64_t seed = 42;
    SampleMode mode = SampleMode::Seeded;
    std::size_t count = 1000;
    std::size_t cap = default_cap;

    static Sampler seeded(std::uint64_t seed, std::size_t count) { return {seed, SampleMode::Seeded, count, default_cap}; }
    static Sampler exhaustive(std::size_t cap = default_cap) { return {0, SampleMode::Exhaustive, 0, cap}; }
};

inline SampleMode parse_sample_mode(const std::string& s) {
    if (s == "seeded") return SampleMode::Seeded;
    if (s == "exhaustive") return SampleMode::Exhaustive;
    throw Error(ErrorCode::InvalidConfig, "mode must be \"seeded\" or \"exhaustive\", got '" + s + "'");
}

// ---------------------------------------------------------------------------
// Random scalars: fractions with |numerator| <= 10 and 1 <= denominator <= 10,
// uniform residues, and polynomials of total degree <= 2.

inline Rational sample_scalar(const RationalField&, SplitMix64& rng) {
    long num = static_cast<long>(rng.below(21)) - 10;
    long den = static_cast<long>(rng.below(10)) + 1;
    return Rational(mpz_class(num), mpz_class(den));
}

inline ModInt sample_scalar(const ModularRing& ring, SplitMix64& rng) {
    return ModInt(rng.below(ring.modulus()), ring.modulus());
}

template <CommutativeRing B>
Polynomial<element_t<B>> sample_scalar(const PolynomialRing<B>& ring, SplitMix64& rng) {
    constexpr std::uint32_t max_degree = 2;
    Polynomial<element_t<B>> p;
    for (std::uint32_t d = 0; d <= max_degree; ++d)
        for (const auto& m : monomials_of_degree(ring.nvars(), d))
            if (rng.below(2) == 0) p.add_term(m, sample_scalar(ring.base(), rng));
    return p;
}

/// Number of elements of a finite base ring; empty when infinite.
inline std::optional<std::uint64_t> ring_size(const RationalField&) { return std::nullopt; }
inline std::optional<std::uint64_t> ring_size(const ModularRing& r) { return r.modulus(); }
template <CommutativeRing B>
std::optional<std::uint64_t> ring_size(const PolynomialRing<B>&) { return std::nullopt; }

inline ModInt scalar_at(const ModularRing& r, std::uint64_t k) { return ModInt(k, r.modulus()); }

// ---------------------------------------------------------------------------

/// Reproducible stream of random elements for fixed (seed, ring, algebra).
template <Algebra A>
class SampleStream {
public:
    SampleStream(const A& alg, std::uint64_t seed) : alg_(alg), rng_(seed) {}

    typename A::element_type next() {
        std::vector<typename A::scalar_type> c;
        c.reserve(alg_.rank());
        for (std::size_t i = 0; i < alg_.rank(); ++i) c.push_back(sample_scalar(alg_.ring(), rng_));
        return alg_.from_coords(c);
    }
    typename A::scalar_type scalar() { return sample_scalar(alg_.ring(), rng_); }

private:
    const A& alg_;
    SplitMix64 rng_;
};

/// Element count of the algebra for exhaustive mode; throws ExhaustiveTooLarge
/// for infinite rings or when the count exceeds the cap.
template <Algebra A>
std::size_t exhaustive_size(const A& alg, std::size_t cap) {
    auto n = ring_size(alg.ring());
    if (!n) throw Error(ErrorCode::ExhaustiveTooLarge, "exhaustive mode needs a finite base ring");
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < alg.rank(); ++i) {
        total *= *n;
        if (total > cap)
            throw Error(ErrorCode::ExhaustiveTooLarge,
                        "algebra has more than " + std::to_string(cap) + " elements (cap)");
    }
    return static_cast<std::size_t>(total);
}

/// Every element, coordinates enumerated as an odometer (first coordinate fastest).
template <Algebra A>
std::vector<typename A::element_type> exhaustive_elements(const A& alg, std::size_t cap) {
    std::size_t total = exhaustive_size(alg, cap);
    std::uint64_t n = *ring_size(alg.ring());
    std::vector<typename A::element_type> out;
    out.reserve(total);
    std::vector<std::uint64_t> digits(alg.rank(), 0);
    std::vector<typename A::scalar_type> c(alg.rank());
    for (std::size_t k = 0; k < total; ++k) {
        if constexpr (std::is_same_v<std::remove_cvref_t<decltype(alg.ring())>, ModularRing>)
            for (std::size_t i = 0; i < digits.size(); ++i) c[i] = scalar_at(alg.ring(), digits[i]);
        out.push_back(alg.from_coords(c));
        for (std::size_t i = 0; i < digits.size() && ++digits[i] == n; ++i) digits[i] = 0;
    }
    return out;
}

}  // namespace colalg
