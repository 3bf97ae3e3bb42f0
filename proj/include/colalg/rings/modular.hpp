#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "colalg/error.hpp"
#include "colalg/rings/concepts.hpp"
#include "colalg/rings/parse.hpp"

namespace colalg {

/// Residue class modulo n, normalized to [0, n).
///
/// The modulus travels with the value. A default-constructed ModInt is an
/// "unbound" zero (modulus 0) that adopts the modulus of whatever it is
/// combined with; this lets fixed-size containers of residues be
/// default-constructed before they are filled.
class ModInt {
public:
    ModInt() = default;
    ModInt(std::uint64_t value, std::uint64_t modulus)
        : v_(modulus == 0 ? 0 : value % modulus), n_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return n_; }
    bool is_zero() const { return v_ == 0; }

    friend ModInt operator+(const ModInt& a, const ModInt& b) {
        std::uint64_t n = bind(a, b);
        std::uint64_t s = a.v_ + b.v_;
        return raw(s >= n && n != 0 ? s - n : s, n);
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) {
        std::uint64_t n = bind(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + n - b.v_, n);
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) {
        std::uint64_t n = bind(a, b);
        if (n == 0) return ModInt();
        return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % n), n);
    }
    friend ModInt operator-(const ModInt& a) { return raw(a.v_ == 0 ? 0 : a.n_ - a.v_, a.n_); }
    friend bool operator==(const ModInt& a, const ModInt& b) { return a.v_ == b.v_; }

private:
    static ModInt raw(std::uint64_t v, std::uint64_t n) {
        ModInt r;
        r.v_ = v;
        r.n_ = n;
        return r;
    }
    static std::uint64_t bind(const ModInt& a, const ModInt& b) {
        assert(a.n_ == 0 || b.n_ == 0 || a.n_ == b.n_);
        return a.n_ != 0 ? a.n_ : b.n_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t n_ = 0;
};

inline bool is_negative(const ModInt&) { return false; }

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Z/nZ with n odd (so 2 is a unit). Prime fields are the same arithmetic
/// with the primality recorded, which only matters for `is_field`.
class ModularRing : public OperatorArithmetic<ModInt> {
public:
    using element_type = ModInt;

    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    static ModularRing modular(std::uint64_t n) {
        if (n % 2 == 0) throw Error(ErrorCode::EvenModulus, "modulus " + std::to_string(n) + " is even, 2 is not invertible");
        if (n < 3 || n >= max_modulus) throw Error(ErrorCode::BadModulus, "modulus " + std::to_string(n) + " out of range");
        return ModularRing(n, false);
    }
    static ModularRing prime_field(std::uint64_t p) {
        if (p == 2 || !is_prime(p) || p >= max_modulus)
            throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime");
        return ModularRing(p, true);
    }

    std::uint64_t modulus() const { return n_; }
    bool declared_prime() const { return prime_; }

    ModInt zero() const { return ModInt(0, n_); }
    ModInt one() const { return ModInt(1, n_); }
    ModInt element(std::int64_t v) const {
        std::int64_t n = static_cast<std::int64_t>(n_);
        std::int64_t r = v % n;
        return ModInt(static_cast<std::uint64_t>(r < 0 ? r + n : r), n_);
    }
    ModInt from_integer(const mpz_class& z) const {
        static_assert(sizeof(unsigned long) == 8);
        return ModInt(mpz_fdiv_ui(z.get_mpz_t(), n_), n_);
    }
    bool is_unit(const ModInt& x) const { return std::gcd(x.value(), n_) == 1; }
    ModInt inverse(const ModInt& x) const {
        // extended Euclid on (x, n)
        __int128 r0 = n_, r1 = x.value(), s0 = 0, s1 = 1;
        while (r1 != 0) {
            __int128 q = r0 / r1;
            __int128 t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        if (r0 != 1) throw Error(ErrorCode::NotAUnit, std::to_string(x.value()) + " is not invertible mod " + std::to_string(n_));
        __int128 n = n_;
        s0 %= n;
        if (s0 < 0) s0 += n;
        return ModInt(static_cast<std::uint64_t>(s0), n_);
    }
    bool is_field() const { return prime_ || is_prime(n_); }
    bool is_finite() const { return true; }
    ModInt parse(std::string_view text) const { return detail::parse_scalar(*this, text); }
    std::string format(const ModInt& x) const { return std::to_string(x.value()); }
    std::string name() const { return (prime_ ? "F" : "Z/") + std::to_string(n_); }

    friend bool operator==(const ModularRing& a, const ModularRing& b) { return a.n_ == b.n_; }

private:
    ModularRing(std::uint64_t n, bool prime) : n_(n), prime_(prime) {}

    std::uint64_t n_;
    bool prime_;
};

}  // namespace colalg
