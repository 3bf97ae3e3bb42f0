#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "colalg/error.hpp"
#include "colalg/rings/concepts.hpp"
#include "colalg/rings/parse.hpp"

namespace colalg {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    std::string to_string() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

private:
    mpq_class q_;
};

class RationalField : public OperatorArithmetic<Rational> {
public:
    using element_type = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_integer(const mpz_class& z) const { return Rational(z, mpz_class(1)); }
    bool is_unit(const Rational& x) const { return !x.is_zero(); }
    Rational inverse(const Rational& x) const {
        if (x.is_zero()) throw Error(ErrorCode::NotAUnit, "0 is not invertible in Q");
        return Rational(x.denominator(), x.numerator());
    }
    bool is_field() const { return true; }
    bool is_finite() const { return false; }
    Rational parse(std::string_view text) const { return detail::parse_scalar(*this, text); }
    std::string format(const Rational& x) const { return x.to_string(); }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline bool is_negative(const Rational& x) { return x.sign() < 0; }

}  // namespace colalg
