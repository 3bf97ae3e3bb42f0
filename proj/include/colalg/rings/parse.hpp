#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "colalg/error.hpp"

namespace colalg::detail {

struct ParsedVariable {
    std::string name;
    std::uint32_t exponent = 1;
    std::size_t position = 0;
};

/// One summand `c * v1^e1 * ... * vk^ek`; numeric factors are folded into
/// an exact rational coefficient that each ring then maps into itself.
struct ParsedTerm {
    mpq_class coefficient{1};
    std::vector<ParsedVariable> variables;
    std::size_t position = 0;
};

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty expression");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        terms.push_back(term(negative));
        skip_space();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
            ++pos_;
            terms.push_back(term(c == '-'));
            skip_space();
        }
        return terms;
    }

private:
    ParsedTerm term(bool negative) {
        skip_space();
        ParsedTerm t;
        t.position = pos_;
        factor(t);
        skip_space();
        while (!at_end() && peek() == '*') {
            ++pos_;
            factor(t);
            skip_space();
        }
        if (negative) t.coefficient = -t.coefficient;
        return t;
    }

    void factor(ParsedTerm& t) {
        skip_space();
        if (at_end()) throw ParseError(pos_, "expected a number or variable");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            mpz_class den = 1;
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                std::size_t den_pos = pos_;
                den = integer();
                if (den == 0) throw ParseError(den_pos, "zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            t.coefficient *= q;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            ParsedVariable v;
            v.position = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                v.name.push_back(peek());
                ++pos_;
            }
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                std::size_t exp_pos = pos_;
                mpz_class e = integer();
                if (!e.fits_uint_p()) throw ParseError(exp_pos, "exponent too large");
                v.exponent = static_cast<std::uint32_t>(e.get_ui());
            }
            t.variables.push_back(std::move(v));
        } else {
            throw ParseError(pos_, std::string("unexpected '") + c + "'");
        }
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::vector<ParsedTerm> parse_expression(std::string_view text) {
    return ExpressionParser(text).parse();
}

/// Maps an exact rational into `ring`; the denominator must be a unit there.
template <class K>
typename K::element_type coefficient_in(const K& ring, const mpq_class& q, std::size_t position) {
    auto num = ring.from_integer(q.get_num());
    if (q.get_den() == 1) return num;
    auto den = ring.from_integer(q.get_den());
    if (!ring.is_unit(den))
        throw Error(ErrorCode::WrongRing, "denominator " + q.get_den().get_str() +
                                              " is not invertible (term at position " +
                                              std::to_string(position) + ")");
    return num * ring.inverse(den);
}

/// Shared by the scalar rings, which have no variables.
template <class K>
typename K::element_type parse_scalar(const K& ring, std::string_view text) {
    auto result = ring.zero();
    for (const auto& t : parse_expression(text)) {
        if (!t.variables.empty())
            throw ParseError(t.variables.front().position,
                             "unknown variable '" + t.variables.front().name + "'");
        result = result + coefficient_in(ring, t.coefficient, t.position);
    }
    return result;
}

}  // namespace colalg::detail
