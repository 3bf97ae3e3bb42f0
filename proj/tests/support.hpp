#pragma once

// Test-side randomness, deliberately separate from the library sampler so the
// property tests do not share code with the harness they cross-check.

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "colalg/rings.hpp"

namespace testing_support {

using namespace colalg;

inline Rational random_scalar(const RationalField&, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline ModInt random_scalar(const ModularRing& r, std::mt19937_64& rng) {
    return ModInt(rng() % r.modulus(), r.modulus());
}

template <class A>
typename A::element_type random_element(const A& alg, std::mt19937_64& rng) {
    std::vector<typename A::scalar_type> c;
    for (std::size_t i = 0; i < alg.rank(); ++i) c.push_back(random_scalar(alg.ring(), rng));
    return alg.from_coords(c);
}

template <class F>
ErrorCode error_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::InvalidConfig;
}

}  // namespace testing_support
