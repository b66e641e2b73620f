#ifndef KEMAE_TESTS_RANDOM_POLY_HPP
#define KEMAE_TESTS_RANDOM_POLY_HPP

#include <random>

#include "kemae/polynomial.hpp"

namespace kemae::testutil {

/// Random sparse polynomial: up to max_terms monomials of total degree
/// <= max_degree, rational coefficients with parts up to 10^6.
inline Polynomial random_poly(std::mt19937_64& rng, int var_count, int max_degree,
                              int max_terms) {
    std::uniform_int_distribution<int> n_terms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_degree);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    Polynomial p(var_count);
    int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<size_t>(var_count));
        int budget = max_degree;
        for (int i = 0; i < var_count; ++i) {
            int ei = exp(rng) % (budget + 1);
            e[static_cast<size_t>(i)] = ei;
            budget -= ei;
        }
        p.add_term(ExponentVector(std::move(e)), Rational(num(rng), den(rng)));
    }
    return p;
}

/// Same but with constant term forced to 1 (candidate-shaped input).
inline Polynomial random_candidate(std::mt19937_64& rng, int var_count, int max_degree,
                                   int max_terms) {
    Polynomial p = random_poly(rng, var_count, max_degree, max_terms);
    ExponentVector zero = ExponentVector::zeros(var_count);
    p.add_term(zero, Rational(1) - p.coefficient(zero));
    return p;
}

}  // namespace kemae::testutil

#endif
