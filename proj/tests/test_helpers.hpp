#pragma once

#include <qident/intpoly.hpp>

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qident::testing {

// Deterministic across runs; tests that need isolation construct their own.
inline std::mt19937& rng() {
    static std::mt19937 generator(0x51d3);
    return generator;
}

inline IntPoly random_poly(std::mt19937& gen, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> degree_dist(-1, max_degree);
    int degree = degree_dist(gen);
    if (degree < 0) return IntPoly{};
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    std::vector<IntPoly::Int> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) c = coeff_dist(gen);
    while (coeffs.back() == 0) coeffs.back() = coeff_dist(gen);
    return IntPoly(std::move(coeffs));
}

// Exact long division; throws when a leading coefficient fails to divide.
inline std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
    std::vector<IntPoly::Int> rem = num.coeffs();
    const std::vector<IntPoly::Int>& div = den.coeffs();
    const long dd = static_cast<long>(div.size()) - 1;
    const IntPoly::Int& lead = div.back();
    long rd = static_cast<long>(rem.size()) - 1;
    std::vector<IntPoly::Int> quot;
    if (rd >= dd) quot.assign(static_cast<size_t>(rd - dd) + 1, 0);
    while (rd >= dd) {
        IntPoly::Int c = rem[static_cast<size_t>(rd)] / lead;
        if (c * lead != rem[static_cast<size_t>(rd)])
            throw std::domain_error("poly_divmod: inexact division");
        quot[static_cast<size_t>(rd - dd)] = c;
        for (long i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(rd - dd + i)] -= c * div[static_cast<size_t>(i)];
        --rd;
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

// Independent Gaussian-binomial oracle: expands
// prod_{i=1}^{k} (1 - q^{n-i+1}) / (1 - q^i) by exact division. A factor
// (1 - q^0) in the numerator makes the whole product zero, which covers
// k > n without forming negative exponents.
inline IntPoly qbinom_product_oracle(int n, int k) {
    if (k < 0) return IntPoly{};
    IntPoly num = IntPoly::constant(1);
    IntPoly den = IntPoly::constant(1);
    for (int i = 1; i <= k; ++i) {
        int e = n - i + 1;
        if (e == 0) return IntPoly{};
        num *= IntPoly::constant(1) - IntPoly::monomial(1, e);
        den *= IntPoly::constant(1) - IntPoly::monomial(1, i);
    }
    auto [quot, rem] = poly_divmod(num, den);
    if (!rem.is_zero()) throw std::domain_error("qbinom_product_oracle: nonzero remainder");
    return quot;
}

}  // namespace qident::testing
