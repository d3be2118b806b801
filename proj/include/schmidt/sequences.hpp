#pragma once

// Direct evaluation of the named binomial sums: Schmidt numbers and
// polynomials, the basis weights C(n,k)C(n+k,k), and the Franel/Strehl
// closed forms. All sums run over their exact support; the vanishing of
// out-of-range binomials supplies the cutoffs.

#include "schmidt/exact.hpp"

namespace schmidt {

// Exponent r of the power sums; always >= 1.
struct PowerIndex {
    int value;

    explicit PowerIndex(int v) : value(v) {
        if (v < 1)
            throw std::domain_error("PowerIndex: r must be >= 1, got " +
                                    std::to_string(v));
    }
};

// C(n,k)*C(n+k,k), the k-th weight of the binomial basis. Zero for k > n.
inline ExactInt basis_weight(long n, long k) {
    if (n < 0 || k < 0)
        throw std::domain_error("basis_weight: negative argument");
    if (k > n) return ExactInt(0);
    return binomial(n, k) * binomial(n + k, k);
}

// S^(r)_n = sum_k C(n,k)^r C(n+k,k)^r. For r = 2 these are the Apery numbers.
inline ExactInt schmidt_number(PowerIndex r, long n) {
    if (n < 0) throw std::domain_error("schmidt_number: negative n");
    const auto e = static_cast<unsigned long>(r.value);
    ExactInt acc(0);
    for (long k = 0; k <= n; ++k)
        acc += pow_ui(binomial(n, k), e) * pow_ui(binomial(n + k, k), e);
    return acc;
}

// S^(r)_n(x) = sum_k C(n,k)^r C(n+k,k)^r x^k, evaluated exactly at rational x.
inline ExactRat schmidt_poly(PowerIndex r, long n, const ExactRat& x) {
    if (n < 0) throw std::domain_error("schmidt_poly: negative n");
    const auto e = static_cast<unsigned long>(r.value);
    ExactRat acc(0);
    ExactRat xk(1);
    for (long k = 0; k <= n; ++k) {
        acc += ExactRat(pow_ui(binomial(n, k), e) *
                        pow_ui(binomial(n + k, k), e)) *
               xk;
        xk *= x;
    }
    return acc;
}

// Franel numbers sum_j C(n,j)^3; these equal c^(2)_n.
inline ExactInt franel(long n) {
    if (n < 0) throw std::domain_error("franel: negative n");
    ExactInt acc(0);
    for (long j = 0; j <= n; ++j) acc += pow_ui(binomial(n, j), 3);
    return acc;
}

// Second Franel form sum_j C(n,j)^2 C(2j,n).
inline ExactInt franel_alt(long n) {
    if (n < 0) throw std::domain_error("franel_alt: negative n");
    ExactInt acc(0);
    for (long j = 0; j <= n; ++j)
        acc += pow_ui(binomial(n, j), 2) * binomial(2 * j, n);
    return acc;
}

// Strehl's closed form sum_j C(n,j)^2 C(2j,j)^2 C(2j,n-j); equals c^(3)_n.
inline ExactInt strehl(long n) {
    if (n < 0) throw std::domain_error("strehl: negative n");
    ExactInt acc(0);
    for (long j = 0; j <= n; ++j)
        acc += pow_ui(binomial(n, j), 2) * pow_ui(binomial(2 * j, j), 2) *
               binomial(2 * j, n - j);
    return acc;
}

}  // namespace schmidt
