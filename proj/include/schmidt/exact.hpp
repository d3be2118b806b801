#pragma once

// Exact integer and rational arithmetic on top of GMP, plus a memoized
// binomial-coefficient engine. Foundation for everything else here.

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schmidt {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

namespace detail {

// Pascal-row cache. Rows are append-only and built under a mutex; readers
// copy entries out while holding the lock, so results are deterministic
// regardless of thread interleaving.
class BinomialRows {
public:
    // Largest row index kept resident. The deepest desk-scale sweep touches
    // row 4 * r_max * k_max = 600; rows above the cap are computed without
    // caching.
    static constexpr long default_cache_cap = 600;

    static BinomialRows& instance() {
        static BinomialRows rows;
        return rows;
    }

    void set_cache_cap(long cap) {
        std::lock_guard<std::mutex> lock(mu_);
        cap_ = cap < 0 ? 0 : cap;
    }

    long cache_cap() const {
        std::lock_guard<std::mutex> lock(mu_);
        return cap_;
    }

    ExactInt at(long n, long k) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_rows(n);
        return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

    std::vector<ExactInt> row(long n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure_rows(n);
        return rows_[static_cast<size_t>(n)];
    }

    bool cached(long n) const {
        std::lock_guard<std::mutex> lock(mu_);
        return n <= cap_;
    }

private:
    BinomialRows() = default;

    void ensure_rows(long n) {
        while (static_cast<long>(rows_.size()) <= n) {
            const size_t m = rows_.size();
            std::vector<ExactInt> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (size_t k = 1; k < m; ++k)
                row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
            rows_.push_back(std::move(row));
        }
    }

    mutable std::mutex mu_;
    long cap_ = default_cache_cap;
    std::vector<std::vector<ExactInt>> rows_;
};

inline ExactInt binomial_uncached(long n, long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline std::vector<ExactInt> row_uncached(long n) {
    std::vector<ExactInt> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    // C(n,k+1) = C(n,k)*(n-k)/(k+1), division exact
    for (long k = 0; k < n; ++k)
        row[static_cast<size_t>(k) + 1] =
            row[static_cast<size_t>(k)] * (n - k) / (k + 1);
    return row;
}

}  // namespace detail

// C(n,k). Vanishes for k < 0 or k > n so that sums over shifted indices
// truncate on their own; n < 0 is out of contract.
inline ExactInt binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative upper index " +
                                std::to_string(n));
    if (k < 0 || k > n) return ExactInt(0);
    auto& rows = detail::BinomialRows::instance();
    if (!rows.cached(n)) return detail::binomial_uncached(n, k);
    return rows.at(n, k);
}

// Full Pascal row (C(n,0), ..., C(n,n)).
inline std::vector<ExactInt> binomial_row(long n) {
    if (n < 0)
        throw std::domain_error("binomial_row: negative row index " +
                                std::to_string(n));
    auto& rows = detail::BinomialRows::instance();
    if (!rows.cached(n)) return detail::row_uncached(n);
    return rows.row(n);
}

inline void set_binomial_cache_cap(long cap) {
    detail::BinomialRows::instance().set_cache_cap(cap);
}

inline ExactInt pow_ui(const ExactInt& base, unsigned long exp) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Canonical rational: gcd(|num|, den) = 1, den >= 1, sign on the numerator.
inline ExactRat rat_reduce(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("rat_reduce: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const ExactRat& q) { return q.get_den() == 1; }

inline ExactInt to_integer(const ExactRat& q) {
    if (!is_integer(q))
        throw std::domain_error("to_integer: " + q.get_str() +
                                " is not an integer");
    return q.get_num();
}

// Parses "p" or "p/q" with arbitrary-precision parts.
inline ExactRat parse_rational(const std::string& s) {
    ExactRat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" +
                                    s + "'");
    q.canonicalize();
    return q;
}

}  // namespace schmidt
