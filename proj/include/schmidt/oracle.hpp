#pragma once

// Ground-truth route to c^(r)_k: forward substitution on the defining
// triangular system over exact rationals. Integrality of the solution is
// the statement under test, so the solver deliberately works in rationals
// and records exactly where integrality would fail.

#include "schmidt/coeffs.hpp"

#include <optional>

namespace schmidt {

struct ImplicitSolveReport {
    PowerIndex r;
    long n_max;
    std::vector<ExactRat> values;  // index n
    bool all_integral;
    std::optional<long> first_nonintegral_index;
};

// Solves sum_{k<=n} C(n,k)C(n+k,k) c_k = S^(r)_n for n = 0..n_max.
// The pivot C(2n,n) is never zero, so the system is uniquely solvable.
inline ImplicitSolveReport solve_implicit(PowerIndex r, long n_max) {
    if (n_max < 0) throw std::domain_error("solve_implicit: negative n_max");
    std::vector<ExactRat> values;
    values.reserve(static_cast<size_t>(n_max) + 1);
    bool all_integral = true;
    std::optional<long> first_bad;
    for (long n = 0; n <= n_max; ++n) {
        ExactRat acc(schmidt_number(r, n));
        for (long k = 0; k < n; ++k)
            acc -= ExactRat(basis_weight(n, k)) * values[static_cast<size_t>(k)];
        acc /= ExactRat(binomial(2 * n, n));
        if (all_integral && !is_integer(acc)) {
            all_integral = false;
            first_bad = n;
        }
        values.push_back(std::move(acc));
    }
    return ImplicitSolveReport{r, n_max, std::move(values), all_integral,
                               first_bad};
}

// Re-checks the defining identity for a row produced by any method.
inline bool check_defining_identity(PowerIndex r, const SchmidtRow& row,
                                    long n_max) {
    if (n_max < 0)
        throw std::domain_error("check_defining_identity: negative n_max");
    if (static_cast<long>(row.values.size()) < n_max + 1)
        throw std::invalid_argument(
            "check_defining_identity: row covers k <= " +
            std::to_string(static_cast<long>(row.values.size()) - 1) +
            ", need k <= " + std::to_string(n_max));
    for (long n = 0; n <= n_max; ++n) {
        ExactInt rhs(0);
        for (long k = 0; k <= n; ++k)
            rhs += basis_weight(n, k) * row.values[static_cast<size_t>(k)];
        if (rhs != schmidt_number(r, n)) return false;
    }
    return true;
}

// Integral reports convert to integer rows for cross-route comparison.
inline SchmidtRow to_row(const ImplicitSolveReport& rep) {
    if (!rep.all_integral)
        throw std::domain_error(
            "to_row: report has non-integral values (first at n = " +
            std::to_string(*rep.first_nonintegral_index) + ")");
    std::vector<ExactInt> values;
    values.reserve(rep.values.size());
    for (const auto& v : rep.values) values.push_back(to_integer(v));
    return SchmidtRow{rep.r, std::move(values), RowMethod::implicit_solve};
}

}  // namespace schmidt
