#pragma once

// Integer coefficient tables a^(r)_{k,j} built by the closed-form recursion
// kernel, and the Schmidt coefficients c^(r)_k as their column sums.

#include "schmidt/sequences.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace schmidt {

// The integers a^(r)_{k,j} expressing C(n,k)^r C(n+k,k)^r in the basis
// C(n,j)C(n+j,j). Row k is supported exactly on k <= j <= r*k and stored
// densely over that window; entries outside it are zero. Immutable once
// built, safe to share.
class CoeffTable {
public:
    CoeffTable(PowerIndex r, long k_max, std::vector<std::vector<ExactInt>> rows)
        : r_(r), k_max_(k_max), rows_(std::move(rows)) {
        if (k_max_ < 0 || static_cast<long>(rows_.size()) != k_max_ + 1)
            throw std::invalid_argument("CoeffTable: row count mismatch");
        for (long k = 0; k <= k_max_; ++k)
            if (static_cast<long>(rows_[static_cast<size_t>(k)].size()) !=
                support_size(k))
                throw std::invalid_argument("CoeffTable: row " +
                                            std::to_string(k) +
                                            " width mismatch");
    }

    PowerIndex power() const { return r_; }
    long k_max() const { return k_max_; }

    long support_min(long k) const { return k; }
    long support_max(long k) const { return static_cast<long>(r_.value) * k; }
    long support_size(long k) const { return support_max(k) - k + 1; }

    // Zero outside the support window; rows beyond k_max are out of contract.
    const ExactInt& entry(long k, long j) const {
        if (k < 0 || k > k_max_)
            throw std::out_of_range("CoeffTable::entry: row " +
                                    std::to_string(k) + " not built");
        if (j < support_min(k) || j > support_max(k)) return zero();
        return rows_[static_cast<size_t>(k)][static_cast<size_t>(j - k)];
    }

    const std::vector<std::vector<ExactInt>>& rows() const { return rows_; }

private:
    static const ExactInt& zero() {
        static const ExactInt z(0);
        return z;
    }

    PowerIndex r_;
    long k_max_;
    std::vector<std::vector<ExactInt>> rows_;  // rows_[k][j - k]
};

// r = 1 base case: the identity table, a^(1)_{k,k} = 1.
inline CoeffTable table_base(long k_max) {
    if (k_max < 0) throw std::domain_error("table_base: negative k_max");
    std::vector<std::vector<ExactInt>> rows(static_cast<size_t>(k_max) + 1);
    for (auto& row : rows) row = {ExactInt(1)};
    return CoeffTable(PowerIndex(1), k_max, std::move(rows));
}

// One application of the recursion kernel: steps the table from r to r+1 via
// a^(r+1)_{k,j} = sum_i C(k+i,i) C(k,j-i) C(j,k) a^(r)_{k,i}.
inline CoeffTable table_step(const CoeffTable& t) {
    const long r = t.power().value;
    std::vector<std::vector<ExactInt>> rows(static_cast<size_t>(t.k_max()) + 1);
    for (long k = 0; k <= t.k_max(); ++k) {
        const long j_hi = (r + 1) * k;
        std::vector<ExactInt> row(static_cast<size_t>(j_hi - k) + 1);
        for (long j = k; j <= j_hi; ++j) {
            // i-window where both C(k,j-i) and the r-table support are live
            const long i_lo = std::max(k, j - k);
            const long i_hi = std::min(j, r * k);
            ExactInt acc(0);
            for (long i = i_lo; i <= i_hi; ++i)
                acc += binomial(k + i, i) * binomial(k, j - i) * t.entry(k, i);
            row[static_cast<size_t>(j - k)] = binomial(j, k) * acc;
        }
        rows[static_cast<size_t>(k)] = std::move(row);
    }
    return CoeffTable(PowerIndex(r + 1), t.k_max(), std::move(rows));
}

// The table for a given r, i.e. table_step applied r-1 times to the base.
inline CoeffTable table_for(PowerIndex r, long k_max) {
    CoeffTable t = table_base(k_max);
    for (int step = 1; step < r.value; ++step) t = table_step(t);
    return t;
}

// All tables r = 1..r_max sharing one build chain; index holds r = index+1.
inline std::vector<CoeffTable> tables_through(PowerIndex r_max, long k_max) {
    std::vector<CoeffTable> tables;
    tables.reserve(static_cast<size_t>(r_max.value));
    tables.push_back(table_base(k_max));
    for (int r = 1; r < r_max.value; ++r)
        tables.push_back(table_step(tables.back()));
    return tables;
}

enum class RowMethod { column_sum, implicit_solve };

// One row of Schmidt coefficients (c^(r)_0, ..., c^(r)_k_max) together with
// the method that produced it.
struct SchmidtRow {
    PowerIndex r;
    std::vector<ExactInt> values;  // index k
    RowMethod method;
};

// c^(r)_k = sum_i a^(r)_{i,k}; rows i < ceil(k/r) contribute zero.
inline SchmidtRow c_from_table(PowerIndex r, long k_max) {
    if (k_max < 0) throw std::domain_error("c_from_table: negative k_max");
    const CoeffTable t = table_for(r, k_max);
    std::vector<ExactInt> values(static_cast<size_t>(k_max) + 1);
    for (long k = 0; k <= k_max; ++k) {
        const long i_lo = (k + r.value - 1) / r.value;
        ExactInt acc(0);
        for (long i = i_lo; i <= k; ++i) acc += t.entry(i, k);
        values[static_cast<size_t>(k)] = std::move(acc);
    }
    return SchmidtRow{r, std::move(values), RowMethod::column_sum};
}

}  // namespace schmidt
