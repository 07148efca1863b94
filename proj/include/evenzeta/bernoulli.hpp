#pragma once

#include "evenzeta/rational.hpp"

#include <mutex>
#include <vector>

namespace evenzeta {

/// Bernoulli numbers under the B_1 = -1/2 convention, from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Growth is append-only.
class BernoulliTable {
public:
    explicit BernoulliTable(unsigned max_index = 0) { extend(max_index); }

    unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

    /// B_m; extends the table as needed.
    const Rational& value(unsigned m) {
        extend(m);
        return values_[m];
    }

    void extend(unsigned m) {
        if (values_.empty()) values_.push_back(Rational(1));
        for (unsigned i = static_cast<unsigned>(values_.size()); i <= m; ++i) {
            // B_i = -1/(i+1) * sum_{j=0}^{i-1} C(i+1, j) B_j
            Rational s;
            for (unsigned j = 0; j < i; ++j) {
                if (values_[j].is_zero()) continue;
                s += Rational(binomial(i + 1, j)) * values_[j];
            }
            values_.push_back(-s / Rational(static_cast<long>(i) + 1));
        }
    }

private:
    std::vector<Rational> values_;
};

/// B_m from a process-wide memo table. Fills are serialized by a mutex,
/// so concurrent callers see a consistent, idempotently grown table.
inline Rational bernoulli(unsigned m) {
    static BernoulliTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return table.value(m);
}

}  // namespace evenzeta
