#include "tabled/fisher.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace tabled {

namespace {

mpz_class binomial(int64_t n, int64_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace

Contingency tally(const std::vector<bool>& a, const std::vector<bool>& b) {
    Contingency t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i]) ++t.both;
        else if (a[i]) ++t.a_only;
        else if (b[i]) ++t.b_only;
        else ++t.neither;
    }
    return t;
}

double fisher_exact_p(const Contingency& table) {
    const int64_t row1 = table.both + table.a_only;
    const int64_t row2 = table.b_only + table.neither;
    const int64_t col1 = table.both + table.b_only;
    const int64_t col2 = table.a_only + table.neither;
    const int64_t total = row1 + row2;

    if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) return 1.0;

    // All P(k) share the denominator C(total, row1); comparing numerators
    // C(col1, k) * C(col2, row1-k) is exact.
    const int64_t lo = std::max<int64_t>(0, row1 - col2);
    const int64_t hi = std::min(row1, col1);
    const mpz_class observed = binomial(col1, table.both) * binomial(col2, table.a_only);

    mpz_class included = 0;
    for (int64_t k = lo; k <= hi; ++k) {
        mpz_class weight = binomial(col1, k) * binomial(col2, row1 - k);
        if (weight <= observed) included += weight;
    }

    mpq_class p(included, binomial(total, row1));
    p.canonicalize();
    return p.get_d();
}

Outcome<double> fisher_test(const std::vector<bool>& a, const std::vector<bool>& b) {
    if (a.size() != b.size()) {
        return BenchError::contract_violation(
            ErrCode::LengthMismatch, "fisherTest sequences have lengths " +
                                         std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()));
    }
    if (a.empty()) {
        return BenchError::contract_violation(ErrCode::EmptyInput,
                                              "fisherTest requires non-empty sequences");
    }
    return fisher_exact_p(tally(a, b));
}

} // namespace tabled
