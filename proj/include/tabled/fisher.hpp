#pragma once

#include "tabled/outcome.hpp"

#include <cstdint>
#include <vector>

namespace tabled {

/// 2x2 contingency counts of two aligned boolean sequences.
struct Contingency {
    int64_t both = 0;       // a true,  b true
    int64_t a_only = 0;     // a true,  b false
    int64_t b_only = 0;     // a false, b true
    int64_t neither = 0;    // a false, b false
};

Contingency tally(const std::vector<bool>& a, const std::vector<bool>& b);

/// Two-sided Fisher exact p-value of the contingency table, with both margins
/// fixed: the sum of hypergeometric probabilities P(k) with P(k) <= P(observed).
/// Probabilities are exact big-integer rationals and the inclusion comparison
/// is exact; only the final result is converted to a double. A degenerate
/// margin (either variable constant) gives p = 1.
double fisher_exact_p(const Contingency& table);

/// As above, from the raw sequences. Errors: LengthMismatch, EmptyInput.
Outcome<double> fisher_test(const std::vector<bool>& a, const std::vector<bool>& b);

} // namespace tabled
