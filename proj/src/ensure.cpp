#include "tabled/ensure.hpp"

#include <algorithm>

namespace tabled::ensure {

namespace {

BenchError violation(std::string message) {
    return BenchError::make(ErrCode::EnsureViolation, std::move(message));
}

} // namespace

Outcome<void> well_formed(const Table& t) {
    auto check = validate_table(t.schema(), t.rows());
    if (!check.ok())
        return violation("operation produced an invalid table: " + check.error().message);
    return {};
}

Outcome<void> add_column(const Table& t1, const ColName& c, const SeqValue& vs, const Table& t2) {
    auto expected_header = t1.header();
    expected_header.push_back(c);
    if (t2.header() != expected_header)
        return violation("addColumn header is not header(t1) ++ [c]");
    for (std::size_t i = 0; i < t1.ncols(); ++i) {
        if (t2.schema().at(i).sort != t1.schema().at(i).sort ||
            t2.schema().at(i).optional != t1.schema().at(i).optional)
            return violation("addColumn changed the schema of column \"" +
                             t1.schema().at(i).name + "\"");
    }
    if (t2.schema().at(t1.ncols()).sort != vs.elem)
        return violation("addColumn gave the new column sort " +
                         to_string(t2.schema().at(t1.ncols()).sort) + ", expected " +
                         to_string(vs.elem));
    if (t2.nrows() != t1.nrows())
        return violation("addColumn changed the row count");
    return {};
}

Outcome<void> rows_subset(const Table& input, const Table& output) {
    for (std::size_t r = 0; r < output.nrows(); ++r) {
        const auto& row = output.row_cells(r);
        bool found = false;
        for (std::size_t i = 0; i < input.nrows() && !found; ++i)
            found = input.row_cells(i) == row;
        if (!found)
            return violation("output row " + std::to_string(r) + " does not occur in the input");
    }
    return {};
}

Outcome<void> rows_permutation(const Table& input, const Table& output) {
    if (input.nrows() != output.nrows())
        return violation("row count changed in a permuting operation");
    // Multiset equality by matching each input row to a distinct output row.
    std::vector<bool> used(output.nrows(), false);
    for (std::size_t i = 0; i < input.nrows(); ++i) {
        bool matched = false;
        for (std::size_t o = 0; o < output.nrows(); ++o) {
            if (!used[o] && output.row_cells(o) == input.row_cells(i)) {
                used[o] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            return violation("input row " + std::to_string(i) + " is not present in the output");
    }
    return {};
}

} // namespace tabled::ensure
