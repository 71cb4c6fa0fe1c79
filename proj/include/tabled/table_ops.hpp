#pragma once

#include "tabled/table.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tabled::ops {

/// Per-row closure for buildColumn. The result sort is carried explicitly so
/// zero-row tables still get a typed column.
struct RowFn {
    Sort result_sort;
    std::function<Outcome<Value>(const Row& row, std::size_t index)> fn;
};

/// One lexicographic key for orderBy: getKey projects a row to a key value,
/// compare is a strict less-than on key values.
struct OrderKey {
    std::function<Outcome<Value>(const Row& row)> get_key;
    std::function<Outcome<bool>(const Value& a, const Value& b)> compare;
};

/// Column read as a sequence of values. Strict: a missing cell is an error.
Outcome<SeqValue> get_column(const Table& t, const ColName& c);

Outcome<Table> add_column(const Table& t, const ColName& c, const SeqValue& vs);
Outcome<Table> build_column(const Table& t, const ColName& c, const RowFn& f);

Outcome<Table> select_rows(const Table& t, const std::vector<double>& indices);
Outcome<Table> select_rows(const Table& t, const std::vector<bool>& mask);
Outcome<Table> select_columns(const Table& t, const std::vector<ColName>& cs);
Outcome<Table> drop_columns(const Table& t, const std::vector<ColName>& cs);

Outcome<Table> head(const Table& t, double n);
Outcome<Table> tsort(const Table& t, const ColName& c, bool ascending);
Outcome<Table> order_by(const Table& t, const std::vector<OrderKey>& spec);

Outcome<Table> vcat(const Table& a, const Table& b);
Outcome<Table> hcat(const Table& a, const Table& b);
Outcome<Table> left_join(const Table& left, const Table& right, const ColName& key);

Outcome<Table> pivot_longer(const Table& t, const std::vector<ColName>& cs,
                            const ColName& names_to, const ColName& values_to);
Outcome<Table> pivot_wider(const Table& t, const ColName& names_from, const ColName& values_from);

Outcome<Table> group_by_retentive(const Table& t, const ColName& c);
Outcome<Table> group_by_subtractive(const Table& t, const ColName& c);

/// Deterministic sample of n distinct rows, emitted in original table order.
/// Selection is a partial Fisher-Yates walk over row indices driven by the
/// pinned generator: state <- prngNext(state), j = i + floor(state*(R-i)/(2^31-1)).
Outcome<Table> sample_rows(const Table& t, double n, int64_t seed);

Outcome<double> dot_product(const Table& t, const ColName& c1, const ColName& c2);

} // namespace tabled::ops
