#include "tabled/table_ops.hpp"

#include "tabled/prng.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <numeric>
#include <optional>
#include <set>

namespace tabled::ops {

namespace {

BenchError contract(ErrCode sub, std::string message) {
    return BenchError::contract_violation(sub, std::move(message));
}

BenchError unknown_column(const ColName& c, const Schema& schema) {
    return contract(ErrCode::UnknownColumn,
                    "no column named \"" + c + "\" (header: " + to_string(schema) + ")");
}

Outcome<std::size_t> resolve(const Table& t, const ColName& c) {
    auto idx = t.schema().index_of(c);
    if (!idx) return unknown_column(c, t.schema());
    return *idx;
}

Outcome<std::vector<std::size_t>> resolve_all(const Table& t, const std::vector<ColName>& cs) {
    std::vector<std::size_t> indices;
    indices.reserve(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (cs[j] == cs[i])
                return contract(ErrCode::DuplicateColumn,
                                "column \"" + cs[i] + "\" listed more than once");
        }
        TABLED_TRY(idx, resolve(t, cs[i]));
        indices.push_back(idx);
    }
    return indices;
}

Outcome<double> integral(double v, ErrCode code, const std::string& what) {
    double floor_v = 0.0;
    if (std::isnan(v) || std::isinf(v) || std::modf(v, &floor_v) != 0.0)
        return contract(code, what + " must be an integer, got " + number_to_string(v));
    return v;
}

/// Total numeric order (NaN sorts above +inf) so sorting stays a strict weak order.
bool number_less(double a, double b) {
    return std::strong_order(a, b) < 0;
}

Outcome<bool> scalar_less(const Cell& cell_a, const Cell& cell_b, const Sort& sort,
                          const ColName& column) {
    if (cell_a.is_missing() || cell_b.is_missing())
        return contract(ErrCode::MissingCell, "cannot sort column \"" + column +
                                                  "\": it contains missing values");
    const Value& a = cell_a.value();
    const Value& b = cell_b.value();
    switch (sort.tag()) {
        case Sort::Tag::Number: return number_less(a.as_number(), b.as_number());
        case Sort::Tag::Boolean: return !a.as_boolean() && b.as_boolean();
        case Sort::Tag::String: return a.as_string() < b.as_string();
        default:
            return contract(ErrCode::UnsortableSort, "column \"" + column + "\" has sort " +
                                                         to_string(sort) +
                                                         ", which has no ordering");
    }
}

/// Used by sort-like ops: errors discovered inside a std::stable_sort comparator
/// are carried out by exception, then rewrapped.
struct ComparatorError {
    BenchError error;
};

} // namespace

Outcome<SeqValue> get_column(const Table& t, const ColName& c) {
    TABLED_TRY(idx, resolve(t, c));
    const Column& column = t.schema().at(idx);
    std::vector<Value> values;
    values.reserve(t.nrows());
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        const Cell& cell = t.at(idx, r);
        if (cell.is_missing())
            return contract(ErrCode::MissingCell, "column \"" + c + "\" has a missing value at row " +
                                                      std::to_string(r));
        values.push_back(cell.value());
    }
    return SeqValue(column.sort, std::move(values));
}

Outcome<Table> add_column(const Table& t, const ColName& c, const SeqValue& vs) {
    if (t.schema().has(c))
        return contract(ErrCode::DuplicateColumn, "column \"" + c + "\" is already in the header");
    if (vs.size() != t.nrows())
        return contract(ErrCode::LengthMismatch, "addColumn expects one value per row: got " +
                                                     std::to_string(vs.size()) + ", table has " +
                                                     std::to_string(t.nrows()) + " rows");
    for (std::size_t r = 0; r < vs.items.size(); ++r) {
        if (!vs.items[r].matches(vs.elem))
            return contract(ErrCode::SortMismatch,
                            "value " + std::to_string(r) + " has sort " +
                                to_string(vs.items[r].sort()) + ", expected " + to_string(vs.elem));
    }

    auto columns = t.schema().columns();
    columns.push_back(Column{c, vs.elem, false});
    auto rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(Cell(vs.items[r]));
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

Outcome<Table> build_column(const Table& t, const ColName& c, const RowFn& f) {
    if (t.schema().has(c))
        return contract(ErrCode::DuplicateColumn, "column \"" + c + "\" is already in the header");
    std::vector<Value> values;
    values.reserve(t.nrows());
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        Row row(t.schema_ptr(), t.row_cells(r));
        auto v = f.fn(row, r);
        if (!v.ok()) {
            BenchError e = v.error();
            e.trace.push_back("while building column \"" + c + "\" at row " + std::to_string(r));
            return e;
        }
        if (!v.value().matches(f.result_sort))
            return contract(ErrCode::SortMismatch,
                            "buildColumn closure returned " + to_string(v.value().sort()) +
                                " at row " + std::to_string(r) + ", expected " +
                                to_string(f.result_sort));
        values.push_back(std::move(v).value());
    }
    return add_column(t, c, SeqValue(f.result_sort, std::move(values)));
}

Outcome<Table> select_rows(const Table& t, const std::vector<double>& indices) {
    std::vector<std::vector<Cell>> rows;
    rows.reserve(indices.size());
    for (double n : indices) {
        TABLED_TRY(v, integral(n, ErrCode::NonIntegralIndex, "row index"));
        if (v < 0 || v >= static_cast<double>(t.nrows()))
            return contract(ErrCode::RowIndexOutOfBounds,
                            "row index " + number_to_string(v) + " out of bounds (nrows = " +
                                std::to_string(t.nrows()) + ")");
        rows.push_back(t.row_cells(static_cast<std::size_t>(v)));
    }
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<Table> select_rows(const Table& t, const std::vector<bool>& mask) {
    if (mask.size() != t.nrows())
        return contract(ErrCode::LengthMismatch, "selectRows mask has length " +
                                                     std::to_string(mask.size()) +
                                                     ", table has " + std::to_string(t.nrows()) +
                                                     " rows");
    std::vector<std::vector<Cell>> rows;
    for (std::size_t r = 0; r < mask.size(); ++r)
        if (mask[r]) rows.push_back(t.row_cells(r));
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<Table> select_columns(const Table& t, const std::vector<ColName>& cs) {
    TABLED_TRY(indices, resolve_all(t, cs));
    std::vector<Column> columns;
    columns.reserve(indices.size());
    for (std::size_t idx : indices) columns.push_back(t.schema().at(idx));
    std::vector<std::vector<Cell>> rows(t.nrows());
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        rows[r].reserve(indices.size());
        for (std::size_t idx : indices) rows[r].push_back(t.at(idx, r));
    }
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

Outcome<Table> drop_columns(const Table& t, const std::vector<ColName>& cs) {
    TABLED_TRY(dropped, resolve_all(t, cs));
    std::vector<ColName> keep;
    for (std::size_t c = 0; c < t.ncols(); ++c) {
        if (std::find(dropped.begin(), dropped.end(), c) == dropped.end())
            keep.push_back(t.schema().at(c).name);
    }
    return select_columns(t, keep);
}

Outcome<Table> head(const Table& t, double n) {
    TABLED_TRY(v, integral(n, ErrCode::HeadOutOfRange, "head count"));
    if (v < 0 || v > static_cast<double>(t.nrows()))
        return contract(ErrCode::HeadOutOfRange, "head count " + number_to_string(v) +
                                                     " out of range [0, " +
                                                     std::to_string(t.nrows()) + "]");
    auto rows = t.rows();
    rows.resize(static_cast<std::size_t>(v));
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<Table> tsort(const Table& t, const ColName& c, bool ascending) {
    TABLED_TRY(idx, resolve(t, c));
    const Column& column = t.schema().at(idx);
    if (!column.sort.is_scalar())
        return contract(ErrCode::UnsortableSort, "column \"" + c + "\" has sort " +
                                                     to_string(column.sort) +
                                                     ", which has no ordering");
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        if (t.at(idx, r).is_missing())
            return contract(ErrCode::MissingCell,
                            "cannot sort column \"" + c + "\": missing value at row " +
                                std::to_string(r));
    }

    std::vector<std::size_t> order(t.nrows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto less = scalar_less(t.at(idx, a), t.at(idx, b), column.sort, c);
        bool lt = less.value(); // missing/unsortable ruled out above
        return ascending ? lt : scalar_less(t.at(idx, b), t.at(idx, a), column.sort, c).value();
    });

    std::vector<std::vector<Cell>> rows;
    rows.reserve(order.size());
    for (std::size_t r : order) rows.push_back(t.row_cells(r));
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<Table> order_by(const Table& t, const std::vector<OrderKey>& spec) {
    if (spec.empty())
        return contract(ErrCode::EmptyInput, "orderBy requires at least one (getKey, compare) pair");

    // Keys are computed once per row per pair, before sorting, so closure
    // errors surface with a row index instead of mid-sort.
    std::vector<std::vector<Value>> keys(t.nrows());
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        Row row(t.schema_ptr(), t.row_cells(r));
        keys[r].reserve(spec.size());
        for (std::size_t k = 0; k < spec.size(); ++k) {
            auto key = spec[k].get_key(row);
            if (!key.ok()) {
                BenchError e = key.error();
                e.trace.push_back("in orderBy getKey " + std::to_string(k) + " at row " +
                                  std::to_string(r));
                return e;
            }
            keys[r].push_back(std::move(key).value());
        }
    }

    auto pair_less = [&](std::size_t k, const Value& a, const Value& b) -> bool {
        auto lt = spec[k].compare(a, b);
        if (!lt.ok()) throw ComparatorError{lt.error()};
        if (!lt.value()) return false;
        auto gt = spec[k].compare(b, a);
        if (!gt.ok()) throw ComparatorError{gt.error()};
        if (gt.value())
            throw ComparatorError{contract(ErrCode::InvalidComparator,
                                           "compare " + std::to_string(k) +
                                               " claims both orders: it is not a strict less-than")};
        return true;
    };

    std::vector<std::size_t> order(t.nrows());
    std::iota(order.begin(), order.end(), 0);
    try {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            for (std::size_t k = 0; k < spec.size(); ++k) {
                if (pair_less(k, keys[a][k], keys[b][k])) return true;
                if (pair_less(k, keys[b][k], keys[a][k])) return false;
            }
            return false;
        });
    } catch (const ComparatorError& err) {
        return err.error;
    }

    std::vector<std::vector<Cell>> rows;
    rows.reserve(order.size());
    for (std::size_t r : order) rows.push_back(t.row_cells(r));
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<Table> vcat(const Table& a, const Table& b) {
    if (a.schema() != b.schema())
        return contract(ErrCode::SchemaMismatch, "vcat schemas differ: [" + to_string(a.schema()) +
                                                     "] vs [" + to_string(b.schema()) + "]");
    auto rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Table::unchecked(a.schema_ptr(), std::move(rows));
}

Outcome<Table> hcat(const Table& a, const Table& b) {
    if (a.nrows() != b.nrows())
        return contract(ErrCode::LengthMismatch, "hcat row counts differ: " +
                                                     std::to_string(a.nrows()) + " vs " +
                                                     std::to_string(b.nrows()));
    auto columns = a.schema().columns();
    for (const Column& col : b.schema().columns()) {
        if (a.schema().has(col.name))
            return contract(ErrCode::DuplicateColumn,
                            "column \"" + col.name + "\" appears in both tables");
        columns.push_back(col);
    }
    auto rows = a.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& extra = b.row_cells(r);
        rows[r].insert(rows[r].end(), extra.begin(), extra.end());
    }
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

Outcome<Table> left_join(const Table& left, const Table& right, const ColName& key) {
    TABLED_TRY(left_key, resolve(left, key));
    TABLED_TRY(right_key, resolve(right, key));
    const Column& lcol = left.schema().at(left_key);
    const Column& rcol = right.schema().at(right_key);
    if (lcol.sort != rcol.sort)
        return contract(ErrCode::SortMismatch, "join key \"" + key + "\" has sort " +
                                                   to_string(lcol.sort) + " on the left and " +
                                                   to_string(rcol.sort) + " on the right");
    if (lcol.optional || rcol.optional)
        return contract(ErrCode::MissingCell,
                        "join key \"" + key + "\" must be non-optional on both sides");
    for (std::size_t r = 0; r < right.nrows(); ++r) {
        for (std::size_t prev = 0; prev < r; ++prev) {
            if (right.at(right_key, prev) == right.at(right_key, r))
                return contract(ErrCode::DuplicateRightKey,
                                "right table repeats key " + to_string(right.at(right_key, r)) +
                                    " at rows " + std::to_string(prev) + " and " +
                                    std::to_string(r));
        }
    }

    // Output header: all left columns, then right columns minus the key.
    // Right-derived columns become optional; a name collision gets "_2" once.
    auto columns = left.schema().columns();
    std::vector<std::size_t> right_cols;
    for (std::size_t c = 0; c < right.ncols(); ++c) {
        if (c == right_key) continue;
        Column col = right.schema().at(c);
        if (left.schema().has(col.name)) col.name += "_2";
        for (const Column& existing : columns) {
            if (existing.name == col.name)
                return contract(ErrCode::DuplicateColumn,
                                "joined column name \"" + col.name + "\" collides");
        }
        col.optional = true;
        columns.push_back(col);
        right_cols.push_back(c);
    }

    auto rows = left.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::optional<std::size_t> match;
        for (std::size_t rr = 0; rr < right.nrows(); ++rr) {
            if (right.at(right_key, rr) == left.at(left_key, r)) {
                match = rr;
                break;
            }
        }
        for (std::size_t c : right_cols)
            rows[r].push_back(match ? right.at(c, *match) : Cell::missing());
    }
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

Outcome<Table> pivot_longer(const Table& t, const std::vector<ColName>& cs,
                            const ColName& names_to, const ColName& values_to) {
    if (cs.empty())
        return contract(ErrCode::EmptyInput, "pivotLonger requires at least one column to fold");
    TABLED_TRY(folded, resolve_all(t, cs));
    const Sort value_sort = t.schema().at(folded[0]).sort;
    bool any_optional = false;
    for (std::size_t idx : folded) {
        const Column& col = t.schema().at(idx);
        if (col.sort != value_sort)
            return contract(ErrCode::SortMismatch,
                            "folded columns disagree: \"" + cs[0] + "\" is " +
                                to_string(value_sort) + " but \"" + col.name + "\" is " +
                                to_string(col.sort));
        any_optional = any_optional || col.optional;
    }
    if (names_to == values_to)
        return contract(ErrCode::NameClash, "namesTo and valuesTo are both \"" + names_to + "\"");

    std::vector<Column> columns;
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < t.ncols(); ++c) {
        if (std::find(folded.begin(), folded.end(), c) != folded.end()) continue;
        const Column& col = t.schema().at(c);
        if (col.name == names_to || col.name == values_to)
            return contract(ErrCode::NameClash,
                            "output column \"" + col.name + "\" clashes with a kept column");
        columns.push_back(col);
        kept.push_back(c);
    }
    columns.push_back(Column{names_to, Sort::string(), false});
    columns.push_back(Column{values_to, value_sort, any_optional});

    std::vector<std::vector<Cell>> rows;
    rows.reserve(t.nrows() * folded.size());
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        for (std::size_t idx : folded) {
            std::vector<Cell> row;
            row.reserve(columns.size());
            for (std::size_t c : kept) row.push_back(t.at(c, r));
            row.push_back(Cell(Value(t.schema().at(idx).name)));
            row.push_back(t.at(idx, r));
            rows.push_back(std::move(row));
        }
    }
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

Outcome<Table> pivot_wider(const Table& t, const ColName& names_from, const ColName& values_from) {
    TABLED_TRY(names_idx, resolve(t, names_from));
    TABLED_TRY(values_idx, resolve(t, values_from));
    if (names_from == values_from)
        return contract(ErrCode::NameClash, "namesFrom and valuesFrom are both \"" + names_from + "\"");
    const Column& names_col = t.schema().at(names_idx);
    if (names_col.sort != Sort::string())
        return contract(ErrCode::SortMismatch, "namesFrom column \"" + names_from +
                                                   "\" must hold column names, found " +
                                                   to_string(names_col.sort));
    const Sort value_sort = t.schema().at(values_idx).sort;

    std::vector<std::size_t> key_cols;
    for (std::size_t c = 0; c < t.ncols(); ++c)
        if (c != names_idx && c != values_idx) key_cols.push_back(c);

    // Distinct spread names in first-occurrence order.
    std::vector<ColName> spread;
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        const Cell& cell = t.at(names_idx, r);
        if (cell.is_missing())
            return contract(ErrCode::MissingName,
                            "namesFrom column \"" + names_from + "\" is missing at row " +
                                std::to_string(r));
        const std::string& name = cell.value().as_string();
        if (name.empty())
            return contract(ErrCode::MissingName, "namesFrom value at row " + std::to_string(r) +
                                                      " is an empty name");
        for (std::size_t c : key_cols) {
            if (t.schema().at(c).name == name)
                return contract(ErrCode::NameClash, "spread column \"" + name +
                                                        "\" clashes with a key column");
        }
        if (std::find(spread.begin(), spread.end(), name) == spread.end()) spread.push_back(name);
    }

    // Distinct key combinations in first-occurrence order.
    auto key_of = [&](std::size_t r) {
        std::vector<Cell> key;
        key.reserve(key_cols.size());
        for (std::size_t c : key_cols) key.push_back(t.at(c, r));
        return key;
    };
    std::vector<std::vector<Cell>> key_rows;
    std::vector<std::vector<std::optional<std::size_t>>> slots; // per key row, per spread column
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        auto key = key_of(r);
        std::size_t row_slot = key_rows.size();
        for (std::size_t k = 0; k < key_rows.size(); ++k) {
            if (key_rows[k] == key) {
                row_slot = k;
                break;
            }
        }
        if (row_slot == key_rows.size()) {
            key_rows.push_back(key);
            slots.emplace_back(spread.size());
        }
        const std::string& name = t.at(names_idx, r).value().as_string();
        std::size_t col_slot =
            std::find(spread.begin(), spread.end(), name) - spread.begin();
        if (slots[row_slot][col_slot].has_value())
            return contract(ErrCode::DuplicateCombination,
                            "rows " + std::to_string(*slots[row_slot][col_slot]) + " and " +
                                std::to_string(r) + " repeat name \"" + name +
                                "\" for the same key");
        slots[row_slot][col_slot] = r;
    }

    std::vector<Column> columns;
    for (std::size_t c : key_cols) columns.push_back(t.schema().at(c));
    std::vector<bool> has_missing(spread.size(), false);
    for (const auto& row_slots : slots)
        for (std::size_t s = 0; s < spread.size(); ++s)
            if (!row_slots[s].has_value() ||
                (row_slots[s].has_value() && t.at(values_idx, *row_slots[s]).is_missing()))
                has_missing[s] = true;
    for (std::size_t s = 0; s < spread.size(); ++s)
        columns.push_back(Column{spread[s], value_sort, has_missing[s]});

    std::vector<std::vector<Cell>> rows;
    rows.reserve(key_rows.size());
    for (std::size_t k = 0; k < key_rows.size(); ++k) {
        std::vector<Cell> row = key_rows[k];
        for (std::size_t s = 0; s < spread.size(); ++s)
            row.push_back(slots[k][s] ? t.at(values_idx, *slots[k][s]) : Cell::missing());
        rows.push_back(std::move(row));
    }
    return Table::unchecked(Schema(std::move(columns)), std::move(rows));
}

namespace {

Outcome<Table> group_by(const Table& t, const ColName& c, bool retain_key) {
    TABLED_TRY(idx, resolve(t, c));
    const Column& key_col = t.schema().at(idx);
    if (key_col.optional)
        return contract(ErrCode::MissingCell,
                        "group key \"" + c + "\" must be a non-optional column");

    Schema group_schema = t.schema();
    if (!retain_key) {
        std::vector<Column> cols;
        for (std::size_t i = 0; i < t.ncols(); ++i)
            if (i != idx) cols.push_back(t.schema().at(i));
        group_schema = Schema(std::move(cols));
    }

    std::vector<Value> keys;
    std::vector<std::vector<std::vector<Cell>>> groups;
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        const Value& key = t.at(idx, r).value();
        std::size_t slot = keys.size();
        for (std::size_t k = 0; k < keys.size(); ++k) {
            if (keys[k] == key) {
                slot = k;
                break;
            }
        }
        if (slot == keys.size()) {
            keys.push_back(key);
            groups.emplace_back();
        }
        std::vector<Cell> member;
        for (std::size_t cc = 0; cc < t.ncols(); ++cc) {
            if (!retain_key && cc == idx) continue;
            member.push_back(t.at(cc, r));
        }
        groups[slot].push_back(std::move(member));
    }

    Schema out_schema(std::vector<Column>{
        Column{"key", key_col.sort, false},
        Column{"groups", Sort::sub_table(group_schema), false},
    });
    auto shared_group_schema = std::make_shared<const Schema>(group_schema);
    std::vector<std::vector<Cell>> rows;
    rows.reserve(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        rows.push_back({Cell(keys[k]),
                        Cell(Value::table(Table::unchecked(shared_group_schema,
                                                           std::move(groups[k]))))});
    }
    return Table::unchecked(std::move(out_schema), std::move(rows));
}

} // namespace

Outcome<Table> group_by_retentive(const Table& t, const ColName& c) {
    return group_by(t, c, true);
}

Outcome<Table> group_by_subtractive(const Table& t, const ColName& c) {
    return group_by(t, c, false);
}

Outcome<Table> sample_rows(const Table& t, double n, int64_t seed) {
    TABLED_TRY(v, integral(n, ErrCode::SampleTooLarge, "sample size"));
    if (v < 0 || v > static_cast<double>(t.nrows()))
        return contract(ErrCode::SampleTooLarge, "sample size " + number_to_string(v) +
                                                     " out of range [0, " +
                                                     std::to_string(t.nrows()) + "]");
    auto state = prng::checked_seed(seed);
    if (!state.ok()) {
        BenchError e = state.error();
        e.contract = true;
        return e;
    }

    const std::size_t count = static_cast<std::size_t>(v);
    std::vector<std::size_t> indices(t.nrows());
    std::iota(indices.begin(), indices.end(), 0);
    int32_t s = state.value();
    for (std::size_t i = 0; i < count; ++i) {
        s = prng::next(s);
        std::size_t j = i + static_cast<std::size_t>(
                                prng::bounded(s, static_cast<int64_t>(t.nrows() - i)));
        std::swap(indices[i], indices[j]);
    }
    std::vector<std::size_t> chosen(indices.begin(), indices.begin() + count);
    std::sort(chosen.begin(), chosen.end()); // original table order

    std::vector<std::vector<Cell>> rows;
    rows.reserve(count);
    for (std::size_t r : chosen) rows.push_back(t.row_cells(r));
    return Table::unchecked(t.schema_ptr(), std::move(rows));
}

Outcome<double> dot_product(const Table& t, const ColName& c1, const ColName& c2) {
    TABLED_TRY(i1, resolve(t, c1));
    TABLED_TRY(i2, resolve(t, c2));
    for (std::size_t idx : {i1, i2}) {
        const Column& col = t.schema().at(idx);
        if (col.sort != Sort::number())
            return contract(ErrCode::SortMismatch, "dotProduct column \"" + col.name +
                                                       "\" must be Number, found " +
                                                       to_string(col.sort));
    }
    double total = 0.0;
    for (std::size_t r = 0; r < t.nrows(); ++r) {
        for (std::size_t idx : {i1, i2}) {
            if (t.at(idx, r).is_missing())
                return contract(ErrCode::MissingCell,
                                "column \"" + t.schema().at(idx).name +
                                    "\" has a missing value at row " + std::to_string(r));
        }
        total += t.at(i1, r).value().as_number() * t.at(i2, r).value().as_number();
    }
    return total;
}

} // namespace tabled::ops
