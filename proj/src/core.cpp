#include "tabled/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tabled {

std::string to_string(const Position& p) {
    return std::to_string(p.line) + ":" + std::to_string(p.column);
}

std::string to_string(const SourceSpan& s) {
    return to_string(s.start) + "-" + to_string(s.end);
}

std::string_view to_string(ErrCode code) {
    switch (code) {
        case ErrCode::DuplicateColumn: return "DuplicateColumn";
        case ErrCode::RaggedRow: return "RaggedRow";
        case ErrCode::SortMismatch: return "SortMismatch";
        case ErrCode::IllegalMissing: return "IllegalMissing";
        case ErrCode::UnknownColumn: return "UnknownColumn";
        case ErrCode::RowIndexOutOfBounds: return "RowIndexOutOfBounds";
        case ErrCode::LengthMismatch: return "LengthMismatch";
        case ErrCode::NonIntegralIndex: return "NonIntegralIndex";
        case ErrCode::SchemaMismatch: return "SchemaMismatch";
        case ErrCode::HeadOutOfRange: return "HeadOutOfRange";
        case ErrCode::UnsortableSort: return "UnsortableSort";
        case ErrCode::MissingCell: return "MissingCell";
        case ErrCode::InvalidComparator: return "InvalidComparator";
        case ErrCode::DuplicateRightKey: return "DuplicateRightKey";
        case ErrCode::NameClash: return "NameClash";
        case ErrCode::DuplicateCombination: return "DuplicateCombination";
        case ErrCode::MissingName: return "MissingName";
        case ErrCode::SampleTooLarge: return "SampleTooLarge";
        case ErrCode::EmptyInput: return "EmptyInput";
        case ErrCode::InvalidSeed: return "InvalidSeed";
        case ErrCode::EmptyName: return "EmptyName";
        case ErrCode::EmptySeparator: return "EmptySeparator";
        case ErrCode::LexError: return "LexError";
        case ErrCode::ParseError: return "ParseError";
        case ErrCode::HeterogeneousDynamicAccess: return "HeterogeneousDynamicAccess";
        case ErrCode::ArityMismatch: return "ArityMismatch";
        case ErrCode::NonTableArgument: return "NonTableArgument";
        case ErrCode::UnboundVariable: return "UnboundVariable";
        case ErrCode::UnsupportedRecursion: return "UnsupportedRecursion";
        case ErrCode::SwappedColumns: return "SwappedColumns";
        case ErrCode::ManifestError: return "ManifestError";
        case ErrCode::IoError: return "IoError";
        case ErrCode::EnsureViolation: return "EnsureViolation";
    }
    return "Unknown";
}

// ── Sort ──────────────────────────────────────────────────────────────────

Sort Sort::seq(Sort elem) {
    Sort s(Tag::Seq);
    s.elem_ = std::make_shared<const Sort>(std::move(elem));
    return s;
}

Sort Sort::sub_table(Schema schema) {
    Sort s(Tag::SubTable);
    s.schema_ = std::make_shared<const Schema>(std::move(schema));
    return s;
}

bool Sort::operator==(const Sort& other) const {
    if (tag_ != other.tag_) return false;
    switch (tag_) {
        case Tag::Seq: return *elem_ == *other.elem_;
        case Tag::SubTable: return *schema_ == *other.schema_;
        default: return true;
    }
}

std::string to_string(const Sort& sort) {
    switch (sort.tag()) {
        case Sort::Tag::Number: return "Number";
        case Sort::Tag::Boolean: return "Boolean";
        case Sort::Tag::String: return "String";
        case Sort::Tag::Seq: return "Seq<" + to_string(sort.elem()) + ">";
        case Sort::Tag::SubTable: return "Table(" + to_string(sort.sub_schema()) + ")";
    }
    return "?";
}

std::string to_string(const Schema& schema) {
    std::string out;
    for (std::size_t c = 0; c < schema.size(); ++c) {
        if (c > 0) out += ", ";
        const Column& col = schema.at(c);
        out += col.name + ": " + to_string(col.sort);
        if (col.optional) out += "?";
    }
    return out;
}

// ── Value ─────────────────────────────────────────────────────────────────

bool SeqValue::operator==(const SeqValue& other) const {
    return elem == other.elem && items == other.items;
}

Value Value::table(Table t) {
    return Value(std::shared_ptr<const Table>(std::make_shared<Table>(std::move(t))));
}

Sort Value::sort() const {
    if (is_number()) return Sort::number();
    if (is_boolean()) return Sort::boolean();
    if (is_string()) return Sort::string();
    if (is_seq()) return Sort::seq(as_seq().elem);
    return Sort::sub_table(as_table().schema());
}

bool Value::matches(const Sort& sort) const {
    switch (sort.tag()) {
        case Sort::Tag::Number: return is_number();
        case Sort::Tag::Boolean: return is_boolean();
        case Sort::Tag::String: return is_string();
        case Sort::Tag::Seq: return is_seq() && as_seq().elem == sort.elem();
        case Sort::Tag::SubTable: return is_table() && as_table().schema() == sort.sub_schema();
    }
    return false;
}

bool Value::operator==(const Value& other) const {
    if (repr_.index() != other.repr_.index()) return false;
    if (is_table()) return as_table() == other.as_table();
    return repr_ == other.repr_;
}

std::string number_to_string(double n) {
    if (std::isnan(n)) return "nan";
    if (std::isinf(n)) return n > 0 ? "inf" : "-inf";
    if (n == 0.0) return "0";
    double integral = 0.0;
    if (std::modf(n, &integral) == 0.0 && std::abs(n) < 9007199254740992.0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", n);
        return buf;
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), n);
    (void)ec;
    return std::string(buf, end);
}

std::string to_string(const Value& value) {
    if (value.is_number()) return number_to_string(value.as_number());
    if (value.is_boolean()) return value.as_boolean() ? "true" : "false";
    if (value.is_string()) return value.as_string();
    if (value.is_seq()) {
        std::string out = "[";
        const auto& seq = value.as_seq();
        for (std::size_t i = 0; i < seq.items.size(); ++i) {
            if (i > 0) out += ", ";
            out += to_string(seq.items[i]);
        }
        return out + "]";
    }
    return to_string(value.as_table());
}

std::string to_string(const Cell& cell) {
    return cell.is_missing() ? "_" : to_string(cell.value());
}

// ── Table / Row ───────────────────────────────────────────────────────────

Outcome<Cell> Row::get(const ColName& name) const {
    auto c = schema_->index_of(name);
    if (!c) {
        return BenchError::make(ErrCode::UnknownColumn,
                                "no column named \"" + name + "\" (header: " +
                                    to_string(*schema_) + ")");
    }
    return cells_[*c];
}

Outcome<Row> Table::get_row(std::size_t r) const {
    if (r >= rows_.size()) {
        return BenchError::make(ErrCode::RowIndexOutOfBounds,
                                "row index " + std::to_string(r) + " out of bounds (nrows = " +
                                    std::to_string(rows_.size()) + ")");
    }
    return Row(schema_, rows_[r]);
}

std::string to_string(const Table& table) {
    std::ostringstream out;
    out << "| " << to_string(table.schema()) << " |";
    for (std::size_t r = 0; r < table.nrows(); ++r) {
        out << "\n| ";
        for (std::size_t c = 0; c < table.ncols(); ++c) {
            if (c > 0) out << " | ";
            out << to_string(table.at(c, r));
        }
        out << " |";
    }
    return out.str();
}

Outcome<void> check_cell(const Cell& cell, const Column& column, std::size_t c, std::size_t r) {
    std::string where = "(column " + std::to_string(c) + ", row " + std::to_string(r) + ")";
    if (cell.is_missing()) {
        if (!column.optional) {
            return BenchError::make(ErrCode::IllegalMissing,
                                    "missing value in non-optional column \"" + column.name +
                                        "\" at " + where);
        }
        return {};
    }
    if (!cell.value().matches(column.sort)) {
        return BenchError::make(ErrCode::SortMismatch,
                                "cell at " + where + " in column \"" + column.name +
                                    "\": expected " + to_string(column.sort) + ", found " +
                                    to_string(cell.value().sort()) + " " +
                                    to_string(cell.value()));
    }
    return {};
}

Outcome<Table> validate_table(const Schema& schema, std::vector<std::vector<Cell>> rows) {
    if (auto dup = schema.first_duplicate()) {
        return BenchError::make(ErrCode::DuplicateColumn,
                                "duplicate column name \"" + schema.at(*dup).name +
                                    "\" at column " + std::to_string(*dup));
    }
    const std::size_t width = schema.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
            return BenchError::make(ErrCode::RaggedRow,
                                    "row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r].size()) + " cells, expected " +
                                        std::to_string(width));
        }
        for (std::size_t c = 0; c < width; ++c) {
            if (auto checked = check_cell(rows[r][c], schema.at(c), c, r); !checked.ok())
                return checked.error();
        }
    }
    return Table::unchecked(schema, std::move(rows));
}

} // namespace tabled
