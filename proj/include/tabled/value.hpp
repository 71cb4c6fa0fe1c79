#pragma once

#include "tabled/schema.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace tabled {

class Table;
class Value;

/// Sequence of values of a single sort. The element sort is carried
/// explicitly so empty sequences stay typed.
struct SeqValue {
    Sort elem;
    std::vector<Value> items;

    SeqValue() : elem(Sort::string()) {}
    SeqValue(Sort elem_sort, std::vector<Value> values)
        : elem(std::move(elem_sort)), items(std::move(values)) {}

    std::size_t size() const { return items.size(); }
    bool operator==(const SeqValue& other) const;
};

/// Cell data. Column names live in String cells; sub-tables are shared,
/// immutable payloads.
class Value {
public:
    using Repr = std::variant<double, bool, std::string, SeqValue, std::shared_ptr<const Table>>;

    Value(double n) : repr_(n) {}
    Value(bool b) : repr_(b) {}
    Value(std::string s) : repr_(std::move(s)) {}
    Value(const char* s) : repr_(std::string(s)) {}
    Value(SeqValue s) : repr_(std::move(s)) {}
    Value(std::shared_ptr<const Table> t) : repr_(std::move(t)) {}
    static Value table(Table t);

    bool is_number() const { return std::holds_alternative<double>(repr_); }
    bool is_boolean() const { return std::holds_alternative<bool>(repr_); }
    bool is_string() const { return std::holds_alternative<std::string>(repr_); }
    bool is_seq() const { return std::holds_alternative<SeqValue>(repr_); }
    bool is_table() const { return std::holds_alternative<std::shared_ptr<const Table>>(repr_); }

    double as_number() const { return std::get<double>(repr_); }
    bool as_boolean() const { return std::get<bool>(repr_); }
    const std::string& as_string() const { return std::get<std::string>(repr_); }
    const SeqValue& as_seq() const { return std::get<SeqValue>(repr_); }
    const Table& as_table() const { return *std::get<std::shared_ptr<const Table>>(repr_); }

    const Repr& repr() const { return repr_; }

    /// The sort this value inhabits.
    Sort sort() const;
    /// True when the value's sort equals `sort` (structural).
    bool matches(const Sort& sort) const;

    bool operator==(const Value& other) const;
    bool operator!=(const Value& other) const { return !(*this == other); }

private:
    Repr repr_;
};

std::string to_string(const Value& value);
/// Number rendering shared by println, cell rendering and the .tbl writer:
/// integers print without a decimal point, everything else shortest-round-trip.
std::string number_to_string(double n);

/// A cell either holds a value or is missing. Missing is legal only in
/// columns marked optional.
class Cell {
public:
    Cell() = default; // missing
    Cell(Value v) : value_(std::move(v)) {}
    static Cell missing() { return Cell(); }

    bool is_missing() const { return !value_.has_value(); }
    bool has_value() const { return value_.has_value(); }
    const Value& value() const { return *value_; }

    bool operator==(const Cell& other) const {
        if (is_missing() != other.is_missing()) return false;
        return is_missing() || *value_ == *other.value_;
    }
    bool operator!=(const Cell& other) const { return !(*this == other); }

private:
    std::optional<Value> value_;
};

std::string to_string(const Cell& cell);

} // namespace tabled
