#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tabled {

class Schema;

/// A column name. Names are compared by exact code points, case-sensitively;
/// they are ordinary strings so programs can manufacture them at runtime.
using ColName = std::string;

/// The kind of data a column holds. Seq and SubTable nest; nesting is finite
/// by construction (values own their payloads).
class Sort {
public:
    enum class Tag { Number, Boolean, String, Seq, SubTable };

    static Sort number() { return Sort(Tag::Number); }
    static Sort boolean() { return Sort(Tag::Boolean); }
    static Sort string() { return Sort(Tag::String); }
    static Sort seq(Sort elem);
    static Sort sub_table(Schema schema);

    Tag tag() const { return tag_; }
    bool is_scalar() const {
        return tag_ == Tag::Number || tag_ == Tag::Boolean || tag_ == Tag::String;
    }

    /// Element sort; only valid when tag() == Seq.
    const Sort& elem() const { return *elem_; }
    /// Sub-table schema; only valid when tag() == SubTable.
    const Schema& sub_schema() const { return *schema_; }

    bool operator==(const Sort& other) const;
    bool operator!=(const Sort& other) const { return !(*this == other); }

private:
    explicit Sort(Tag tag) : tag_(tag) {}

    Tag tag_;
    std::shared_ptr<const Sort> elem_;
    std::shared_ptr<const Schema> schema_;
};

std::string to_string(const Sort& sort);

struct Column {
    ColName name;
    Sort sort;
    bool optional = false;

    bool operator==(const Column& other) const {
        return name == other.name && sort == other.sort && optional == other.optional;
    }
};

/// Ordered sequence of distinct named columns. Distinctness is established by
/// validate_table / checked factories; Schema itself is a dumb container so the
/// frontend can represent malformed literals before validation.
class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<Column> columns) : columns_(std::move(columns)) {}

    const std::vector<Column>& columns() const { return columns_; }
    std::size_t size() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }
    const Column& at(std::size_t c) const { return columns_[c]; }

    std::optional<std::size_t> index_of(const ColName& name) const {
        for (std::size_t c = 0; c < columns_.size(); ++c)
            if (columns_[c].name == name) return c;
        return std::nullopt;
    }
    bool has(const ColName& name) const { return index_of(name).has_value(); }

    std::vector<ColName> header() const {
        std::vector<ColName> names;
        names.reserve(columns_.size());
        for (const auto& col : columns_) names.push_back(col.name);
        return names;
    }

    /// First duplicated name in order, if any.
    std::optional<std::size_t> first_duplicate() const {
        for (std::size_t c = 1; c < columns_.size(); ++c)
            for (std::size_t prev = 0; prev < c; ++prev)
                if (columns_[prev].name == columns_[c].name) return c;
        return std::nullopt;
    }

    bool operator==(const Schema& other) const { return columns_ == other.columns_; }
    bool operator!=(const Schema& other) const { return !(*this == other); }

private:
    std::vector<Column> columns_;
};

std::string to_string(const Schema& schema);

} // namespace tabled
