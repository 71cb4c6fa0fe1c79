#pragma once

#include "tabled/outcome.hpp"
#include "tabled/value.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace tabled {

/// An ordered sequence of cells, one per column of its schema.
class Row {
public:
    Row(std::shared_ptr<const Schema> schema, std::vector<Cell> cells)
        : schema_(std::move(schema)), cells_(std::move(cells)) {}

    const Schema& schema() const { return *schema_; }
    const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(std::size_t c) const { return cells_[c]; }

    Outcome<Cell> get(const ColName& name) const;

    bool operator==(const Row& other) const {
        return *schema_ == *other.schema_ && cells_ == other.cells_;
    }

private:
    std::shared_ptr<const Schema> schema_;
    std::vector<Cell> cells_;
};

/// Immutable rectangular table: a schema of C distinct columns and R rows of
/// C cells each. Rows and columns are both ordered; cells are addressed by
/// (column, row) with 0-based indices. Zero rows and/or columns are fine.
class Table {
public:
    Table() : schema_(std::make_shared<const Schema>()) {}

    /// Trusted constructor: the caller guarantees the invariants hold
    /// (operations construct outputs cell-by-cell from validated inputs).
    static Table unchecked(std::shared_ptr<const Schema> schema,
                           std::vector<std::vector<Cell>> rows) {
        return Table(std::move(schema), std::move(rows));
    }
    static Table unchecked(Schema schema, std::vector<std::vector<Cell>> rows) {
        return Table(std::make_shared<const Schema>(std::move(schema)), std::move(rows));
    }

    const Schema& schema() const { return *schema_; }
    const std::shared_ptr<const Schema>& schema_ptr() const { return schema_; }
    std::vector<ColName> header() const { return schema_->header(); }

    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return schema_->size(); }

    const Cell& at(std::size_t c, std::size_t r) const { return rows_[r][c]; }
    const std::vector<Cell>& row_cells(std::size_t r) const { return rows_[r]; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    Outcome<Row> get_row(std::size_t r) const;

    bool operator==(const Table& other) const {
        return *schema_ == *other.schema_ && rows_ == other.rows_;
    }
    bool operator!=(const Table& other) const { return !(*this == other); }

private:
    Table(std::shared_ptr<const Schema> schema, std::vector<std::vector<Cell>> rows)
        : schema_(std::move(schema)), rows_(std::move(rows)) {}

    std::shared_ptr<const Schema> schema_;
    std::vector<std::vector<Cell>> rows_;
};

std::string to_string(const Table& table);

/// Total validation of the table invariants. Returns the first violation in
/// row-major scan order: header distinctness first, then per-row width, then
/// per-cell sort and missingness.
Outcome<Table> validate_table(const Schema& schema, std::vector<std::vector<Cell>> rows);

/// Sort/missing check for one cell against its column; `c`/`r` only label the error.
Outcome<void> check_cell(const Cell& cell, const Column& column, std::size_t c, std::size_t r);

} // namespace tabled
