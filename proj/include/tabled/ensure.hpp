#pragma once

#include "tabled/table.hpp"

namespace tabled::ensure {

/// Re-validates an operation result: rectangular, distinct header, sort-valid
/// cells. Every operation output must survive this.
Outcome<void> well_formed(const Table& t);

/// The four addColumn guarantees: header(t2) = header(t1) ++ [c]; existing
/// column sorts unchanged; new column sorted like vs; row count unchanged.
Outcome<void> add_column(const Table& t1, const ColName& c, const SeqValue& vs, const Table& t2);

/// Output rows must be drawn from the input rows (orderBy, tsort, selectRows,
/// head, sampleRows all guarantee this).
Outcome<void> rows_subset(const Table& input, const Table& output);

/// Output rows are a permutation of the input rows (tsort, orderBy).
Outcome<void> rows_permutation(const Table& input, const Table& output);

} // namespace tabled::ensure
