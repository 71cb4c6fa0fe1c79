#pragma once

#include "tabled/span.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tabled {

/// Every failure the library can report, one code per kind.
/// Contract violations reuse these codes with the `contract` flag set.
enum class ErrCode {
    // validation / schema errors
    DuplicateColumn,
    RaggedRow,
    SortMismatch,
    IllegalMissing,
    // access errors
    UnknownColumn,
    RowIndexOutOfBounds,
    // contract sub-codes
    LengthMismatch,
    NonIntegralIndex,
    SchemaMismatch,
    HeadOutOfRange,
    UnsortableSort,
    MissingCell,
    InvalidComparator,
    DuplicateRightKey,
    NameClash,
    DuplicateCombination,
    MissingName,
    SampleTooLarge,
    EmptyInput,
    InvalidSeed,
    // column-name errors
    EmptyName,
    EmptySeparator,
    // frontend
    LexError,
    ParseError,
    // checker-only
    HeterogeneousDynamicAccess,
    ArityMismatch,
    NonTableArgument,
    UnboundVariable,
    UnsupportedRecursion,
    SwappedColumns,
    // harness / io
    ManifestError,
    IoError,
    EnsureViolation,
};

std::string_view to_string(ErrCode code);

struct BenchError {
    ErrCode code;
    std::string message;
    SourceSpan span = {};
    /// True when the error is a violated operation contract (Requires/Ensures).
    bool contract = false;
    /// Innermost-first operation trace, filled in by the evaluator.
    std::vector<std::string> trace = {};

    static BenchError make(ErrCode code, std::string message) {
        return BenchError{code, std::move(message)};
    }
    static BenchError contract_violation(ErrCode sub, std::string message) {
        BenchError e{sub, std::move(message)};
        e.contract = true;
        return e;
    }

    BenchError& at(const SourceSpan& s) {
        if (!span.valid()) span = s;
        return *this;
    }
};

/// Success-or-error result of every fallible operation.
template <typename T>
class Outcome {
public:
    Outcome(T value) : repr_(std::move(value)) {}
    Outcome(BenchError error) : repr_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(repr_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& { return std::get<T>(repr_); }
    T& value() & { return std::get<T>(repr_); }
    T&& value() && { return std::get<T>(std::move(repr_)); }

    const BenchError& error() const& { return std::get<BenchError>(repr_); }
    BenchError& error() & { return std::get<BenchError>(repr_); }

    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

private:
    std::variant<T, BenchError> repr_;
};

template <>
class Outcome<void> {
public:
    Outcome() = default;
    Outcome(BenchError error) : error_(std::move(error)) {}

    bool ok() const { return !error_.has_value(); }
    explicit operator bool() const { return ok(); }
    const BenchError& error() const { return *error_; }

private:
    std::optional<BenchError> error_;
};

/// Early-return helper for chaining Outcome-producing calls.
#define TABLED_TRY(var, expr)                       \
    auto var##_out = (expr);                        \
    if (!var##_out.ok()) return var##_out.error();  \
    auto& var = var##_out.value()

} // namespace tabled
