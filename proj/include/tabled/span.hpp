#pragma once

#include <cstdint>
#include <string>

namespace tabled {

/// 1-based line/column position in a source file.
struct Position {
    uint32_t line = 1;
    uint32_t column = 1;

    bool operator==(const Position&) const = default;
    auto operator<=>(const Position&) const = default;
};

/// Half-open is not needed here: spans are inclusive on both ends and
/// carry the file they came from by id (resolved by the diagnostic renderer).
struct SourceSpan {
    int32_t file_id = -1;
    Position start;
    Position end;

    bool operator==(const SourceSpan&) const = default;

    bool valid() const { return file_id >= 0; }

    /// Smallest span covering both inputs.
    static SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
        if (!a.valid()) return b;
        if (!b.valid()) return a;
        SourceSpan s;
        s.file_id = a.file_id;
        s.start = a.start < b.start ? a.start : b.start;
        s.end = a.end < b.end ? b.end : a.end;
        return s;
    }

    bool contains(const SourceSpan& inner) const {
        return file_id == inner.file_id && start <= inner.start && inner.end <= end;
    }
};

std::string to_string(const Position& p);
std::string to_string(const SourceSpan& s);

} // namespace tabled
