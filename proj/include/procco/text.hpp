#pragma once

// Small lexical helpers shared by the DSL parser, the canonical format and the
// report writers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace procco::text {

// [A-Za-z_][A-Za-z0-9_.-]*
bool is_identifier(std::string_view s);

// "start date" <-> "start_date". Schema names use spaces, the DSL uses underscores.
std::string spaced(std::string_view s);
std::string underscored(std::string_view s);

// Double-quoted string with backslash escapes for \\ \" \n \t \r.
std::string quote(std::string_view s);

// Offset of the first byte that is not part of a well-formed UTF-8 sequence.
std::optional<std::size_t> first_invalid_utf8(std::string_view s);

// Number of code points in a well-formed UTF-8 string.
std::size_t utf8_length(std::string_view s);

// YYYY-MM-DD[Thh:mm[:ss[.fff]][Z|(+|-)hh:mm]] with calendar-valid fields.
bool is_iso_datetime(std::string_view s);

// -?[0-9]+(\.[0-9]+)?
bool is_decimal(std::string_view s);

}  // namespace procco::text
