// Microsecond-resolution timestamps and the text formats they are parsed from.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace flowgraph {

// Microseconds since the Unix epoch, UTC.
using Micros = std::int64_t;

enum class TsFormat {
    Auto,         // try Iso, then DayFirst, then EpochSeconds
    Iso,          // YYYY-MM-DD HH:MM[:SS[.ffffff]], 'T' separator accepted
    DayFirst,     // D/M/YYYY H:MM[:SS[.ffffff]] [AM|PM]
    MonthFirst,   // M/D/YYYY H:MM[:SS[.ffffff]] [AM|PM]
    EpochSeconds, // decimal seconds since epoch
    EpochMicros,  // integer microseconds since epoch
};

std::optional<TsFormat> ts_format_from_name(std::string_view name);

// Returns nullopt if `text` does not parse under `format`.
std::optional<Micros> parse_timestamp(std::string_view text, TsFormat format = TsFormat::Auto);

// ISO form with 6 fractional digits; parse_timestamp round-trips it exactly.
std::string format_timestamp(Micros t);

}  // namespace flowgraph
