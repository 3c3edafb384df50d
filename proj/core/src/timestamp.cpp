#include "flowgraph/timestamp.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace flowgraph {

namespace {

constexpr std::int64_t kMicrosPerSec = 1000000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses a run of digits; advances `pos`. Returns nullopt if no digits.
std::optional<long> read_int(std::string_view s, std::size_t& pos, std::size_t max_digits = 10) {
    std::size_t start = pos;
    while (pos < s.size() && pos - start < max_digits &&
           std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start) return std::nullopt;
    long value = 0;
    std::from_chars(s.data() + start, s.data() + pos, value);
    return value;
}

bool consume(std::string_view s, std::size_t& pos, char c) {
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

std::optional<Micros> from_civil(long y, long mo, long d, long h, long mi, long sec, long usec) {
    using namespace std::chrono;
    if (mo < 1 || mo > 12 || d < 1 || d > 31) return std::nullopt;
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
    year_month_day ymd{year{static_cast<int>(y)}, month{static_cast<unsigned>(mo)},
                       day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    sys_days days{ymd};
    std::int64_t secs = std::int64_t(days.time_since_epoch().count()) * 86400 + h * 3600 + mi * 60 + sec;
    return secs * kMicrosPerSec + usec;
}

// Fractional seconds after an optional '.', padded/truncated to micros.
long read_fraction(std::string_view s, std::size_t& pos) {
    if (!consume(s, pos, '.')) return 0;
    long frac = 0;
    int digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (digits < 6) {
            frac = frac * 10 + (s[pos] - '0');
            ++digits;
        }
        ++pos;
    }
    while (digits < 6) {
        frac *= 10;
        ++digits;
    }
    return frac;
}

// Shared tail: "H:MM[:SS[.frac]] [AM|PM]" starting at pos.
struct TimeOfDay {
    long h = 0, m = 0, s = 0, usec = 0;
};

std::optional<TimeOfDay> read_time(std::string_view s, std::size_t& pos) {
    TimeOfDay t;
    auto h = read_int(s, pos, 2);
    if (!h || !consume(s, pos, ':')) return std::nullopt;
    auto m = read_int(s, pos, 2);
    if (!m) return std::nullopt;
    t.h = *h;
    t.m = *m;
    std::size_t save = pos;
    if (consume(s, pos, ':')) {
        auto sec = read_int(s, pos, 2);
        if (!sec) {
            pos = save;
        } else {
            t.s = *sec;
            t.usec = read_fraction(s, pos);
        }
    }
    // optional " AM"/" PM"
    save = pos;
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos + 1 < s.size()) {
        char a = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
        char b = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos + 1])));
        if ((a == 'A' || a == 'P') && b == 'M') {
            pos += 2;
            if (a == 'P' && t.h < 12) t.h += 12;
            if (a == 'A' && t.h == 12) t.h = 0;
        } else {
            pos = save;
        }
    } else {
        pos = save;
    }
    return t;
}

std::optional<Micros> parse_iso(std::string_view s) {
    std::size_t pos = 0;
    auto y = read_int(s, pos, 4);
    if (!y || !consume(s, pos, '-')) return std::nullopt;
    auto mo = read_int(s, pos, 2);
    if (!mo || !consume(s, pos, '-')) return std::nullopt;
    auto d = read_int(s, pos, 2);
    if (!d) return std::nullopt;
    long h = 0, mi = 0, sec = 0, usec = 0;
    if (pos < s.size()) {
        if (!consume(s, pos, ' ') && !consume(s, pos, 'T')) return std::nullopt;
        auto t = read_time(s, pos);
        if (!t) return std::nullopt;
        h = t->h;
        mi = t->m;
        sec = t->s;
        usec = t->usec;
    }
    if (pos != s.size()) return std::nullopt;
    return from_civil(*y, *mo, *d, h, mi, sec, usec);
}

std::optional<Micros> parse_slashed(std::string_view s, bool day_first) {
    std::size_t pos = 0;
    auto a = read_int(s, pos, 2);
    if (!a || !consume(s, pos, '/')) return std::nullopt;
    auto b = read_int(s, pos, 2);
    if (!b || !consume(s, pos, '/')) return std::nullopt;
    auto y = read_int(s, pos, 4);
    if (!y) return std::nullopt;
    long yy = *y < 100 ? *y + 2000 : *y;
    long h = 0, mi = 0, sec = 0, usec = 0;
    if (pos < s.size()) {
        if (!consume(s, pos, ' ')) return std::nullopt;
        auto t = read_time(s, pos);
        if (!t) return std::nullopt;
        h = t->h;
        mi = t->m;
        sec = t->s;
        usec = t->usec;
    }
    if (pos != s.size()) return std::nullopt;
    long d = day_first ? *a : *b;
    long mo = day_first ? *b : *a;
    return from_civil(yy, mo, d, h, mi, sec, usec);
}

std::optional<Micros> parse_epoch_seconds(std::string_view s) {
    std::size_t pos = 0;
    bool neg = consume(s, pos, '-');
    auto whole = read_int(s, pos, 12);
    if (!whole) return std::nullopt;
    long frac = read_fraction(s, pos);
    if (pos != s.size()) return std::nullopt;
    Micros v = Micros(*whole) * kMicrosPerSec + frac;
    return neg ? -v : v;
}

std::optional<Micros> parse_epoch_micros(std::string_view s) {
    std::size_t pos = 0;
    bool neg = consume(s, pos, '-');
    auto whole = read_int(s, pos, 19);
    if (!whole || pos != s.size()) return std::nullopt;
    return neg ? -Micros(*whole) : Micros(*whole);
}

}  // namespace

std::optional<TsFormat> ts_format_from_name(std::string_view name) {
    if (name == "auto") return TsFormat::Auto;
    if (name == "iso") return TsFormat::Iso;
    if (name == "dmy") return TsFormat::DayFirst;
    if (name == "mdy") return TsFormat::MonthFirst;
    if (name == "epoch-seconds") return TsFormat::EpochSeconds;
    if (name == "epoch-micros") return TsFormat::EpochMicros;
    return std::nullopt;
}

std::optional<Micros> parse_timestamp(std::string_view text, TsFormat format) {
    std::string_view s = trim(text);
    if (s.empty()) return std::nullopt;
    switch (format) {
        case TsFormat::Iso: return parse_iso(s);
        case TsFormat::DayFirst: return parse_slashed(s, true);
        case TsFormat::MonthFirst: return parse_slashed(s, false);
        case TsFormat::EpochSeconds: return parse_epoch_seconds(s);
        case TsFormat::EpochMicros: return parse_epoch_micros(s);
        case TsFormat::Auto: break;
    }
    if (auto v = parse_iso(s)) return v;
    if (auto v = parse_slashed(s, true)) return v;
    return parse_epoch_seconds(s);
}

std::string format_timestamp(Micros t) {
    using namespace std::chrono;
    std::int64_t secs = t / kMicrosPerSec;
    std::int64_t usec = t % kMicrosPerSec;
    if (usec < 0) {
        usec += kMicrosPerSec;
        secs -= 1;
    }
    std::int64_t day_count = secs / 86400;
    std::int64_t rem = secs % 86400;
    if (rem < 0) {
        rem += 86400;
        day_count -= 1;
    }
    year_month_day ymd{sys_days{days{day_count}}};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u %02lld:%02lld:%02lld.%06lld",
                  int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                  static_cast<long long>(rem / 3600), static_cast<long long>(rem / 60 % 60),
                  static_cast<long long>(rem % 60), static_cast<long long>(usec));
    return buf;
}

}  // namespace flowgraph
