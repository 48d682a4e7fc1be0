#pragma once
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "tca/error.hpp"

namespace tca {

// Calendar date as days since 1970-01-01. Files use ISO-8601 strings.
using Date = std::int32_t;

namespace dates {

// Howard Hinnant's civil-date algorithms.
constexpr Date from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<int>(doe) - 719468;
}

struct Civil { int year; int month; int day; };

constexpr Civil to_civil(Date z) {
    z += 719468;
    const int era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

// 0 = Monday .. 6 = Sunday.
constexpr int weekday(Date d) {
    return static_cast<int>(d >= -3 ? (d + 3) % 7 : (d + 4) % 7 + 6);
}

constexpr bool is_weekday(Date d) { return weekday(d) < 5; }

inline Date parse(std::string_view s) {
    int y = 0, m = 0, day = 0;
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
        std::sscanf(std::string(s).c_str(), "%d-%d-%d", &y, &m, &day) != 3 ||
        m < 1 || m > 12 || day < 1 || day > 31)
        throw DataError("invalid date '" + std::string(s) + "' (expected YYYY-MM-DD)");
    return from_civil(y, m, day);
}

inline std::string format(Date d) {
    const Civil c = to_civil(d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

} // namespace dates
} // namespace tca
