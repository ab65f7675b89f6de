#include "ribscope/date.hpp"

#include <charconv>
#include <cstdio>

#include "ribscope/errors.hpp"

namespace ribscope {

namespace {

bool parse_fixed_digits(std::string_view text, std::size_t pos,
                        std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < width; ++i) {
    char c = text[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) {
    throw DataError("invalid calendar date " + std::to_string(year) + "-" +
                    std::to_string(month) + "-" + std::to_string(day));
  }
  return Date(std::chrono::sys_days{ymd});
}

std::optional<Date> Date::parse_iso(std::string_view text) {
  int y = 0, m = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (!parse_fixed_digits(text, 0, 4, y) || !parse_fixed_digits(text, 5, 2, m) ||
      !parse_fixed_digits(text, 8, 2, d)) {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date(std::chrono::sys_days{ymd});
}

Date Date::parse_iso_or_throw(std::string_view text) {
  auto date = parse_iso(text);
  if (!date) throw DataError("invalid ISO date: '" + std::string(text) + "'");
  return *date;
}

std::string Date::to_iso() const {
  std::chrono::year_month_day ymd{days_};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

std::string render_date_pattern(std::string_view pattern, Date date) {
  std::chrono::year_month_day ymd{date.sys()};
  std::string out;
  out.reserve(pattern.size() + 8);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '%' && i + 1 < pattern.size()) {
      char buf[8];
      switch (pattern[i + 1]) {
        case 'Y':
          std::snprintf(buf, sizeof(buf), "%04d", int(ymd.year()));
          out += buf;
          ++i;
          continue;
        case 'm':
          std::snprintf(buf, sizeof(buf), "%02u", unsigned(ymd.month()));
          out += buf;
          ++i;
          continue;
        case 'd':
          std::snprintf(buf, sizeof(buf), "%02u", unsigned(ymd.day()));
          out += buf;
          ++i;
          continue;
        default:
          break;
      }
    }
    out += pattern[i];
  }
  return out;
}

std::optional<Date> match_date_pattern(std::string_view pattern,
                                       std::string_view name) {
  int year = -1, month = -1, day = -1;
  std::size_t pi = 0, ni = 0;
  while (pi < pattern.size()) {
    if (pattern[pi] == '%' && pi + 1 < pattern.size()) {
      char spec = pattern[pi + 1];
      int value = 0;
      if (spec == 'Y') {
        if (!parse_fixed_digits(name, ni, 4, value)) return std::nullopt;
        year = value;
        ni += 4;
        pi += 2;
        continue;
      }
      if (spec == 'm' || spec == 'd') {
        if (!parse_fixed_digits(name, ni, 2, value)) return std::nullopt;
        (spec == 'm' ? month : day) = value;
        ni += 2;
        pi += 2;
        continue;
      }
    }
    if (ni >= name.size() || name[ni] != pattern[pi]) return std::nullopt;
    ++ni;
    ++pi;
  }
  if (ni != name.size()) return std::nullopt;
  if (year < 0 || month < 0 || day < 0) return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{unsigned(month)},
                                  std::chrono::day{unsigned(day)}};
  if (!ymd.ok()) return std::nullopt;
  return Date(std::chrono::sys_days{ymd});
}

}  // namespace ribscope
