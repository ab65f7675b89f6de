#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ribscope {

// Calendar day. Snapshots are keyed to daily 0000-hour dumps, so there is no
// time-of-day component anywhere in the toolkit.
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::sys_days d) : days_(d) {}

  // Throws DataError when the triple is not a real calendar date.
  static Date from_ymd(int year, unsigned month, unsigned day);

  // "YYYY-MM-DD". Returns nullopt on malformed input.
  static std::optional<Date> parse_iso(std::string_view text);
  static Date parse_iso_or_throw(std::string_view text);

  std::string to_iso() const;

  std::chrono::sys_days sys() const { return days_; }
  long day_number() const { return days_.time_since_epoch().count(); }

  Date plus_days(long n) const {
    return Date(days_ + std::chrono::days(n));
  }

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  std::chrono::sys_days days_{};
};

// Filename pattern support for dated snapshot files. Patterns are literal
// text with %Y (4 digits), %m and %d (2 digits) placeholders, e.g.
// "rib-%Y-%m-%d.tsv".
std::string render_date_pattern(std::string_view pattern, Date date);
std::optional<Date> match_date_pattern(std::string_view pattern,
                                       std::string_view name);

}  // namespace ribscope
