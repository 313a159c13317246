#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nfipp {

// Calendar day, stored as days since 1970-01-01 (UTC, proleptic Gregorian).
class Date {
 public:
  Date() = default;
  constexpr explicit Date(std::int32_t days_since_epoch)
      : days_(days_since_epoch) {}

  static Date from_ymd(int year, unsigned month, unsigned day);
  // Strict ISO-8601 YYYY-MM-DD; nullopt on malformed or non-existent dates.
  static std::optional<Date> parse(std::string_view iso);

  std::string to_string() const;  // YYYY-MM-DD

  int year() const;
  unsigned month() const;
  unsigned day() const;

  constexpr std::int32_t days_since_epoch() const { return days_; }

  constexpr Date operator+(std::int32_t days) const { return Date(days_ + days); }
  constexpr Date operator-(std::int32_t days) const { return Date(days_ - days); }
  constexpr std::int32_t operator-(Date other) const { return days_ - other.days_; }
  Date& operator+=(std::int32_t days) { days_ += days; return *this; }
  Date& operator++() { ++days_; return *this; }

  constexpr auto operator<=>(const Date&) const = default;

  static Date year_start(int year) { return from_ymd(year, 1, 1); }
  static Date year_end(int year) { return from_ymd(year, 12, 31); }
  static int days_in_year(int year);
  static int days_in_month(int year, unsigned month);

 private:
  std::int32_t days_ = 0;
};

// Inclusive day range [first, last].
struct DateRange {
  Date first;
  Date last;

  std::int32_t length() const { return last - first + 1; }
  bool contains(Date d) const { return first <= d && d <= last; }
  bool contains(const DateRange& other) const {
    return first <= other.first && other.last <= last;
  }
  std::string to_string() const {
    return first.to_string() + ".." + last.to_string();
  }
};

}  // namespace nfipp
