#include "nfipp/date.hpp"

#include <chrono>
#include <cstdio>

namespace nfipp {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(std::int32_t days) {
  return chr::year_month_day(
      chr::sys_days(chr::days(days)));
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  const chr::year_month_day ymd{chr::year(year), chr::month(month),
                                chr::day(day)};
  const auto sd = chr::sys_days(ymd);
  return Date(static_cast<std::int32_t>(sd.time_since_epoch().count()));
}

std::optional<Date> Date::parse(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0, d = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == 4 || i == 7) continue;
    if (iso[i] < '0' || iso[i] > '9') return std::nullopt;
  }
  y = (iso[0] - '0') * 1000 + (iso[1] - '0') * 100 + (iso[2] - '0') * 10 +
      (iso[3] - '0');
  m = (iso[5] - '0') * 10 + (iso[6] - '0');
  d = (iso[8] - '0') * 10 + (iso[9] - '0');
  const chr::year_month_day ymd{chr::year(y), chr::month(m), chr::day(d)};
  if (!ymd.ok()) return std::nullopt;
  const auto sd = chr::sys_days(ymd);
  return Date(static_cast<std::int32_t>(sd.time_since_epoch().count()));
}

std::string Date::to_string() const {
  const auto ymd = to_ymd(days_);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

int Date::year() const { return int(to_ymd(days_).year()); }
unsigned Date::month() const { return unsigned(to_ymd(days_).month()); }
unsigned Date::day() const { return unsigned(to_ymd(days_).day()); }

int Date::days_in_year(int year) {
  return year_end(year) - year_start(year) + 1;
}

int Date::days_in_month(int year, unsigned month) {
  const chr::year_month_day_last last{chr::year(year),
                                      chr::month_day_last(chr::month(month))};
  return int(unsigned(last.day()));
}

}  // namespace nfipp
