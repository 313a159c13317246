#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfipp/date.hpp"

namespace nfipp {

// Daily event counts for one country. One entry per calendar day, no gaps.
struct DailyCountSeries {
  std::vector<std::int64_t> counts;
  Date start;
  std::string country;

  std::size_t size() const { return counts.size(); }
  bool empty() const { return counts.empty(); }
  Date end() const {  // last covered day
    return start + static_cast<std::int32_t>(counts.size()) - 1;
  }
  DateRange range() const { return {start, end()}; }
  bool covers(const DateRange& r) const {
    return !empty() && start <= r.first && r.last <= end();
  }
  std::int64_t at(Date d) const { return counts[d - start]; }

  // Throws ArgumentError on negative counts.
  void validate() const;

  bool operator==(const DailyCountSeries&) const = default;
};

// Daily forecast intensities (events per day), aligned to calendar days.
struct IntensitySeries {
  std::vector<double> values;
  Date start;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  Date end() const {
    return start + static_cast<std::int32_t>(values.size()) - 1;
  }
  DateRange range() const { return {start, end()}; }
  double at(Date d) const { return values[d - start]; }

  // Throws ArgumentError on negative or non-finite values.
  void validate() const;

  bool operator==(const IntensitySeries&) const = default;
};

}  // namespace nfipp
