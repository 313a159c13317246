#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nfipp/date.hpp"
#include "nfipp/series.hpp"

namespace nfipp {

enum class FeatureMode { terror_only, terror_climate, synthetic };

// Per-day feature rows with named columns, aligned to calendar days starting
// at `start` (synthetic matrices use a nominal start date).
struct FeatureMatrix {
  std::vector<double> values;  // row-major rows x cols
  std::size_t cols = 0;
  std::vector<std::string> column_names;
  FeatureMode mode = FeatureMode::synthetic;
  Date start;

  std::size_t rows() const { return cols == 0 ? 0 : values.size() / cols; }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }
  std::span<double> row(std::size_t r) {
    return {values.data() + r * cols, cols};
  }

  bool operator==(const FeatureMatrix&) const = default;
};

// Flood/drought occurrences plus the daily absolute temperature-anomaly
// series (|mean| + |min| + |max| contributions per day) for one country.
struct ClimatePanel {
  std::vector<Date> flood_drought_dates;  // sorted, one entry per occurrence
  std::vector<double> anomaly;            // daily, values >= 0
  Date anomaly_start;
  std::string country;

  Date anomaly_end() const {
    return anomaly_start + static_cast<std::int32_t>(anomaly.size()) - 1;
  }
  DateRange anomaly_range() const { return {anomaly_start, anomaly_end()}; }

  // Throws ArgumentError on negative anomaly values or unsorted event dates.
  void validate() const;

  bool operator==(const ClimatePanel&) const = default;
};

namespace features {

// Column-name contract; downstream reports reference these exact strings.
inline constexpr const char* kTerrorColumns[3] = {
    "atk_mean_15d", "atk_mean_90d", "atk_mean_365d"};
inline constexpr const char* kClimateColumns[4] = {
    "fd_count_6m", "fd_count_36m", "anom_sum_6m", "anom_sum_36m"};

// Fixed-day window conventions for the climate look-backs.
inline constexpr int kShortTermDays = 182;   // "6 months"
inline constexpr int kLongTermDays = 1095;   // "36 months"

// Mean daily attack occurrence over the trailing 15/90/365-day windows.
// A window of nominal length w covers days [t-w+1, t-1]; day t itself and
// day t-w are outside it. The mean divides by w. Requires counts history
// covering [t-365, t-1]; throws HistoryError otherwise.
std::array<double, 3> terror_features(const DailyCountSeries& counts, Date t);

// [flood+drought count 6m, count 36m, anomaly sum 6m, anomaly sum 36m].
// Count and sum windows cover days [t-w, t-1] for w in {182, 1095}.
// Requires anomaly history covering [t-1095, t-1]; throws HistoryError.
std::array<double, 4> climate_features(const ClimatePanel& panel, Date t);

// One row per day of `range`. terror_only keeps the 3 terror columns;
// terror_climate appends the 4 climate columns and requires a panel.
// Throws ArgumentError (missing panel) or HistoryError (insufficient
// look-back for some day in range).
FeatureMatrix build_matrix(const DailyCountSeries& counts,
                           const ClimatePanel* panel, const DateRange& range,
                           FeatureMode mode);

}  // namespace features
}  // namespace nfipp
