#include "nfipp/features.hpp"

#include <algorithm>
#include <cmath>

#include "nfipp/errors.hpp"

namespace nfipp {

void ClimatePanel::validate() const {
  if (!std::is_sorted(flood_drought_dates.begin(), flood_drought_dates.end()))
    throw ArgumentError("ClimatePanel: event dates must be sorted");
  for (double a : anomaly)
    if (!(a >= 0.0) || !std::isfinite(a))
      throw ArgumentError("ClimatePanel: anomaly values must be >= 0");
}

namespace features {

namespace {

// Sum of counts over days [t-w+1, t-1].
double trailing_sum(const DailyCountSeries& counts, Date t, int w) {
  const std::size_t first = (t - w + 1) - counts.start;
  std::int64_t sum = 0;
  for (int i = 0; i < w - 1; ++i) sum += counts.counts[first + i];
  return static_cast<double>(sum);
}

std::size_t count_events_in(const std::vector<Date>& sorted_dates,
                            Date first, Date last) {
  const auto lo =
      std::lower_bound(sorted_dates.begin(), sorted_dates.end(), first);
  const auto hi =
      std::upper_bound(sorted_dates.begin(), sorted_dates.end(), last);
  return static_cast<std::size_t>(hi - lo);
}

}  // namespace

std::array<double, 3> terror_features(const DailyCountSeries& counts,
                                      Date t) {
  if (counts.empty() || counts.start > t - 365 || counts.end() < t - 1)
    throw HistoryError("terror_features: need counts over " +
                       DateRange{t - 365, t - 1}.to_string());
  return {trailing_sum(counts, t, 15) / 15.0,
          trailing_sum(counts, t, 90) / 90.0,
          trailing_sum(counts, t, 365) / 365.0};
}

std::array<double, 4> climate_features(const ClimatePanel& panel, Date t) {
  if (panel.anomaly.empty() || panel.anomaly_start > t - kLongTermDays ||
      panel.anomaly_end() < t - 1)
    throw HistoryError("climate_features: need anomaly history over " +
                       DateRange{t - kLongTermDays, t - 1}.to_string());

  const auto window_sum = [&](int w) {
    const std::size_t first = (t - w) - panel.anomaly_start;
    double sum = 0.0;
    for (int i = 0; i < w; ++i) sum += panel.anomaly[first + i];
    return sum;
  };

  return {static_cast<double>(count_events_in(panel.flood_drought_dates,
                                              t - kShortTermDays, t - 1)),
          static_cast<double>(count_events_in(panel.flood_drought_dates,
                                              t - kLongTermDays, t - 1)),
          window_sum(kShortTermDays), window_sum(kLongTermDays)};
}

FeatureMatrix build_matrix(const DailyCountSeries& counts,
                           const ClimatePanel* panel, const DateRange& range,
                           FeatureMode mode) {
  if (mode == FeatureMode::synthetic)
    throw ArgumentError("build_matrix: mode must be terror_only or terror_climate");
  const bool with_climate = mode == FeatureMode::terror_climate;
  if (with_climate && panel == nullptr)
    throw ArgumentError("build_matrix: terror_climate mode requires a climate panel");

  FeatureMatrix m;
  m.mode = mode;
  m.start = range.first;
  m.cols = with_climate ? 7 : 3;
  m.column_names.assign(std::begin(kTerrorColumns), std::end(kTerrorColumns));
  if (with_climate)
    m.column_names.insert(m.column_names.end(), std::begin(kClimateColumns),
                          std::end(kClimateColumns));
  m.values.reserve(static_cast<std::size_t>(range.length()) * m.cols);

  for (Date t = range.first; t <= range.last; ++t) {
    const auto terror = terror_features(counts, t);
    m.values.insert(m.values.end(), terror.begin(), terror.end());
    if (with_climate) {
      const auto climate = climate_features(*panel, t);
      m.values.insert(m.values.end(), climate.begin(), climate.end());
    }
  }
  return m;
}

}  // namespace features
}  // namespace nfipp
