#pragma once

#include <stdexcept>
#include <string>

namespace nfipp {

// Invalid argument values (negative counts, bad dimensions, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two series that must share start date and length do not.
struct AlignmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Not enough look-back history before a requested date.
struct HistoryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A window or date falls outside the covered range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Country code or other key failed to resolve.
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value parsed fine but violates domain bounds.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unparseable input row; carries the 1-based line number.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(const std::string& msg, std::size_t line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Log-likelihood became non-finite during gradient ascent.
struct TrainingDiverged : std::runtime_error {
  int epoch;
  TrainingDiverged(const std::string& msg, int at_epoch)
      : std::runtime_error(msg + " (epoch " + std::to_string(at_epoch) + ")"),
        epoch(at_epoch) {}
};

// The random intensity-function generator kept producing rejects.
struct GeneratorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nfipp
