#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hdtkg {

struct CivilTime {
  std::int64_t year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

/// A point on the proleptic Gregorian UTC time line, with one-second
/// resolution. Year 0 is 1 BCE (astronomical numbering, as ISO 8601 uses).
class Instant {
 public:
  constexpr Instant() = default;
  constexpr explicit Instant(std::int64_t seconds_since_epoch) : seconds_(seconds_since_epoch) {}

  static Instant from_civil(const CivilTime& civil);
  CivilTime to_civil() const;

  constexpr std::int64_t seconds_since_epoch() const noexcept { return seconds_; }

  friend constexpr bool operator==(Instant, Instant) = default;
  friend constexpr auto operator<=>(Instant, Instant) = default;

 private:
  std::int64_t seconds_ = 0;
};

// "YYYY-MM-DDTHH:MM:SS"; years outside 0000..9999 carry an explicit sign.
std::string format_instant(Instant instant);

// Start of the interval covered by an ISO 8601 date or date-time of any
// supported precision ("1800", "1800-01", "1800-01-01T12:00"). Throws ParseError.
Instant parse_instant(std::string_view text);

/// Validity interval of a statement. Half-open: [start, end). A missing
/// start or end is the corresponding unbounded sentinel.
class TimeSpan {
 public:
  TimeSpan() = default;
  // Throws Error unless start < end when both are bounded.
  TimeSpan(std::optional<Instant> start, std::optional<Instant> end, bool uncertain = false,
           bool approximate = false);

  static TimeSpan always() { return TimeSpan(); }

  const std::optional<Instant>& start() const noexcept { return start_; }
  const std::optional<Instant>& end() const noexcept { return end_; }
  bool uncertain() const noexcept { return uncertain_; }
  bool approximate() const noexcept { return approximate_; }

  bool is_always() const noexcept { return !start_ && !end_; }
  bool contains(Instant t) const noexcept;

  friend bool operator==(const TimeSpan&, const TimeSpan&) = default;
  friend auto operator<=>(const TimeSpan&, const TimeSpan&) = default;

 private:
  std::optional<Instant> start_;
  std::optional<Instant> end_;
  bool uncertain_ = false;
  bool approximate_ = false;
};

/// Accepted forms:
///   always                       -> unbounded on both sides
///   YYYY | YYYY-MM | YYYY-MM-DD  -> the covering interval of that precision
///   YYYY-MM-DDThh[:mm[:ss]][Z]   -> likewise, down to one second
///   A/B                          -> [start(A), end(B)); `..` leaves a side open
/// Each date may carry an EDTF qualifier `?` (uncertain), `~` (approximate) or
/// `%` (both); qualifiers are recorded as flags and do not move the bounds.
/// Throws ParseError with the offending byte offset.
TimeSpan parse_time_span(std::string_view text);

// Canonical text form; parse_time_span(format_time_span(s)) == s.
std::string format_time_span(const TimeSpan& span);

// The two halves of the canonical form, as written on the wire by the
// validity annotation: the start at its coarsest exact precision, and the
// last unit covered by the end. Both carry the span's qualifier, if any.
// Empty string for an unbounded side.
std::string format_span_start(const TimeSpan& span);
std::string format_span_end(const TimeSpan& span);

}  // namespace hdtkg
