#include "hdtkg/time_span.hpp"

#include <algorithm>
#include <cstdio>

#include "hdtkg/errors.hpp"

namespace hdtkg {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Days since 1970-01-01 in the proleptic Gregorian calendar.
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
  y -= m <= 2 ? 1 : 0;
  const std::int64_t era = floor_div(y, 400);
  const std::int64_t yoe = y - era * 400;
  const std::int64_t doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = floor_div(z, 146097);
  const std::int64_t doe = z - era * 146097;
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const std::int64_t mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = yoe + era * 400 + (m <= 2 ? 1 : 0);
}

bool is_leap(std::int64_t y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(std::int64_t y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

enum class Precision { year, month, day, hour, minute, second };

struct DateExpr {
  CivilTime civil;
  Precision precision = Precision::year;
  bool uncertain = false;
  bool approximate = false;

  Instant start() const { return Instant::from_civil(civil); }

  Instant end() const {
    CivilTime next = civil;
    switch (precision) {
      case Precision::year:
        next = {civil.year + 1, 1, 1, 0, 0, 0};
        return Instant::from_civil(next);
      case Precision::month:
        next = civil.month == 12 ? CivilTime{civil.year + 1, 1, 1, 0, 0, 0}
                                 : CivilTime{civil.year, civil.month + 1, 1, 0, 0, 0};
        return Instant::from_civil(next);
      case Precision::day:
        return Instant(start().seconds_since_epoch() + kSecondsPerDay);
      case Precision::hour:
        return Instant(start().seconds_since_epoch() + 3600);
      case Precision::minute:
        return Instant(start().seconds_since_epoch() + 60);
      case Precision::second:
        return Instant(start().seconds_since_epoch() + 1);
    }
    return start();
  }
};

class DateParser {
 public:
  DateParser(std::string_view text, std::size_t base_offset)
      : text_(text), base_(base_offset) {}

  DateExpr parse() {
    DateExpr expr;
    expr.civil.year = parse_year();
    expr.precision = Precision::year;
    if (peek('-')) {
      ++pos_;
      expr.civil.month = parse_fixed(2, 1, 12, "month");
      expr.precision = Precision::month;
      if (peek('-')) {
        ++pos_;
        expr.civil.day = parse_fixed(2, 1, days_in_month(expr.civil.year, expr.civil.month), "day");
        expr.precision = Precision::day;
        if (peek('T')) {
          ++pos_;
          expr.civil.hour = parse_fixed(2, 0, 23, "hour");
          expr.precision = Precision::hour;
          if (peek(':')) {
            ++pos_;
            expr.civil.minute = parse_fixed(2, 0, 59, "minute");
            expr.precision = Precision::minute;
            if (peek(':')) {
              ++pos_;
              expr.civil.second = parse_fixed(2, 0, 59, "second");
              expr.precision = Precision::second;
            }
          }
          if (peek('Z')) ++pos_;
          if (peek('+') || (peek('-') && expr.precision >= Precision::hour)) {
            fail("time zone offsets are not supported");
          }
        }
      }
    }
    if (peek('?')) {
      expr.uncertain = true;
      ++pos_;
    } else if (peek('~')) {
      expr.approximate = true;
      ++pos_;
    } else if (peek('%')) {
      expr.uncertain = expr.approximate = true;
      ++pos_;
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return expr;
  }

 private:
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, base_ + std::min(pos_, text_.size() == 0 ? 0 : text_.size() - 1));
  }

  std::int64_t parse_year() {
    bool negative = false;
    bool signed_year = false;
    if (peek('+') || peek('-')) {
      negative = text_[pos_] == '-';
      signed_year = true;
      ++pos_;
    }
    std::size_t begin = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (pos_ - begin >= 12) fail("year out of range");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    std::size_t digits = pos_ - begin;
    if (digits < 4 || (!signed_year && digits != 4)) {
      pos_ = begin + std::min<std::size_t>(digits, 4);
      fail("expected a four-digit year");
    }
    return negative ? -value : value;
  }

  int parse_fixed(std::size_t width, int lo, int hi, const char* what) {
    int value = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
        fail(std::string("expected two-digit ") + what);
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (value < lo || value > hi) {
      pos_ -= width;
      fail(std::string(what) + " out of range");
    }
    return value;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string format_year(std::int64_t year) {
  char buf[32];
  if (year >= 0 && year <= 9999) {
    std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(year));
  } else {
    std::snprintf(buf, sizeof buf, "%c%04lld", year < 0 ? '-' : '+',
                  static_cast<long long>(year < 0 ? -year : year));
  }
  return buf;
}

std::string format_civil(const CivilTime& c, Precision precision) {
  std::string out = format_year(c.year);
  char buf[8];
  if (precision >= Precision::month) {
    std::snprintf(buf, sizeof buf, "-%02d", c.month);
    out += buf;
  }
  if (precision >= Precision::day) {
    std::snprintf(buf, sizeof buf, "-%02d", c.day);
    out += buf;
  }
  if (precision >= Precision::hour) {
    std::snprintf(buf, sizeof buf, "T%02d", c.hour);
    out += buf;
  }
  if (precision >= Precision::minute) {
    std::snprintf(buf, sizeof buf, ":%02d", c.minute);
    out += buf;
  }
  if (precision >= Precision::second) {
    std::snprintf(buf, sizeof buf, ":%02d", c.second);
    out += buf;
  }
  return out;
}

Precision coarsest_precision(const CivilTime& c) {
  if (c.second != 0) return Precision::second;
  if (c.minute != 0) return Precision::minute;
  if (c.hour != 0) return Precision::hour;
  if (c.day != 1) return Precision::day;
  if (c.month != 1) return Precision::month;
  return Precision::year;
}

// Writes the last unit covered by an exclusive end bound.
std::string format_exclusive_end(Instant end) {
  const CivilTime c = end.to_civil();
  const std::int64_t s = end.seconds_since_epoch();
  switch (coarsest_precision(c)) {
    case Precision::year:
      return format_civil({c.year - 1, 1, 1, 0, 0, 0}, Precision::year);
    case Precision::month:
      return format_civil({c.month == 1 ? c.year - 1 : c.year, c.month == 1 ? 12 : c.month - 1, 1,
                           0, 0, 0},
                          Precision::month);
    case Precision::day:
      return format_civil(Instant(s - kSecondsPerDay).to_civil(), Precision::day);
    case Precision::hour:
      return format_civil(Instant(s - 3600).to_civil(), Precision::hour);
    case Precision::minute:
      return format_civil(Instant(s - 60).to_civil(), Precision::minute);
    case Precision::second:
      return format_civil(Instant(s - 1).to_civil(), Precision::second);
  }
  return {};
}

std::string qualifier(const TimeSpan& span) {
  if (span.uncertain() && span.approximate()) return "%";
  if (span.uncertain()) return "?";
  if (span.approximate()) return "~";
  return {};
}

}  // namespace

Instant Instant::from_civil(const CivilTime& c) {
  return Instant(days_from_civil(c.year, c.month, c.day) * kSecondsPerDay + c.hour * 3600 +
                 c.minute * 60 + c.second);
}

CivilTime Instant::to_civil() const {
  CivilTime c;
  const std::int64_t days = floor_div(seconds_, kSecondsPerDay);
  std::int64_t rem = seconds_ - days * kSecondsPerDay;
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(rem / 3600);
  rem %= 3600;
  c.minute = static_cast<int>(rem / 60);
  c.second = static_cast<int>(rem % 60);
  return c;
}

std::string format_instant(Instant instant) {
  return format_civil(instant.to_civil(), Precision::second);
}

Instant parse_instant(std::string_view text) {
  DateExpr expr = DateParser(text, 0).parse();
  return expr.start();
}

TimeSpan::TimeSpan(std::optional<Instant> start, std::optional<Instant> end, bool uncertain,
                   bool approximate)
    : start_(start), end_(end), uncertain_(uncertain), approximate_(approximate) {
  if (start_ && end_ && !(*start_ < *end_)) {
    throw Error("time span start " + format_instant(*start_) + " is not before end " +
                format_instant(*end_));
  }
  if (is_always() && (uncertain_ || approximate_)) {
    throw Error("an unbounded time span cannot be qualified");
  }
}

bool TimeSpan::contains(Instant t) const noexcept {
  return (!start_ || *start_ <= t) && (!end_ || t < *end_);
}

TimeSpan parse_time_span(std::string_view text) {
  if (text == "always") return TimeSpan::always();
  if (text.empty()) throw ParseError("empty time span", 0);

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (text == "..") throw ParseError("open endpoint outside an interval", 0);
    DateExpr expr = DateParser(text, 0).parse();
    return TimeSpan(expr.start(), expr.end(), expr.uncertain, expr.approximate);
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("more than one '/' in interval", text.find('/', slash + 1));
  }

  std::string_view left = text.substr(0, slash);
  std::string_view right = text.substr(slash + 1);
  if (left.empty()) throw ParseError("missing interval start", 0);
  if (right.empty()) throw ParseError("missing interval end", slash);

  std::optional<Instant> start, end;
  bool uncertain = false, approximate = false;
  if (left != "..") {
    DateExpr expr = DateParser(left, 0).parse();
    start = expr.start();
    uncertain |= expr.uncertain;
    approximate |= expr.approximate;
  }
  if (right != "..") {
    DateExpr expr = DateParser(right, slash + 1).parse();
    end = expr.end();
    uncertain |= expr.uncertain;
    approximate |= expr.approximate;
  }
  if (start && end && !(*start < *end)) {
    throw ParseError("interval end precedes its start", slash);
  }
  return TimeSpan(start, end, uncertain, approximate);
}

std::string format_span_start(const TimeSpan& span) {
  if (!span.start()) return {};
  const CivilTime c = span.start()->to_civil();
  return format_civil(c, coarsest_precision(c)) + qualifier(span);
}

std::string format_span_end(const TimeSpan& span) {
  if (!span.end()) return {};
  return format_exclusive_end(*span.end()) + qualifier(span);
}

std::string format_time_span(const TimeSpan& span) {
  if (span.is_always()) return "always";
  const std::string q = qualifier(span);
  std::string start = "..";
  std::string end = "..";
  if (span.start()) {
    const CivilTime c = span.start()->to_civil();
    start = format_civil(c, coarsest_precision(c));
  }
  if (span.end()) end = format_exclusive_end(*span.end());
  if (span.start() && span.end() && start == end) return start + q;
  if (span.end()) return start + "/" + end + q;
  return start + q + "/" + end;
}

}  // namespace hdtkg
