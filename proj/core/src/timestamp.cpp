#include "trajaug/timestamp.hpp"

#include <fmt/format.h>

#include <charconv>
#include <chrono>

namespace trajaug {
namespace {

constexpr std::int64_t kNanosPerSecond = 1'000'000'000;

bool read_fixed(std::string_view text, std::size_t pos, std::size_t width, int& out) {
  if (pos + width > text.size()) return false;
  const char* first = text.data() + pos;
  const char* last = first + width;
  for (const char* p = first; p != last; ++p) {
    if (*p < '0' || *p > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::optional<Timestamp> Timestamp::parse(std::string_view text) {
  // YYYY-MM-DD HH:MM:SS
  if (text.size() < 19) return std::nullopt;
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  if (!read_fixed(text, 0, 4, year) || text[4] != '-' || !read_fixed(text, 5, 2, month) ||
      text[7] != '-' || !read_fixed(text, 8, 2, day) || (text[10] != ' ' && text[10] != 'T') ||
      !read_fixed(text, 11, 2, hour) || text[13] != ':' || !read_fixed(text, 14, 2, minute) ||
      text[16] != ':' || !read_fixed(text, 17, 2, second)) {
    return std::nullopt;
  }
  if (hour > 23 || minute > 59 || second > 59) return std::nullopt;

  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;

  std::int64_t fraction = 0;
  if (text.size() > 19) {
    if (text[19] != '.') return std::nullopt;
    const std::string_view digits = text.substr(20);
    if (digits.empty() || digits.size() > 9) return std::nullopt;
    std::int64_t scale = kNanosPerSecond;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      scale /= 10;
      fraction += (c - '0') * scale;
    }
  }

  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  const std::int64_t seconds =
      static_cast<std::int64_t>(days) * 86'400 + hour * 3'600 + minute * 60 + second;
  return Timestamp(seconds * kNanosPerSecond + fraction);
}

std::string Timestamp::to_string() const {
  std::int64_t seconds = nanos_ / kNanosPerSecond;
  std::int64_t fraction = nanos_ % kNanosPerSecond;
  if (fraction < 0) {
    fraction += kNanosPerSecond;
    --seconds;
  }
  std::int64_t days = seconds / 86'400;
  std::int64_t of_day = seconds % 86'400;
  if (of_day < 0) {
    of_day += 86'400;
    --days;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::sys_days{std::chrono::days{static_cast<int>(days)}}};

  std::string out = fmt::format("{:04}-{:02}-{:02} {:02}:{:02}:{:02}", static_cast<int>(ymd.year()),
                                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                                of_day / 3'600, (of_day / 60) % 60, of_day % 60);
  if (fraction != 0) {
    std::string digits = fmt::format("{:09}", fraction);
    digits.erase(digits.find_last_not_of('0') + 1);
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace trajaug
