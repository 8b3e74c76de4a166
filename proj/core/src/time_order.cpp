#include "tvg/time_order.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "tvg/error.hpp"

namespace tvg {

std::string_view to_string(TimeOrdering ordering) {
  switch (ordering) {
    case TimeOrdering::Declared: return "declared";
    case TimeOrdering::Numeric: return "numeric";
    case TimeOrdering::Natural: return "natural";
  }
  return "?";
}

std::optional<TimeOrdering> parse_time_ordering(std::string_view text) {
  if (text == "declared") return TimeOrdering::Declared;
  if (text == "numeric") return TimeOrdering::Numeric;
  if (text == "natural") return TimeOrdering::Natural;
  return std::nullopt;
}

std::optional<double> parse_time_value(std::string_view label) {
  if (label.empty()) return std::nullopt;
  const char* first = label.data();
  const char* last = label.data() + label.size();
  if (*first == '+') ++first;  // from_chars rejects a leading '+'
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::string format_time_value(double value) {
  if (value == 0.0) value = 0.0;  // folds -0 into 0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Next run of either digits or non-digits starting at `pos`.
std::string_view next_run(std::string_view s, std::size_t pos) {
  std::size_t end = pos;
  const bool digits = is_digit(s[pos]);
  while (end < s.size() && is_digit(s[end]) == digits) ++end;
  return s.substr(pos, end - pos);
}

// -1, 0, 1 comparison of two digit runs by value, then by raw length so that
// "01" and "1" stay distinct.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view r) {
    std::size_t i = 0;
    while (i + 1 < r.size() && r[i] == '0') ++i;
    return r.substr(i);
  };
  std::string_view sa = strip(a);
  std::string_view sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  if (int c = sa.compare(sb); c != 0) return c < 0 ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    std::string_view ra = next_run(a, i);
    std::string_view rb = next_run(b, j);
    const bool da = is_digit(ra.front());
    const bool db = is_digit(rb.front());
    if (da != db) return da;  // digit runs sort before text runs
    int c = da ? compare_digit_runs(ra, rb) : ra.compare(rb);
    if (c != 0) return c < 0;
    i += ra.size();
    j += rb.size();
  }
  return (a.size() - i) < (b.size() - j);
}

bool is_strictly_ordered(std::span<const std::string> labels, TimeOrdering ordering) {
  switch (ordering) {
    case TimeOrdering::Declared: {
      std::vector<std::string> copy(labels.begin(), labels.end());
      std::sort(copy.begin(), copy.end());
      return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
    }
    case TimeOrdering::Numeric: {
      std::optional<double> prev;
      for (const auto& label : labels) {
        auto value = parse_time_value(label);
        if (!value || (prev && !(*prev < *value))) return false;
        prev = value;
      }
      return true;
    }
    case TimeOrdering::Natural:
      for (std::size_t k = 1; k < labels.size(); ++k) {
        if (!natural_less(labels[k - 1], labels[k])) return false;
      }
      return true;
  }
  return false;
}

TimeOrdering infer_ordering(std::span<const std::string> labels) {
  bool numeric = std::all_of(labels.begin(), labels.end(),
                             [](const std::string& l) { return parse_time_value(l).has_value(); });
  return numeric ? TimeOrdering::Numeric : TimeOrdering::Natural;
}

std::vector<std::string> sort_labels(std::vector<std::string> labels, TimeOrdering ordering) {
  switch (ordering) {
    case TimeOrdering::Declared:
      throw ModelError("declared time order cannot be derived by sorting");
    case TimeOrdering::Numeric: {
      std::vector<std::pair<double, std::string>> keyed;
      keyed.reserve(labels.size());
      for (auto& label : labels) {
        auto value = parse_time_value(label);
        if (!value) throw ModelError("time label '" + label + "' is not numeric");
        keyed.emplace_back(*value, std::move(label));
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 1; k < keyed.size(); ++k) {
        if (keyed[k - 1].first == keyed[k].first) {
          throw ModelError("time labels '" + keyed[k - 1].second + "' and '" + keyed[k].second +
                           "' denote the same instant");
        }
      }
      labels.clear();
      for (auto& [value, label] : keyed) labels.push_back(std::move(label));
      return labels;
    }
    case TimeOrdering::Natural: {
      std::sort(labels.begin(), labels.end(), natural_less);
      auto dup = std::adjacent_find(labels.begin(), labels.end());
      if (dup != labels.end()) throw ModelError("duplicate time label '" + *dup + "'");
      return labels;
    }
  }
  return labels;
}

}  // namespace tvg
