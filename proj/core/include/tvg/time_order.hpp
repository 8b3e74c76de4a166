#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tvg {

// How a set of time labels is put into total order when the order is not
// given positionally.
//   Declared - the order is the order of an explicit label list
//   Numeric  - every label is a finite real number; ascending value
//   Natural  - digit runs compare by value, other runs lexicographically
//              ("t2" < "t10")
enum class TimeOrdering { Declared, Numeric, Natural };

std::string_view to_string(TimeOrdering ordering);
std::optional<TimeOrdering> parse_time_ordering(std::string_view text);

// Parses a complete token as a finite double.
std::optional<double> parse_time_value(std::string_view label);

// Shortest decimal text that round-trips to `value` ("1", "7.5", "1e+20").
std::string format_time_value(double value);

// Strict weak order on labels; distinct labels never compare equivalent.
bool natural_less(std::string_view a, std::string_view b);

// True when `labels` is strictly increasing under `ordering`. Declared is
// satisfied by any list without duplicates.
bool is_strictly_ordered(std::span<const std::string> labels, TimeOrdering ordering);

// Numeric if every label parses as a number, Natural otherwise.
TimeOrdering infer_ordering(std::span<const std::string> labels);

// Sorts distinct labels under Numeric or Natural. Throws ModelError when a
// label is not numeric under Numeric, when two labels tie (e.g. "1" and
// "1.0"), or when called with Declared.
std::vector<std::string> sort_labels(std::vector<std::string> labels, TimeOrdering ordering);

}  // namespace tvg
