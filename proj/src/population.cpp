#include "kmdecomp/population.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>

namespace kmdecomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_time(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError(line_no, "invalid time value \"" + std::string(field) + "\"");
  }
  return value;
}

void check_unit(double age, bool event) {
  if (!std::isfinite(age)) throw std::domain_error("age must be finite");
  if (age < 0.0) throw std::domain_error("age must be non-negative");
  if (age == 0.0 && event) {
    throw std::domain_error("age 0 is only allowed for censored units");
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

const ObservedUnit& Population::unit(std::size_t j) const {
  if (j < 1 || j > units_.size()) {
    throw std::out_of_range("Population::unit: index " + std::to_string(j) +
                            " outside 1.." + std::to_string(units_.size()));
  }
  return units_[j - 1];
}

std::vector<ObservedUnit> ingest_csv(std::istream& text) {
  std::vector<ObservedUnit> units;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;

  while (std::getline(text, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;

    if (!saw_header) {
      if (view != "time,event") {
        throw ParseError(line_no, "expected header \"time,event\"");
      }
      saw_header = true;
      continue;
    }

    const auto comma = view.find(',');
    if (comma == std::string_view::npos ||
        view.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected exactly two comma-separated fields");
    }
    const std::string_view time_field = trim(view.substr(0, comma));
    const std::string_view event_field = trim(view.substr(comma + 1));

    const double age = parse_time(time_field, line_no);

    bool event = false;
    if (event_field == "1") {
      event = true;
    } else if (event_field == "0") {
      event = false;
    } else {
      throw ParseError(line_no, "event flag must be the literal 0 or 1, got \"" +
                                    std::string(event_field) + "\"");
    }

    check_unit(age, event);
    units.push_back({age, event});
  }

  if (!saw_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"time,event\"");
  }
  return units;
}

Population build_population(std::vector<ObservedUnit> units) {
  for (const ObservedUnit& u : units) check_unit(u.age, u.event);

  // Ties resolve by ordering only, never by perturbing stored ages: at equal
  // ages a failure sorts before a censoring, and the stable sort keeps input
  // order among fully tied units.
  std::stable_sort(units.begin(), units.end(),
                   [](const ObservedUnit& a, const ObservedUnit& b) {
                     if (a.age != b.age) return a.age < b.age;
                     return a.event && !b.event;
                   });

  Population pop;
  pop.units_ = std::move(units);
  return pop;
}

Population tail(const Population& pop, std::size_t j) {
  if (j < 1 || j > pop.size()) {
    throw std::out_of_range("tail: index " + std::to_string(j) + " outside 1.." +
                            std::to_string(pop.size()));
  }
  Population out;
  out.units_.assign(pop.units_.begin() + static_cast<std::ptrdiff_t>(j),
                    pop.units_.end());
  return out;
}

}  // namespace kmdecomp
