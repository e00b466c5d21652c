#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmdecomp {

// One subject's observation: the age at which it was last seen and whether
// that age is an observed failure (event = true) or a right-censoring
// (event = false). A censored age is only a lower bound on the true
// failure age.
struct ObservedUnit {
  double age = 0.0;
  bool event = false;

  friend bool operator==(const ObservedUnit&, const ObservedUnit&) = default;
};

// Thrown by ingest_csv on malformed input. line() is 1-based and counts the
// header line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An ordered population of right-censored observations.
//
// Units are sorted by age. At equal ages failures precede censorings and
// input order breaks the remaining ties, so the effective order is strict
// even when stored ages collide; stored ages are never perturbed. Units are
// indexed 1..n, as is conventional for survival data.
class Population {
 public:
  Population() = default;

  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }

  // 1-based access in effective order. Throws std::out_of_range.
  const ObservedUnit& unit(std::size_t j) const;

  // Units in effective order.
  const std::vector<ObservedUnit>& units() const { return units_; }

  friend bool operator==(const Population&, const Population&) = default;

  friend Population build_population(std::vector<ObservedUnit> units);
  friend Population tail(const Population& pop, std::size_t j);

 private:
  std::vector<ObservedUnit> units_;
};

// Parses `time,event` CSV (UTF-8, LF or CRLF, optional BOM). The event
// column must be the literal 0 or 1; nothing is coerced. Rows are returned
// in file order. Malformed rows raise ParseError with the offending line;
// negative ages raise std::domain_error.
std::vector<ObservedUnit> ingest_csv(std::istream& text);

// Sorts and tie-resolves a unit list into a Population. Ages must be finite
// and non-negative; age 0 is only allowed for censored units.
Population build_population(std::vector<ObservedUnit> units);

// Population holding units j+1..n of pop, in order; tail(pop, n) is empty.
// j is 1-based.
Population tail(const Population& pop, std::size_t j);

}  // namespace kmdecomp
