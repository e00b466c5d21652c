#include "kmdecomp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kmdecomp/decomposition.hpp"
#include "kmdecomp/estimator.hpp"
#include "kmdecomp/population.hpp"
#include "kmdecomp/simulation.hpp"
#include "kmdecomp/step_function.hpp"

namespace kmdecomp {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All numeric output carries 12 significant digits, in CSV and JSON alike.
std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

struct CurveRecord {
  std::string series;
  double tau = 0.0;
  double value = 0.0;
};

void append_curve(std::vector<CurveRecord>& records, const std::string& series,
                  const StepFunction& curve, const std::vector<double>& taus) {
  for (double tau : taus) records.push_back({series, tau, curve.evaluate(tau)});
}

std::string records_csv(const std::vector<CurveRecord>& records) {
  std::string out = "series,tau,value\n";
  for (const CurveRecord& r : records) {
    out += r.series;
    out += ',';
    out += fmt12(r.tau);
    out += ',';
    out += fmt12(r.value);
    out += '\n';
  }
  return out;
}

nlohmann::json records_json(const std::vector<CurveRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CurveRecord& r : records) {
    arr.push_back({{"series", r.series}, {"tau", round12(r.tau)}, {"value", round12(r.value)}});
  }
  return arr;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << body;
  if (!out) throw IoError("failed writing output file: " + path);
}

Population load_population(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  return build_population(ingest_csv(in));
}

Population load_nonempty_population(const std::string& path) {
  Population pop = load_population(path);
  if (pop.empty()) throw std::domain_error("empty population");
  return pop;
}

// "start:stop:step" -> inclusive uniform grid.
std::vector<double> parse_uniform_grid(const std::string& spec) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char trailing = '\0';
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trailing) != 3) {
    throw std::domain_error("grid spec must be start:stop:step");
  }
  if (!(step > 0.0) || stop < start || start < 0.0) {
    throw std::domain_error("grid spec requires 0 <= start <= stop and step > 0");
  }
  std::vector<double> taus;
  const auto count = static_cast<std::size_t>((stop - start) / step + 1e-9) + 1;
  taus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) taus.push_back(start + static_cast<double>(i) * step);
  return taus;
}

std::vector<double> default_grid(std::span<const StepFunction> curves, const Population& pop) {
  std::vector<double> extra;
  if (!pop.empty()) extra.push_back(pop.unit(pop.size()).age);
  return merged_grid(curves, extra);
}

std::vector<double> choose_grid(const std::string& grid_spec,
                                std::span<const StepFunction> curves,
                                const Population& pop) {
  if (grid_spec.empty()) return default_grid(curves, pop);
  return parse_uniform_grid(grid_spec);
}

// ---------------------------------------------------------------------------
// SVG rendering. A convenience view of the step curves, no exactness contract.
// ---------------------------------------------------------------------------

constexpr double kSvgW = 720.0, kSvgH = 420.0;
constexpr double kMarginL = 50.0, kMarginR = 16.0, kMarginT = 16.0, kMarginB = 40.0;
constexpr const char* kFailedColor = "#c0504d";
constexpr const char* kCensoredColor = "#4f81bd";

struct SvgMapper {
  double x_max = 1.0;
  double x(double tau) const {
    return kMarginL + (tau / x_max) * (kSvgW - kMarginL - kMarginR);
  }
  double y(double v) const {
    return kSvgH - kMarginB - v * (kSvgH - kMarginT - kMarginB);
  }
};

// Staircase corner points of sampled values over taus.
std::vector<std::pair<double, double>> staircase(const std::vector<double>& taus,
                                                 const std::vector<double>& vals,
                                                 const SvgMapper& map) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    pts.emplace_back(map.x(taus[i]), map.y(vals[i]));
    if (i + 1 < taus.size()) pts.emplace_back(map.x(taus[i + 1]), map.y(vals[i]));
  }
  return pts;
}

std::string svg_points(const std::vector<std::pair<double, double>>& pts) {
  std::string out;
  for (const auto& [x, y] : pts) {
    out += fmt12(std::round(x * 100.0) / 100.0);
    out += ',';
    out += fmt12(std::round(y * 100.0) / 100.0);
    out += ' ';
  }
  if (!out.empty()) out.pop_back();
  return out;
}

void svg_band(std::string& svg, const std::vector<double>& taus,
              const std::vector<double>& lower, const std::vector<double>& upper,
              const SvgMapper& map, const char* color) {
  std::vector<std::pair<double, double>> pts = staircase(taus, upper, map);
  std::vector<std::pair<double, double>> back = staircase(taus, lower, map);
  std::reverse(back.begin(), back.end());
  pts.insert(pts.end(), back.begin(), back.end());
  svg += "<polygon points=\"" + svg_points(pts) + "\" fill=\"" + color +
         "\" fill-opacity=\"0.55\" stroke=\"" + color + "\" stroke-width=\"0.5\"/>\n";
}

void svg_line(std::string& svg, const std::vector<double>& taus,
              const std::vector<double>& vals, const SvgMapper& map, const char* color) {
  svg += "<polyline points=\"" + svg_points(staircase(taus, vals, map)) +
         "\" fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"/>\n";
}

std::vector<double> sample(const StepFunction& f, const std::vector<double>& taus) {
  std::vector<double> vals;
  vals.reserve(taus.size());
  for (double tau : taus) vals.push_back(f.evaluate(tau));
  return vals;
}

std::string render_svg(const Population& pop, const std::string& style,
                       const std::vector<double>& taus) {
  SvgMapper map;
  map.x_max = std::max(taus.empty() ? 1.0 : taus.back(), 1e-9);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt12(kSvgW) +
         "\" height=\"" + fmt12(kSvgH) + "\" viewBox=\"0 0 " + fmt12(kSvgW) + " " +
         fmt12(kSvgH) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const StepFunction km = km_product(pop);
  if (style == "km") {
    svg_line(svg, taus, sample(km, taus), map, "#333333");
  } else {
    const UnitDecomposition d = decompose(pop);
    if (style == "units") {
      for (std::size_t j = 1; j <= pop.size(); ++j) {
        svg_line(svg, taus, sample(d.unit_curves[j - 1], taus), map,
                 pop.unit(j).event ? kFailedColor : kCensoredColor);
      }
    } else if (style == "split") {
      const AttributionSplit split = split_empirical_predicted(d);
      const std::vector<double> empirical = sample(split.empirical_part, taus);
      std::vector<double> top = sample(split.predicted_part, taus);
      for (std::size_t i = 0; i < top.size(); ++i) top[i] += empirical[i];
      svg_band(svg, taus, std::vector<double>(taus.size(), 0.0), empirical, map, kFailedColor);
      svg_band(svg, taus, empirical, top, map, kCensoredColor);
    } else {  // stacked
      const std::vector<StackedRow> rows = stacked_contributions(d, taus);
      std::vector<double> lower(taus.size(), 0.0);
      for (std::size_t m = 1; m <= pop.size(); ++m) {
        std::vector<double> upper(taus.size());
        for (std::size_t i = 0; i < taus.size(); ++i) upper[i] = rows[i].layers[m - 1];
        svg_band(svg, taus, lower, upper, map,
                 pop.unit(m).event ? kFailedColor : kCensoredColor);
        lower = std::move(upper);
      }
      svg_line(svg, taus, sample(km, taus), map, "#333333");
    }
  }

  // Axes with a handful of ticks.
  svg += "<line x1=\"" + fmt12(map.x(0)) + "\" y1=\"" + fmt12(map.y(0)) + "\" x2=\"" +
         fmt12(map.x(map.x_max)) + "\" y2=\"" + fmt12(map.y(0)) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt12(map.x(0)) + "\" y1=\"" + fmt12(map.y(0)) + "\" x2=\"" +
         fmt12(map.x(0)) + "\" y2=\"" + fmt12(map.y(1)) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    svg += "<text x=\"" + fmt12(map.x(0) - 6) + "\" y=\"" + fmt12(map.y(v) + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt12(v) + "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double tau = map.x_max * i / 4.0;
    svg += "<text x=\"" + fmt12(map.x(tau)) + "\" y=\"" + fmt12(map.y(0) + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + fmt12(std::round(tau * 100) / 100) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

bool ends_with_svg(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".svg") == 0;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_estimate(const std::string& input, const std::string& output,
                 const std::string& format) {
  const Population pop = load_nonempty_population(input);
  const StepFunction km = km_product(pop);

  std::vector<CurveRecord> records;
  records.push_back({"km", 0.0, km.base_value()});
  for (std::size_t i = 0; i < km.breakpoints().size(); ++i) {
    records.push_back({"km", km.breakpoints()[i], km.post_values()[i]});
  }

  if (format == "json") {
    write_text(output, records_json(records).dump(2) + "\n");
  } else {
    write_text(output, records_csv(records));
  }
  return kExitOk;
}

int cmd_decompose(const std::string& input, const std::string& output,
                  const std::string& format, const std::string& grid_spec) {
  const Population pop = load_nonempty_population(input);
  const std::size_t n = pop.size();
  const UnitDecomposition d = decompose(pop);
  const StepFunction km = km_product(pop);
  const StepFunction agg = aggregate(d);
  const AttributionSplit split = split_empirical_predicted(d);

  std::vector<StepFunction> involved{km, agg, split.empirical_part, split.predicted_part};
  involved.insert(involved.end(), d.unit_curves.begin(), d.unit_curves.end());
  const std::vector<double> taus = choose_grid(grid_spec, involved, pop);

  double sum_check = 0.0;
  for (double tau : taus) {
    sum_check = std::max(sum_check, std::fabs(agg.evaluate(tau) - km.evaluate(tau)));
  }

  std::vector<CurveRecord> records;
  append_curve(records, "km", km, taus);
  for (std::size_t j = 1; j <= n; ++j) {
    append_curve(records, "unit_" + std::to_string(j), d.unit_curves[j - 1], taus);
  }
  const std::vector<StackedRow> rows = stacked_contributions(d, taus);
  for (std::size_t m = 1; m <= n; ++m) {
    const std::string series = "layer_" + std::to_string(m);
    for (const StackedRow& row : rows) records.push_back({series, row.tau, row.layers[m - 1]});
  }
  append_curve(records, "empirical_part", split.empirical_part, taus);
  append_curve(records, "predicted_part", split.predicted_part, taus);

  if (format == "json") {
    nlohmann::json doc;
    doc["sum_check"] = round12(sum_check);
    doc["records"] = records_json(records);
    write_text(output, doc.dump(2) + "\n");
  } else {
    records.push_back({"sum_check", 0.0, sum_check});
    write_text(output, records_csv(records));
  }
  return kExitOk;
}

int cmd_simulate(std::size_t n, double failure_shape, double failure_scale,
                 double censor_shape, double censor_scale, std::uint64_t seed,
                 const std::string& output) {
  SimConfig cfg;
  cfg.n = n;
  cfg.failure = {failure_shape, failure_scale};
  cfg.censoring = {censor_shape, censor_scale};
  cfg.seed = seed;
  const SimulationResult sim = simulate_population(cfg);

  std::string csv = "time,event\n";
  std::size_t failed = 0;
  for (const ObservedUnit& u : sim.observed) {
    csv += fmt12(u.age);
    csv += u.event ? ",1\n" : ",0\n";
    if (u.event) ++failed;
  }
  write_text(output, csv);

  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  summary << "units=" << sim.observed.size() << " failed=" << failed
          << " censored=" << (sim.observed.size() - failed) << "\n";
  return kExitOk;
}

StepFunction shifted(const StepFunction& f, double delta) {
  std::vector<double> vals = f.post_values();
  for (double& v : vals) v += delta;
  return StepFunction::from_steps(f.breakpoints(), std::move(vals), f.base_value() + delta);
}

// Thin convergence loop around the single-step map: start from the purely
// empirical family (failed units at their steps, censored units at zero) and
// iterate until successive families agree to sup tolerance. Diagnostic only;
// convergence from arbitrary starting families has no supporting theory here.
void iterate_fixed_point(const Population& pop, const UnitDecomposition& d) {
  constexpr std::size_t kMaxIterations = 1000;
  constexpr double kIterTol = 1e-10;

  std::vector<StepFunction> family;
  family.reserve(pop.size());
  for (std::size_t j = 1; j <= pop.size(); ++j) {
    family.push_back(pop.unit(j).event ? unit_step(pop.unit(j).age) : StepFunction(0.0));
  }

  std::size_t iterations = 0;
  double delta = 0.0;
  while (iterations < kMaxIterations) {
    const std::vector<StepFunction> next = fixed_point_step(family, pop);
    ++iterations;
    delta = 0.0;
    for (std::size_t j = 0; j < next.size(); ++j) {
      delta = std::max(delta, max_abs_difference(next[j], family[j]));
    }
    family = next;
    if (delta <= kIterTol) break;
  }

  double to_decomposition = 0.0;
  for (std::size_t j = 0; j < family.size(); ++j) {
    to_decomposition =
        std::max(to_decomposition, max_abs_difference(family[j], d.unit_curves[j]));
  }
  std::printf("fixed_point_iteration %s after %zu step(s), last delta %s, "
              "distance to decomposition %s\n",
              delta <= kIterTol ? "converged" : "stopped", iterations,
              fmt12(delta).c_str(), fmt12(to_decomposition).c_str());
}

int cmd_verify(const std::string& input, bool corrupt, bool iterate) {
  const Population pop = load_nonempty_population(input);

  double base_tol = 1e-12;
  if (const char* env = std::getenv("KMDECOMP_TOL")) {
    char* end = nullptr;
    base_tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(base_tol > 0.0)) {
      throw std::domain_error("KMDECOMP_TOL must be a positive number");
    }
  }
  const double fixed_point_tol = base_tol * 100.0;  // 1e-10 at the default

  const StepFunction km = km_product(pop);
  UnitDecomposition d = decompose(pop);
  if (corrupt) {
    // Negative control: push one unit curve off by 1e-6 so the identity
    // checks must trip.
    d.unit_curves[0] = shifted(d.unit_curves[0], 1e-6);
  }

  const std::vector<double> extra{pop.unit(pop.size()).age};

  const double dev_sum = max_abs_difference(aggregate(d), km, extra);
  const double dev_red = max_abs_difference(redistribute_to_right(pop).curve, km, extra);

  double dev_consistency = 0.0;
  std::size_t censored = 0;
  for (std::size_t j = 1; j <= pop.size(); ++j) {
    if (!pop.unit(j).event) {
      ++censored;
      dev_consistency = std::max(dev_consistency, consistency_deviation(pop, j));
    }
  }

  const std::vector<StepFunction> next = fixed_point_step(d.unit_curves, pop);
  double dev_fixed_point = 0.0;
  for (std::size_t j = 0; j < next.size(); ++j) {
    dev_fixed_point = std::max(dev_fixed_point,
                               max_abs_difference(next[j], d.unit_curves[j], extra));
  }

  struct Check {
    const char* name;
    double deviation;
    double tol;
  };
  const Check checks[] = {
      {"sum_vs_product", dev_sum, base_tol},
      {"redistribution", dev_red, base_tol},
      {"consistency", dev_consistency, base_tol},
      {"fixed_point", dev_fixed_point, fixed_point_tol},
  };

  std::string failing;
  for (const Check& c : checks) {
    const bool ok = c.deviation <= c.tol;
    std::printf("%-14s max deviation %-12s (tol %s) [%s]", c.name,
                fmt12(c.deviation).c_str(), fmt12(c.tol).c_str(), ok ? "ok" : "FAIL");
    if (std::string(c.name) == "consistency") {
      std::printf("  censored units: %zu", censored);
    }
    std::printf("\n");
    if (!ok) {
      if (!failing.empty()) failing += ", ";
      failing += c.name;
    }
  }
  if (iterate) iterate_fixed_point(pop, d);
  if (!failing.empty()) {
    std::cerr << "verification failed: " << failing << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_plotdata(const std::string& input, const std::string& output,
                 const std::string& style, const std::string& format,
                 const std::string& grid_spec) {
  const Population pop = load_nonempty_population(input);
  const StepFunction km = km_product(pop);

  std::vector<StepFunction> involved{km};
  UnitDecomposition d;
  AttributionSplit split;
  if (style != "km") {
    d = decompose(pop);
    split = split_empirical_predicted(d);
    involved.insert(involved.end(), d.unit_curves.begin(), d.unit_curves.end());
    involved.push_back(split.empirical_part);
    involved.push_back(split.predicted_part);
  }
  const std::vector<double> taus = choose_grid(grid_spec, involved, pop);

  if (ends_with_svg(output)) {
    write_text(output, render_svg(pop, style, taus));
    return kExitOk;
  }

  std::vector<CurveRecord> records;
  if (style == "km") {
    append_curve(records, "km", km, taus);
  } else if (style == "units") {
    for (std::size_t j = 1; j <= pop.size(); ++j) {
      append_curve(records, "unit_" + std::to_string(j), d.unit_curves[j - 1], taus);
    }
  } else if (style == "split") {
    append_curve(records, "empirical_part", split.empirical_part, taus);
    append_curve(records, "predicted_part", split.predicted_part, taus);
  } else {  // stacked
    const std::vector<StackedRow> rows = stacked_contributions(d, taus);
    for (std::size_t m = 1; m <= pop.size(); ++m) {
      const std::string series = "layer_" + std::to_string(m);
      for (const StackedRow& row : rows) records.push_back({series, row.tau, row.layers[m - 1]});
    }
  }

  if (format == "json") {
    write_text(output, records_json(records).dump(2) + "\n");
  } else {
    write_text(output, records_csv(records));
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Kaplan-Meier product-limit estimation with unit-level decomposition"};
  app.require_subcommand(1);

  struct {
    std::string input, output, format = "csv";
  } est;
  CLI::App* sub_est = app.add_subcommand("estimate", "Kaplan-Meier curve of a time,event CSV");
  sub_est->add_option("--input", est.input, "input CSV with header time,event")->required();
  sub_est->add_option("--output", est.output, "output path (default: stdout)");
  sub_est->add_option("--format", est.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  struct {
    std::string input, output, format = "csv", grid;
  } dec;
  CLI::App* sub_dec = app.add_subcommand(
      "decompose", "per-unit curves, stacked layers and the empirical/predicted split");
  sub_dec->add_option("--input", dec.input, "input CSV")->required();
  sub_dec->add_option("--output", dec.output, "output path (default: stdout)");
  sub_dec->add_option("--format", dec.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub_dec->add_option("--grid", dec.grid,
                      "uniform tau grid start:stop:step (default: breakpoints and midpoints)");

  struct {
    std::size_t n = 100;
    double failure_shape = 1.4, failure_scale = 1.0;
    double censor_shape = 1.0, censor_scale = 1.5;
    std::uint64_t seed = 1;
    std::string output;
  } sim;
  CLI::App* sub_sim =
      app.add_subcommand("simulate", "draw a Weibull population with Weibull censoring");
  sub_sim->add_option("--n", sim.n, "number of units");
  sub_sim->add_option("--failure-shape", sim.failure_shape, "failure Weibull shape");
  sub_sim->add_option("--failure-scale", sim.failure_scale, "failure Weibull scale");
  sub_sim->add_option("--censor-shape", sim.censor_shape, "censoring Weibull shape");
  sub_sim->add_option("--censor-scale", sim.censor_scale, "censoring Weibull scale");
  sub_sim->add_option("--seed", sim.seed, "generator seed");
  sub_sim->add_option("--output", sim.output, "output CSV path (default: stdout)");

  struct {
    std::string input;
    bool corrupt = false;
    bool iterate = false;
  } ver;
  CLI::App* sub_ver = app.add_subcommand(
      "verify", "cross-check the estimator against its sum, redistribution, "
                "consistency and fixed-point identities");
  sub_ver->add_option("--input", ver.input, "input CSV")->required();
  sub_ver->add_flag("--corrupt", ver.corrupt,
                    "self-test: inject a corrupted curve so the checks must fail");
  sub_ver->add_flag("--iterate", ver.iterate,
                    "also run the fixed-point iteration to convergence (diagnostic)");

  struct {
    std::string input, output, style = "km", format = "csv", grid;
  } plot;
  CLI::App* sub_plot =
      app.add_subcommand("plotdata", "long-format plot data or a static SVG rendering");
  sub_plot->add_option("--input", plot.input, "input CSV")->required();
  sub_plot->add_option("--output", plot.output,
                       "output path; *.svg renders an image (default: stdout records)");
  sub_plot->add_option("--style", plot.style, "km, stacked, split or units")
      ->check(CLI::IsMember({"km", "stacked", "split", "units"}));
  sub_plot->add_option("--format", plot.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub_plot->add_option("--grid", plot.grid, "uniform tau grid start:stop:step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (sub_est->parsed()) return cmd_estimate(est.input, est.output, est.format);
    if (sub_dec->parsed()) return cmd_decompose(dec.input, dec.output, dec.format, dec.grid);
    if (sub_sim->parsed()) {
      return cmd_simulate(sim.n, sim.failure_shape, sim.failure_scale, sim.censor_shape,
                          sim.censor_scale, sim.seed, sim.output);
    }
    if (sub_ver->parsed()) return cmd_verify(ver.input, ver.corrupt, ver.iterate);
    if (sub_plot->parsed()) {
      return cmd_plotdata(plot.input, plot.output, plot.style, plot.format, plot.grid);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("kmdecomp");
  full.insert(full.end(), args.begin(), args.end());

  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace kmdecomp
