#include "incidence/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace incidence {

void ExperimentConfig::validate() const {
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sweep sizes must increase strictly");
  }
  if (!(params.eps >= 0)) throw std::invalid_argument("eps must be non-negative");
  if (kkk_budget == 0 || pair_cap == 0) throw std::invalid_argument("budgets must be positive");
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

namespace {

SweepRow sweep_point(const ExperimentConfig& config, std::size_t size) {
  SweepRow row;
  row.size = size;
  const auto start = std::chrono::steady_clock::now();
  try {
    GeneratorSpec spec = config.generator;
    spec.seed = config.seed;
    if (spec.name == "st_grid") {
      spec.N = size;
    } else {
      spec.n = size;
    }
    const BipartiteInstance inst = generate(spec);
    row.m = inst.m();
    row.n = inst.n();
    EdgeOptions opts;
    opts.pair_cap = config.pair_cap;
    opts.collect_edges = false;
    row.edges = edges(inst, opts).count;
    for (auto kind : config.bounds) {
      row.bound_values.push_back(
          bounds::evaluate(kind, static_cast<double>(row.m), static_cast<double>(row.n), config.params));
    }
    if (config.check_hypothesis) {
      row.hypothesis = is_kkk_free(inst, config.k, config.kkk_budget).free;
      // Unit distances in R^4 additionally need no two orthogonal circles with k points each.
      if (spec.name.starts_with("unit_r4") && row.hypothesis != Outcome::no) {
        const Outcome circles = orthogonal_circle_condition(inst.P, config.k, config.kkk_budget);
        if (circles != Outcome::yes) row.hypothesis = circles;
      }
    } else {
      row.hypothesis = Outcome::undecided;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& config) {
  config.validate();
  SweepResult result;
  result.config = config;

  // Sizes are independent; workers pull indices and the rows are assembled in order.
  std::vector<SweepRow> rows(config.sizes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = sweep_point(config, config.sizes[i]);
  };
  const std::size_t threads =
      std::min<std::size_t>(rows.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (auto& row : rows) {
    const bool failed = !row.error.empty();
    result.rows.push_back(std::move(row));
    if (failed) {
      result.partial = true;
      break;
    }
  }
  std::vector<std::pair<double, double>> points;
  for (const auto& row : result.rows) {
    if (row.error.empty() && row.edges > 0) points.emplace_back(row.m, static_cast<double>(row.edges));
  }
  if (points.size() >= 4) result.fit = fit_exponent(points);
  return result;
}

Fit fit_exponent(const std::vector<std::pair<double, double>>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("fit needs at least two rows");
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [x, y] = rows[i];
    if (!(x > 0) || !(y > 0)) {
      throw std::invalid_argument("fit row " + std::to_string(i) + " has a non-positive entry (" + format_double(x) +
                                  ", " + format_double(y) + ")");
    }
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit needs at least two distinct sizes");
  Fit fit;
  fit.points = xs.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (xs.size() > 2) {
    double ssr = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) ssr += std::pow(ys[i] - fit.intercept - fit.slope * xs[i], 2);
    fit.stderr_slope = std::sqrt(ssr / (n - 2) / sxx);
  }
  return fit;
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::bound_failed: return "bound failed";
    case Verdict::hypothesis_failed: return "hypothesis failed";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

VerifyReport verify_bounds(const SweepResult& result, double constant) {
  if (!(constant > 0)) throw std::invalid_argument("constant must be positive");
  VerifyReport report;
  report.constant = constant;
  for (std::size_t b = 0; b < result.config.bounds.size(); ++b) {
    BoundReport br{result.config.bounds[b], {}, 0, 0};
    for (const auto& row : result.rows) {
      Verdict v = Verdict::skipped;
      if (row.error.empty() && b < row.bound_values.size()) {
        if (row.hypothesis == Outcome::no) {
          v = Verdict::hypothesis_failed;
        } else if (row.hypothesis == Outcome::yes) {
          const double e = static_cast<double>(row.edges);
          const double bound = row.bound_values[b];
          br.smallest_constant = std::max(br.smallest_constant, bound > 0 ? e / bound : (e > 0 ? INFINITY : 0));
          v = e <= constant * bound ? Verdict::pass : Verdict::bound_failed;
        }
      }
      if (v == Verdict::bound_failed) ++br.failures;
      br.verdicts.push_back(v);
    }
    report.passed = report.passed && br.failures == 0;
    report.bounds.push_back(std::move(br));
  }
  return report;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "size,m,n,edges,hypothesis";
  for (auto kind : result.config.bounds) out << ',' << bounds::name(kind);
  if (result.config.timing) out << ",seconds";
  out << '\n';
  for (const auto& row : result.rows) {
    out << row.size << ',' << row.m << ',' << row.n << ',' << row.edges << ','
        << (row.error.empty() ? outcome_name(row.hypothesis) : std::string_view("error"));
    for (std::size_t b = 0; b < result.config.bounds.size(); ++b) {
      out << ',' << (b < row.bound_values.size() ? format_double(row.bound_values[b]) : std::string("nan"));
    }
    if (result.config.timing) out << ',' << format_double(row.seconds);
    out << '\n';
  }
}

void write_dat(const SweepResult& result, std::ostream& out) {
  out << "# size m n edges";
  for (auto kind : result.config.bounds) out << ' ' << bounds::name(kind);
  out << '\n';
  for (const auto& row : result.rows) {
    if (!row.error.empty()) continue;
    out << row.size << ' ' << row.m << ' ' << row.n << ' ' << row.edges;
    for (double v : row.bound_values) out << ' ' << format_double(v);
    out << '\n';
  }
}

Json fit_to_json(const Fit& fit) {
  Json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["stderr"] = fit.stderr_slope;
  j["points"] = fit.points;
  return j;
}

namespace {

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["generator"] = {{"name", c.generator.name}, {"N", c.generator.N}, {"n", c.generator.n},
                    {"d", c.generator.d},       {"k", c.generator.k}};
  j["sizes"] = c.sizes;
  j["k"] = c.k;
  Json names = Json::array();
  for (auto kind : c.bounds) names.push_back(std::string(bounds::name(kind)));
  j["bounds"] = std::move(names);
  j["params"] = {{"k", c.params.k}, {"d", c.params.d},   {"d1", c.params.d1},
                 {"d2", c.params.d2}, {"s", c.params.s}, {"eps", c.params.eps}};
  j["seed"] = c.seed;
  j["kkk_budget"] = c.kkk_budget;
  j["pair_cap"] = c.pair_cap;
  j["check_hypothesis"] = c.check_hypothesis;
  j["timing"] = c.timing;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  const Json& g = j.at("generator");
  c.generator.name = g.at("name").get<std::string>();
  c.generator.N = g.value("N", std::size_t{0});
  c.generator.n = g.value("n", std::size_t{0});
  c.generator.d = g.value("d", std::size_t{2});
  c.generator.k = g.value("k", std::size_t{2});
  c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  c.k = j.at("k").get<std::size_t>();
  c.bounds.clear();
  for (const auto& name : j.at("bounds")) {
    auto kind = bounds::parse_kind(name.get<std::string>());
    if (!kind) throw std::invalid_argument("unknown bound '" + name.get<std::string>() + "'");
    c.bounds.push_back(*kind);
  }
  const Json& p = j.at("params");
  c.params.k = p.at("k").get<int>();
  c.params.d = p.at("d").get<int>();
  c.params.d1 = p.at("d1").get<int>();
  c.params.d2 = p.at("d2").get<int>();
  c.params.s = p.at("s").get<int>();
  c.params.eps = p.at("eps").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.kkk_budget = j.at("kkk_budget").get<std::uint64_t>();
  c.pair_cap = j.at("pair_cap").get<std::uint64_t>();
  c.check_hypothesis = j.at("check_hypothesis").get<bool>();
  c.timing = j.at("timing").get<bool>();
  return c;
}

Outcome parse_outcome(const std::string& text) {
  if (text == "yes") return Outcome::yes;
  if (text == "no") return Outcome::no;
  if (text == "undecided") return Outcome::undecided;
  throw std::invalid_argument("unknown outcome '" + text + "'");
}

}  // namespace

Json sweep_to_json(const SweepResult& result) {
  Json j;
  j["format"] = "incidence-lab/sweep";
  j["version"] = 1;
  j["config"] = config_to_json(result.config);
  Json rows = Json::array();
  for (const auto& row : result.rows) {
    Json r;
    r["size"] = row.size;
    r["m"] = row.m;
    r["n"] = row.n;
    r["edges"] = row.edges;
    r["hypothesis"] = std::string(outcome_name(row.hypothesis));
    Json values;
    for (std::size_t b = 0; b < row.bound_values.size(); ++b) {
      values[std::string(bounds::name(result.config.bounds[b]))] = row.bound_values[b];
    }
    r["bounds"] = values.is_null() ? Json::object() : values;
    if (result.config.timing) r["seconds"] = row.seconds;
    if (!row.error.empty()) r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["fit"] = result.fit ? fit_to_json(*result.fit) : Json(nullptr);
  j["partial"] = result.partial;
  return j;
}

SweepResult sweep_from_json(const Json& j) {
  try {
    if (j.value("format", std::string()) != "incidence-lab/sweep" || j.value("version", 0) != 1) {
      throw std::invalid_argument("expected an incidence-lab/sweep version 1 report");
    }
    SweepResult result;
    result.config = config_from_json(j.at("config"));
    for (const auto& r : j.at("rows")) {
      SweepRow row;
      row.size = r.at("size").get<std::size_t>();
      row.m = r.at("m").get<std::size_t>();
      row.n = r.at("n").get<std::size_t>();
      row.edges = r.at("edges").get<std::uint64_t>();
      row.hypothesis = parse_outcome(r.at("hypothesis").get<std::string>());
      for (auto kind : result.config.bounds) {
        const std::string key(bounds::name(kind));
        row.bound_values.push_back(r.at("bounds").contains(key) ? r.at("bounds").at(key).get<double>() : NAN);
      }
      row.seconds = r.value("seconds", 0.0);
      row.error = r.value("error", std::string());
      result.rows.push_back(std::move(row));
    }
    if (!j.at("fit").is_null()) {
      const Json& f = j.at("fit");
      result.fit = Fit{f.at("slope").get<double>(), f.at("intercept").get<double>(), f.at("stderr").get<double>(),
                       f.at("points").get<std::size_t>()};
    }
    result.partial = j.value("partial", false);
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed sweep report: ") + e.what());
  }
}

Json verify_to_json(const VerifyReport& report, const SweepResult& result) {
  Json j;
  j["format"] = "incidence-lab/verify";
  j["version"] = 1;
  j["constant"] = report.constant;
  j["passed"] = report.passed;
  Json list = Json::array();
  for (const auto& br : report.bounds) {
    Json b;
    b["bound"] = std::string(bounds::name(br.kind));
    b["smallest_constant"] = br.smallest_constant;
    b["failures"] = br.failures;
    Json rows = Json::array();
    for (std::size_t i = 0; i < br.verdicts.size(); ++i) {
      rows.push_back({{"size", result.rows[i].size}, {"verdict", std::string(verdict_name(br.verdicts[i]))}});
    }
    b["rows"] = std::move(rows);
    list.push_back(std::move(b));
  }
  j["bounds"] = std::move(list);
  return j;
}

std::vector<std::size_t> parse_sizes(std::string_view text) {
  auto number = [](std::string_view s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("bad size '" + std::string(s) + "'");
    }
    return std::stoull(std::string(s));
  };
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t a = number(text.substr(0, dots));
    const std::size_t b = number(text.substr(dots + 2));
    for (std::size_t v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    out.push_back(number(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace incidence
