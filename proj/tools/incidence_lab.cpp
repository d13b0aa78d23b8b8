// incidence-lab: command-line front end for the incidence library.
#include "incidence/bounds.hpp"
#include "incidence/constructions.hpp"
#include "incidence/cutting.hpp"
#include "incidence/harness.hpp"
#include "incidence/ideal.hpp"
#include "incidence/io.hpp"
#include "incidence/partition.hpp"
#include "incidence/semialg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace incidence;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << text;
}

void emit(const Json& json, const std::string& out) { emit(json.dump(2) + "\n", out); }

Json witness_to_json(const BicliqueWitness& w) {
  return {{"p", w.p_side}, {"q", w.q_side}};
}

std::vector<bounds::Kind> parse_bound_list(const std::string& text) {
  std::vector<bounds::Kind> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "all") {
      auto all = bounds::all_kinds();
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    auto kind = bounds::parse_kind(item);
    if (!kind) throw std::invalid_argument("unknown bound '" + item + "'");
    out.push_back(*kind);
  }
  return out;
}

std::string bound_names() {
  std::string s;
  for (auto kind : bounds::all_kinds()) s += (s.empty() ? "" : ", ") + std::string(bounds::name(kind));
  return s;
}

// Rows of "x y" or "x,y"; `#` comments and non-numeric header lines are skipped.
std::vector<std::pair<double, double>> read_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream fields(line);
    double x = 0;
    double y = 0;
    if (fields >> x >> y) rows.emplace_back(x, y);
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{"Incidence bounds laboratory: generators, exact counting, partitioning and bound sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("-o,--out", out, "Output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance as JSON");
  GeneratorSpec spec;
  spec.name = "st_grid";
  gen->add_option("-g,--generator,--name", spec.name, "st_grid | point_line | unit_r4 | unit_r4_lopsided")->capture_default_str();
  gen->add_option("-N,--N", spec.N, "Grid parameter for st_grid");
  gen->add_option("-n,--n", spec.n, "Size for the other generators");
  gen->add_option("-k,--k", spec.k, "Parameter k for unit_r4_lopsided")->capture_default_str();
  gen->add_option("--seed", spec.seed)->capture_default_str();

  // count
  auto* count = app.add_subcommand("count", "Count incidences exactly");
  std::string instance_path;
  std::uint64_t pair_cap = 50'000'000;
  bool list_edges = false;
  count->add_option("instance,--instance", instance_path, "Instance JSON")->required();
  count->add_option("--pair-cap", pair_cap)->capture_default_str();
  count->add_flag("--edges", list_edges, "Also list the edges");

  // kkkfree
  auto* kkk = app.add_subcommand("kkkfree", "Decide K_{k,k}-freeness; exit 1 when a biclique is found");
  std::size_t k = 2;
  std::uint64_t budget = 50'000'000;
  kkk->add_option("instance,--instance", instance_path, "Instance JSON")->required();
  kkk->add_option("-k,--k", k)->capture_default_str();
  kkk->add_option("--budget", budget)->capture_default_str();

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of an ideal and its polynomial fit");
  std::string ideal_path;
  std::size_t max_degree = 8;
  std::size_t min_degree = 0;
  hilbert->add_option("ideal,--ideal", ideal_path, "Ideal file: optional dim=, then one generator per line")->required();
  hilbert->add_option("--max-degree", max_degree)->capture_default_str();
  hilbert->add_option("--min-degree", min_degree)->capture_default_str();

  // partition
  auto* partition = app.add_subcommand("partition", "Polynomial r-partition; exit 1 if a component is overfull");
  std::string points_path;
  std::size_t r = 4;
  std::size_t resolution = 0;
  std::size_t max_resolution = 0;
  std::string partition_ideal;
  partition->add_option("points,--points", points_path, "One point per line, rational coordinates")->required();
  partition->add_option("-r,--r", r)->capture_default_str();
  partition->add_option("--ideal", partition_ideal, "Restrict to the zero set of this ideal");
  partition->add_option("--grid-res,--resolution", resolution, "Initial grid resolution (0: by dimension)");
  partition->add_option("--max-resolution", max_resolution, "Resolution cap (0: by dimension)");

  // cutting
  auto* cutting = app.add_subcommand("cutting", "Random-sample cutting of lines and circles; exit 1 if not accepted");
  std::string curves_path;
  std::size_t random_lines = 0;
  std::size_t random_circles = 0;
  std::uint64_t seed = 1;
  bool list_cells = false;
  CuttingOptions cut_opts;
  cutting->add_option("curves,--curves", curves_path, "Curve file: `line a b c` or `circle cx cy r` per line");
  cutting->add_option("--lines", random_lines, "Random lines (when no file is given)");
  cutting->add_option("--circles", random_circles, "Random circles (when no file is given)");
  cutting->add_option("-r,--r", r)->capture_default_str();
  cutting->add_option("--seed", seed)->capture_default_str();
  cutting->add_option("--sample-constant", cut_opts.sample_constant)->capture_default_str();
  cutting->add_option("--attempts", cut_opts.max_attempts)->capture_default_str();
  cutting->add_flag("--cells", list_cells, "List the cells");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep",
      "Size sweep: generate, count, evaluate bounds, gate on K_{k,k}-freeness.\n"
      "CSV columns: size,m,n,edges,hypothesis,<one per bound in --bounds order>[,seconds]");
  ExperimentConfig config;
  std::string sizes_text;
  std::string bounds_text = "planar";
  std::string format = "json";
  sweep->add_option("-g,--generator", config.generator.name)->required();
  sweep->add_option("--sizes", sizes_text, "Comma list or a..b")->required();
  sweep->add_option("-k,--k", config.k, "Hypothesis gate K_{k,k}")->capture_default_str();
  sweep->add_option("--gen-k", config.generator.k, "Generator parameter k")->capture_default_str();
  sweep->add_option("--bounds", bounds_text, "Comma list of: " + bound_names() + ", all")->capture_default_str();
  sweep->add_option("--eps", config.params.eps)->capture_default_str();
  sweep->add_option("--bound-k", config.params.k, "k in the Kovari-Sos-Turan bound")->capture_default_str();
  sweep->add_option("--bound-d", config.params.d, "d in the shatter, equal-dimension and R^d bounds")->capture_default_str();
  sweep->add_option("--d1", config.params.d1)->capture_default_str();
  sweep->add_option("--d2", config.params.d2)->capture_default_str();
  sweep->add_option("--s", config.params.s, "Variety dimension in the varieties bound")->capture_default_str();
  sweep->add_option("--seed", config.seed)->capture_default_str();
  sweep->add_option("--budget", config.kkk_budget, "K_{k,k} search budget")->capture_default_str();
  sweep->add_option("--pair-cap", config.pair_cap)->capture_default_str();
  bool no_hypothesis = false;
  sweep->add_flag("--no-hypothesis", no_hypothesis, "Skip the K_{k,k} gate (rows become undecided)");
  sweep->add_flag("--timing", config.timing, "Record wall time (reports are then not byte-stable)");
  sweep->add_option("--format", format, "json | csv | dat")
      ->check(CLI::IsMember({"json", "csv", "dat"}))
      ->capture_default_str();

  // fit
  auto* fit = app.add_subcommand("fit", "Log-log least-squares exponent of edges against m");
  std::string fit_input;
  fit->add_option("input,--input", fit_input, "Sweep JSON report or two-column text (x y)")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check edges <= c * bound per row; exit 1 on a bound failure");
  std::string report_path;
  double constant = 1.0;
  verify->add_option("report,--report", report_path, "Sweep JSON report")->required();
  verify->add_option("-c,--constant", constant)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    emit(instance_to_json(generate(spec)), out);
    return kExitOk;
  }
  if (count->parsed()) {
    const auto inst = read_instance_file(instance_path);
    EdgeOptions opts;
    opts.pair_cap = pair_cap;
    opts.collect_edges = list_edges;
    const auto es = edges(inst, opts);
    Json j{{"m", inst.m()}, {"n", inst.n()}, {"edges", es.count}};
    if (list_edges) j["edge_list"] = es.edges;
    emit(j, out);
    return kExitOk;
  }
  if (kkk->parsed()) {
    const auto inst = read_instance_file(instance_path);
    const auto res = is_kkk_free(inst, k, budget);
    Json j{{"k", k}, {"free", std::string(outcome_name(res.free))}, {"work", res.work}};
    j["witness"] = res.witness ? witness_to_json(*res.witness) : Json(nullptr);
    emit(j, out);
    if (res.free == Outcome::no) return kExitCheckFailed;
    return res.free == Outcome::yes ? kExitOk : kExitError;
  }
  if (hilbert->parsed()) {
    const Ideal ideal = read_ideal_file(ideal_path);
    if (min_degree > max_degree) throw std::invalid_argument("--min-degree exceeds --max-degree");
    Json values = Json::array();
    for (std::size_t m = min_degree; m <= max_degree; ++m) {
      values.push_back({{"m", m}, {"h", hilbert_function(ideal, m)}});
    }
    Json j{{"ideal", to_string(ideal)}, {"dimension", ideal.dimension}, {"values", values}};
    try {
      const auto est = estimate_hilbert_polynomial(ideal, min_degree, max_degree);
      j["estimate"] = {{"degree", est.degree},
                       {"leading_coefficient", est.leading_coefficient.str()},
                       {"stabilization", est.stabilization}};
    } catch (const RangeTooSmall& e) {
      j["estimate"] = nullptr;
      j["estimate_error"] = e.what();
    }
    emit(j, out);
    return kExitOk;
  }
  if (partition->parsed()) {
    const PointSet P = read_points_file(points_path);
    PartitionOptions opts;
    if (resolution > 0) opts.resolution = resolution;
    if (max_resolution > 0) opts.max_resolution = max_resolution;
    std::optional<Ideal> ideal;
    if (!partition_ideal.empty()) ideal = read_ideal_file(partition_ideal);
    const auto part = partitioning_polynomial(P, r, ideal, opts);
    const std::size_t limit = (P.size() + r - 1) / r;
    const std::size_t largest = part.assignment.max_count();
    Json factors = Json::array();
    for (const auto& f : part.factors) factors.push_back(to_string(f));
    Json history = Json::array();
    for (const auto& h : part.history) {
      history.push_back({{"round", h.index},
                         {"heavy_components", h.heavy_components},
                         {"largest_before", h.largest_before},
                         {"largest_after", h.largest_after},
                         {"bisector_degree", h.bisector_degree},
                         {"degree_after", h.degree_after},
                         {"refines", h.refines}});
    }
    Json j{{"points", P.size()},
           {"r", r},
           {"g", to_string(part.g)},
           {"degree", part.degree},
           {"factors", factors},
           {"rounds", part.rounds},
           {"resolution", part.resolution},
           {"components", part.grid ? part.grid->component_count() : std::size_t{1}},
           {"largest_component", largest},
           {"limit", limit},
           {"on_zero_set", part.assignment.on_zero_set},
           {"unresolved", part.assignment.unresolved},
           {"history", history},
           {"envelope",
            {{"m0", part.envelope.m0},
             {"variety_dimension", part.envelope.variety_dimension},
             {"c_D", part.envelope.c_D},
             {"c_1", part.envelope.c_1},
             {"c_2", part.envelope.c_2},
             {"bound", part.envelope.bound}}}};
    emit(j, out);
    return largest <= limit && part.assignment.unresolved == 0 ? kExitOk : kExitCheckFailed;
  }
  if (cutting->parsed()) {
    std::vector<Curve> curves;
    if (!curves_path.empty()) {
      std::istringstream in(read_text_file(curves_path));
      curves = parse_curves(in);
    } else {
      curves = random_curves(random_lines, random_circles, seed);
    }
    const auto res = planar_cutting(curves, r, seed, cut_opts);
    Json j{{"curves", curves.size()},
           {"r", r},
           {"sample_size", res.sample_size},
           {"sample", res.sample},
           {"cells", res.cells.size()},
           {"max_crossing", res.max_crossing},
           {"crossing_limit", res.crossing_limit},
           {"cell_limit", res.cell_limit},
           {"attempts", res.attempts},
           {"seed_used", res.seed_used},
           {"accepted", res.accepted}};
    if (list_cells) {
      Json cells = Json::array();
      for (const auto& c : res.cells) {
        // Infinite abscissae are written as null.
        cells.push_back({{"x_left", std::isfinite(c.x_left) ? Json(c.x_left) : Json(nullptr)},
                         {"x_right", std::isfinite(c.x_right) ? Json(c.x_right) : Json(nullptr)},
                         {"bottom", c.bottom},
                         {"top", c.top},
                         {"crossings", c.crossings}});
      }
      j["cell_list"] = std::move(cells);
    }
    emit(j, out);
    return res.accepted ? kExitOk : kExitCheckFailed;
  }
  if (sweep->parsed()) {
    config.sizes = parse_sizes(sizes_text);
    config.bounds = parse_bound_list(bounds_text);
    config.check_hypothesis = !no_hypothesis;
    const auto result = run_sweep(config);
    std::ostringstream text;
    if (format == "csv") {
      write_csv(result, text);
    } else if (format == "dat") {
      write_dat(result, text);
    } else {
      text << sweep_to_json(result).dump(2) << '\n';
    }
    emit(text.str(), out);
    return result.partial ? kExitCheckFailed : kExitOk;
  }
  if (fit->parsed()) {
    const std::string text = read_text_file(fit_input);
    std::vector<std::pair<double, double>> rows;
    const Json parsed = Json::parse(text, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_object()) {
      for (const auto& row : sweep_from_json(parsed).rows) {
        if (row.error.empty()) rows.emplace_back(static_cast<double>(row.m), static_cast<double>(row.edges));
      }
    } else {
      rows = read_pairs(text);
    }
    emit(fit_to_json(fit_exponent(rows)), out);
    return kExitOk;
  }
  if (verify->parsed()) {
    const auto result = sweep_from_json(Json::parse(read_text_file(report_path)));
    const auto report = verify_bounds(result, constant);
    emit(verify_to_json(report, result), out);
    return report.passed ? kExitOk : kExitCheckFailed;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
