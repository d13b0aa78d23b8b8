// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
// Usage: acceptance <path to incidence-lab> <scratch directory>
#include "incidence/bounds.hpp"
#include "incidence/constructions.hpp"
#include "incidence/cutting.hpp"
#include "incidence/harness.hpp"
#include "incidence/ideal.hpp"
#include "incidence/partition.hpp"
#include "incidence/semialg.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace incidence;
namespace fs = std::filesystem;

namespace {

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& text) { info_ << (info_.tellp() > 0 ? ", " : "") << text; }
  bool pass() const { return pass_; }
  std::string text() const {
    std::string s = info_.str();
    if (!pass_) s += (s.empty() ? "" : " | ") + std::to_string(failures_) + " failure(s): " + notes_.str();
    return s;
  }

 private:
  bool pass_ = true;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
  std::ostringstream info_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

template <typename Cut>
bool bisects(const Cut& side, const PointSet& S) {
  std::size_t pos = 0;
  std::size_t neg = 0;
  for (const auto& p : S) {
    const int s = side(p);
    pos += s > 0;
    neg += s < 0;
  }
  return 2 * pos <= S.size() && 2 * neg <= S.size();
}

PointSet random_set(std::mt19937_64& rng, std::size_t d, std::size_t n, int span) {
  PointSet S;
  for (std::size_t i = 0; i < n; ++i) S.push_back(test::integer_point(rng, d, span));
  return S;
}

Point circle_point(const Rational& t) { return make_point({(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)}); }

// Inverse stereographic projection onto the unit sphere in R^3.
Point sphere_point(const Rational& u, const Rational& v) {
  const Rational s = 1 + u * u + v * v;
  return make_point({2 * u / s, 2 * v / s, (u * u + v * v - 1) / s});
}

// ---------------------------------------------------------------- criteria

Check st_grid_exponent() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig cfg;
  cfg.generator.name = "st_grid";
  cfg.sizes = parse_sizes("2..10");
  const auto res = run_sweep(cfg);
  c.require(!res.partial && res.rows.size() == 9, "sweep incomplete");
  for (const auto& row : res.rows) {
    c.require(row.edges == row.size * row.size * row.size * row.size, "edges != N^4 at N=" + std::to_string(row.size));
    c.require(2 * row.n == row.m, "n not proportional to m");
  }
  c.require(res.fit.has_value(), "no fit");
  if (res.fit) {
    c.note("slope " + fmt(res.fit->slope, 6) + " +- " + fmt(res.fit->stderr_slope, 2));
    c.require(res.fit->slope >= 1.28 && res.fit->slope <= 1.39, "slope outside [1.28, 1.39]");
  }
  c.note("m up to " + std::to_string(res.rows.empty() ? 0 : res.rows.back().m));
  const double t = seconds_since(start);
  c.note(fmt(t, 3) + " s");
  c.require(t < 60, "runtime >= 60 s");
  return c;
}

Check bound_envelope() {
  Check c;
  std::vector<BipartiteInstance> corpus;
  for (std::size_t N = 2; N <= 8; ++N) corpus.push_back(st_grid(N));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (std::size_t n : {20u, 60u, 120u}) corpus.push_back(random_point_line(n, n, seed));
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 6; ++i) {
    PointSet P;
    for (int j = 0; j < 40; ++j) P.push_back(test::integer_point(rng, 2, 4));
    corpus.push_back(unit_distance_instance(P));
  }
  std::size_t gated = 0;
  double worst = 0;
  for (const auto& inst : corpus) {
    const auto free = is_kkk_free(inst, 2).free;
    c.require(free != Outcome::undecided, "K22 search undecided");
    if (free != Outcome::yes) continue;
    ++gated;
    const double e = static_cast<double>(edges(inst, {50'000'000, false}).count);
    worst = std::max(worst, e / bounds::planar(static_cast<double>(inst.m()), static_cast<double>(inst.n())));
  }
  c.note(std::to_string(gated) + "/" + std::to_string(corpus.size()) + " instances K22-free");
  c.note("corpus-wide c " + fmt(worst));
  c.require(gated > 0, "empty corpus");
  c.require(worst <= 4.0, "c > 4");
  return c;
}

Check hilbert_functions() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t m = 0; m <= 8; ++m) {
      c.require(hilbert_function(Ideal::coordinate(d), m) == 1, "coordinate ideal");
      c.require(hilbert_function(Ideal::zero(d), m) == binomial(d + m, m), "zero ideal");
      checks += 2;
    }
  }
  std::mt19937_64 rng(31337);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t D = 1; D <= 4; ++D) {
      Polynomial f(d);
      do {
        f = test::random_polynomial(rng, d, D, 9);
      } while (f.degree() != static_cast<int>(D));
      const Ideal I(d, {f});
      for (std::size_t m = 0; m <= 8; ++m) {
        const std::size_t full = binomial(d + m, m);
        const std::size_t expected = m >= D ? full - binomial(d + m - D, m - D) : full;
        c.require(hilbert_function(I, m) == expected,
                  "principal d=" + std::to_string(d) + " D=" + std::to_string(D) + " m=" + std::to_string(m));
        ++checks;
      }
    }
  }
  const Ideal point = Ideal::coordinate(2);
  const Ideal circle(2, {parse_polynomial("x1^2 + x2^2 - 1", 2)});
  const Ideal sphere(3, {parse_polynomial("x1^2 + x2^2 + x3^2 - 1", 3)});
  const auto ep = estimate_hilbert_polynomial(point, 0, 6);
  const auto ec = estimate_hilbert_polynomial(circle, 0, 8);
  const auto es = estimate_hilbert_polynomial(sphere, 0, 8);
  c.require(ep.degree == 0, "point dimension");
  c.require(ec.degree == 1, "circle dimension");
  c.require(es.degree == 2, "sphere dimension");
  c.require(ec.leading_coefficient == Rational(2), "circle leading coefficient");
  c.note(std::to_string(checks) + " exact values");
  c.note("e = " + std::to_string(ep.degree) + "/" + std::to_string(ec.degree) + "/" + std::to_string(es.degree));
  c.note("circle a_I = " + to_string(ec.leading_coefficient));
  const double t = seconds_since(start);
  c.note(fmt(t, 3) + " s");
  c.require(t < 30, "runtime >= 30 s");
  return c;
}

Check ham_sandwich_soundness() {
  Check c;
  std::mt19937_64 rng(4242);
  std::size_t discrete = 0;
  std::size_t poly = 0;
  std::size_t variety = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int kind = trial % 5;
    try {
      if (kind <= 1) {
        const std::size_t D = 1 + rng() % 3;
        std::vector<PointSet> sets;
        for (std::size_t i = 0; i < D; ++i) sets.push_back(random_set(rng, D, 1 + rng() % 40, 12));
        const auto h = discrete_ham_sandwich(sets);
        auto side = [&](const Point& p) {
          Rational v = h.offset;
          for (Eigen::Index i = 0; i < p.size(); ++i) v += h.normal[i] * p[i];
          return sign_of(v);
        };
        c.require(!h.normal.isZero(), "zero normal");
        for (const auto& S : sets) c.require(bisects(side, S), "discrete trial " + std::to_string(trial));
        ++discrete;
      } else if (kind <= 3) {
        const std::size_t d = 1 + rng() % 3;
        const std::size_t k = 1 + rng() % 6;
        std::vector<PointSet> sets;
        for (std::size_t i = 0; i < k; ++i) sets.push_back(random_set(rng, d, 1 + rng() % 40, 12));
        const auto b = polynomial_ham_sandwich(sets);
        auto side = [&](const Point& p) { return sign_of(evaluate(b.g, p)); };
        for (const auto& S : sets) c.require(bisects(side, S), "polynomial trial " + std::to_string(trial));
        ++poly;
      } else {
        const bool on_sphere = (trial / 5) % 2 == 1;
        const Ideal I = on_sphere ? Ideal(3, {parse_polynomial("x1^2 + x2^2 + x3^2 - 1", 3)})
                                  : Ideal(2, {parse_polynomial("x1^2 + x2^2 - 1", 2)});
        std::uniform_int_distribution<long> num(-60, 60);
        const std::size_t k = 1 + rng() % 4;
        std::vector<PointSet> sets(k);
        for (auto& S : sets) {
          const std::size_t size = 1 + rng() % 40;
          for (std::size_t i = 0; i < size; ++i) {
            S.push_back(on_sphere ? sphere_point(Rational(num(rng), 13), Rational(num(rng), 11))
                                  : circle_point(Rational(num(rng), 13)));
          }
        }
        const auto b = polynomial_ham_sandwich(sets, I);
        auto side = [&](const Point& p) { return sign_of(evaluate(b.g, p)); };
        for (const auto& S : sets) c.require(bisects(side, S), "variety trial " + std::to_string(trial));
        c.require(not_in_ideal(I, b.g), "bisector in ideal, trial " + std::to_string(trial));
        ++variety;
      }
    } catch (const std::exception& e) {
      c.require(false, "trial " + std::to_string(trial) + " threw: " + e.what());
    }
  }
  c.note(std::to_string(discrete) + " discrete, " + std::to_string(poly) + " polynomial, " + std::to_string(variety) +
         " variety-restricted");
  return c;
}

Check partitioning_contract() {
  Check c;
  std::mt19937_64 rng(777);
  const Ideal circle(2, {parse_polynomial("x1^2 + x2^2 - 1", 2)}, 1, 2);
  struct Run {
    PartitionPolynomial part;
    double dprime;
  };
  std::vector<Run> runs;
  const std::size_t rs[] = {2, 4, 8, 16};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = rs[trial % 4];
    const bool on_circle = trial % 5 == 4;
    const std::size_t d = on_circle ? 2 : 1 + (trial / 4) % 2;
    const std::size_t size = std::max<std::size_t>(r, 16 + rng() % 497);
    PointSet P;
    std::optional<Ideal> ideal;
    if (on_circle) {
      // Jittered angles, so neighbouring points stay a grid cell or more apart.
      std::uniform_real_distribution<double> jitter(0.0, 0.5);
      for (std::size_t i = 0; i < size; ++i) {
        const double theta = -3.0 + 6.0 * (static_cast<double>(i) + jitter(rng)) / static_cast<double>(size);
        const auto t = static_cast<long>(std::lround(std::tan(theta / 2) * 10000));
        P.push_back(circle_point(Rational(t, 10000)));
      }
      ideal = circle;
    } else {
      P = random_set(rng, d, size, 1000);
    }
    try {
      auto part = partitioning_polynomial(P, r, ideal);
      const std::size_t limit = (P.size() + r - 1) / r;
      // Recount from scratch at the construction resolution.
      if (part.grid) {
        const GridDecomposition grid(part.factors, part.grid->box(), part.resolution);
        const auto a = assign_points(grid, P);
        c.require(a.unresolved == 0, "unresolved points");
        c.require(a.max_count() <= limit, "component over ceil(m/r) in trial " + std::to_string(trial));
        // Refinement: every prefix grid's components are unions of the next one's.
        for (std::size_t i = 1; i < part.factors.size(); ++i) {
          const GridDecomposition before({part.factors.begin(), part.factors.begin() + static_cast<long>(i)},
                                         grid.box(), part.resolution);
          const GridDecomposition after({part.factors.begin(), part.factors.begin() + static_cast<long>(i + 1)},
                                        grid.box(), part.resolution);
          std::map<long, long> parent;
          for (std::size_t cell = 0; cell < after.cell_count(); ++cell) {
            if (after.label(cell) < 0) continue;
            const auto [it, fresh] = parent.emplace(after.label(cell), before.label(cell));
            c.require(before.label(cell) >= 0 && it->second == before.label(cell),
                      "refinement broken in trial " + std::to_string(trial));
          }
        }
      }
      for (const auto& round : part.history) c.require(round.refines, "round not refining");
      int sum = 0;
      for (const auto& f : part.factors) sum += f.degree();
      c.require(sum == part.degree, "degree law");
      if (ideal) c.require(not_in_ideal(*ideal, part.g), "g in ideal");
      runs.push_back({std::move(part), on_circle ? 1.0 : static_cast<double>(d)});
    } catch (const std::exception& e) {
      c.require(false, "trial " + std::to_string(trial) + " threw: " + e.what());
    }
  }
  double c_D = 0;
  double c_1 = 0;
  for (const auto& run : runs) {
    c_D = std::max(c_D, run.part.envelope.c_D);
    c_1 = std::max(c_1, run.part.envelope.c_1);
  }
  int worst_degree = 0;
  for (const auto& run : runs) {
    const double bound = degree_envelope(c_D, c_1, run.part.rounds, run.part.envelope.m0, run.dprime);
    c.require(run.part.degree <= bound + 1e-9, "degree above corpus envelope");
    worst_degree = std::max(worst_degree, run.part.degree);
  }
  c.note(std::to_string(runs.size()) + " runs");
  c.note("corpus c_D " + fmt(c_D) + ", c_1 " + fmt(c_1));
  c.note("max deg g " + std::to_string(worst_degree));
  return c;
}

Check set_systems() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ground = 1 + rng() % 12;
    const std::size_t count = 1 + rng() % 64;
    const auto raw = test::random_system(rng, ground, count);
    const auto s = raw.deduplicated();
    const auto vc = vc_dimension(s);
    c.require(vc.decided, "vc undecided");
    for (std::size_t z = 0; z <= ground; ++z) {
      std::uint64_t sum = 0;
      for (long i = 0; i <= vc.value; ++i) sum += binomial(z, static_cast<std::uint64_t>(i));
      const auto pi = shatter_function(s, z);
      c.require(pi.decided && static_cast<std::uint64_t>(pi.value) <= sum, "Sauer-Shelah at z=" + std::to_string(z));
    }
    c.require(static_cast<long>(unit_distance_graph(s).size()) <= std::max(0L, vc.value) * static_cast<long>(s.size()),
              "Haussler");
    const std::size_t k = 2 + rng() % 2;
    const std::size_t delta = 1 + rng() % 5;
    if (raw.size() >= k) {
      bool expected = true;
      std::vector<std::size_t> idx(k);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (!expected) return;
        if (pos == k) {
          Subset u(ground);
          Subset in(ground);
          in.set();
          for (auto i : idx) {
            u |= raw.sets[i];
            in &= raw.sets[i];
          }
          expected = (u - in).count() >= delta;
          return;
        }
        for (std::size_t i = from; i < raw.size() && expected; ++i) {
          idx[pos] = i;
          rec(pos + 1, i + 1);
        }
      };
      rec(0, 0);
      const auto got = is_k_delta_separated(raw, k, delta);
      c.require(got.separated != Outcome::undecided && (got.separated == Outcome::yes) == expected, "separation");
    }
  }
  const double t = seconds_since(start);
  c.note("200 systems, " + fmt(t, 3) + " s");
  c.require(t < 60, "runtime >= 60 s");
  return c;
}

Check milnor_thom() {
  Check c;
  PointSet grid;
  for (int i = -24; i <= 24; ++i)
    for (int j = -24; j <= 24; ++j) grid.push_back(make_point({Rational(i, 4), Rational(j, 4)}));
  const auto lines = sign_pattern_census({parse_polynomial("x1 - x2", 2), parse_polynomial("x1 + x2", 2)}, grid);
  c.require(lines.size() == 9, "two crossing lines gave " + std::to_string(lines.size()));
  std::mt19937_64 rng(5150);
  std::size_t largest = 0;
  std::size_t families = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t l = 2 + trial % 4;
    std::vector<Polynomial> polys;
    std::size_t t = 1;
    for (std::size_t i = 0; i < l; ++i) {
      polys.push_back(test::random_polynomial(rng, 2, 1 + rng() % 2));
      t = std::max<std::size_t>(t, static_cast<std::size_t>(std::max(1, polys.back().degree())));
    }
    const auto census = sign_pattern_census(polys, grid);
    const auto bound = milnor_thom_bound(l, 2, t);
    c.require(bound.has_value(), "bound missing");
    if (bound) c.require(Rational(static_cast<long>(census.size())) <= *bound, "census above bound");
    largest = std::max(largest, census.size());
    ++families;
  }
  c.note("crossing lines: " + std::to_string(lines.size()) + " patterns");
  c.note(std::to_string(families) + " families, largest census " + std::to_string(largest));
  return c;
}

Check unit_distances_r4() {
  Check c;
  for (std::size_t n : {4u, 8u, 16u}) {
    const auto P = orthogonal_circles_r4(n);
    std::size_t cross = 0;
    for (std::size_t i = 0; i < n / 2; ++i) {
      for (std::size_t j = n / 2; j < n; ++j) {
        Rational s = 0;
        for (Eigen::Index a = 0; a < 4; ++a) s += (P[i][a] - P[j][a]) * (P[i][a] - P[j][a]);
        cross += s == 1;
      }
    }
    c.require(cross == (n / 2) * (n / 2), "cross pairs n=" + std::to_string(n));
    c.require(4 * cross >= n * n, "below n^2/4");
    c.require(unit_distance_count(P) >= cross, "count below cross pairs");
    // Each circle carries n/2 points, so k = 4 is violated exactly when n/2 >= 4.
    const Outcome expected = n / 2 >= 4 ? Outcome::no : Outcome::yes;
    c.require(sphere_condition_check(P, 4) == expected, "k=4 circle hypothesis misjudged, n=" + std::to_string(n));
    c.note("n=" + std::to_string(n) + ": " + std::to_string(cross) + " cross pairs, k=4 " +
           (expected == Outcome::no ? "violated" : "holds"));
  }
  return c;
}

Check planar_cutting_families() {
  Check c;
  std::mt19937_64 rng(8080);
  std::size_t worst_attempts = 0;
  double worst_ratio = 0;
  double worst_cells = 0;
  for (int family = 0; family < 20; ++family) {
    const std::size_t n = 20 + rng() % 81;
    const std::size_t circles = rng() % (n / 2 + 1);
    const std::size_t r = 2 + rng() % 9;
    const auto curves = random_curves(n - circles, circles, 1000 + static_cast<std::uint64_t>(family));
    const auto res = planar_cutting(curves, r, 500 + static_cast<std::uint64_t>(family));
    const double nr = static_cast<double>(n) / static_cast<double>(r);
    c.require(res.accepted, "family " + std::to_string(family) + " not accepted");
    c.require(static_cast<double>(res.max_crossing) <= 8 * nr, "crossing above 8n/r");
    c.require(static_cast<double>(res.cells.size()) <= 8.0 * static_cast<double>(r * r), "cells above 8r^2");
    c.require(res.attempts <= 2, "more than one retry in family " + std::to_string(family));
    worst_attempts = std::max(worst_attempts, res.attempts);
    worst_ratio = std::max(worst_ratio, static_cast<double>(res.max_crossing) / nr);
    worst_cells = std::max(worst_cells, static_cast<double>(res.cells.size()) / static_cast<double>(r * r));
  }
  c.note("max crossing/(n/r) " + fmt(worst_ratio) + ", max cells/r^2 " + fmt(worst_cells) + ", max attempts " +
         std::to_string(worst_attempts));
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Check cli_determinism(const std::string& cli, const fs::path& dir) {
  Check c;
  fs::create_directories(dir);
  {
    std::ofstream(dir / "circle.ideal") << "dim=2\nvariety_dim=1\nx1^2 + x2^2 - 1\n";
    std::ofstream pts(dir / "points.txt");
    std::mt19937_64 rng(1);
    for (int i = 0; i < 120; ++i) pts << static_cast<long>(rng() % 1000) << ' ' << static_cast<long>(rng() % 997) << "/3\n";
    std::ofstream curves(dir / "curves.txt");
    for (const auto& k : random_curves(40, 10, 3)) curves << to_string(k) << '\n';
  }
  const std::string d = dir.string() + "/";
  // Inputs produced by earlier commands are created once before the reruns.
  const std::vector<std::string> setup = {
      cli + " gen --name st_grid --N 5 --out " + d + "grid.json",
      cli + " gen --name point_line -n 40 --seed 9 --out " + d + "pl.json",
      cli + " sweep -g st_grid --sizes 2..7 --bounds planar,kst --out " + d + "sweep.json",
  };
  for (const auto& cmd : setup) c.require(std::system(cmd.c_str()) == 0, "setup failed: " + cmd);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "gen --name unit_r4 -n 12"},
      {"gen-random", "gen --name point_line -n 30 --seed 4"},
      {"count", "count --instance " + d + "grid.json --edges"},
      {"kkkfree", "kkkfree " + d + "pl.json --k 2"},
      {"hilbert", "hilbert " + d + "circle.ideal --max-degree 7"},
      {"partition", "partition --points " + d + "points.txt --r 8"},
      {"partition-grid", "partition --points " + d + "points.txt --r 4 --grid-res 32"},
      {"cutting", "cutting " + d + "curves.txt -r 6 --seed 11 --cells"},
      {"cutting-random", "cutting --lines 30 --circles 5 -r 5 --seed 2"},
      {"sweep-json", "sweep -g point_line --sizes 10,20,30,40 --bounds all --bound-d 3 --seed 5"},
      {"sweep-csv", "sweep -g st_grid --sizes 2..6 --bounds planar,equal_dim --format csv"},
      {"sweep-dat", "sweep -g unit_r4 --sizes 4,8,12 --bounds unit_r4 --format dat"},
      {"fit", "fit " + d + "sweep.json"},
      {"verify", "verify " + d + "sweep.json -c 2"},
  };
  std::size_t identical = 0;
  for (const auto& [name, args] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (name + "." + std::to_string(run));
      const std::string cmd = cli + " " + args + " --out " + out.string();
      const int status = std::system(cmd.c_str());
      c.require(status != -1 && fs::exists(out), name + " produced no output");
      outputs[run] = slurp(out);
    }
    c.require(!outputs[0].empty(), name + " output empty");
    c.require(outputs[0] == outputs[1], name + " differs between runs");
    identical += !outputs[0].empty() && outputs[0] == outputs[1];
  }
  c.note(std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands bit-identical");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <incidence-lab> <scratch dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scratch = argv[2];
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"st-grid exponent", st_grid_exponent},
      {"bound envelope", bound_envelope},
      {"hilbert functions", hilbert_functions},
      {"ham-sandwich soundness", ham_sandwich_soundness},
      {"partitioning contract", partitioning_contract},
      {"sauer-shelah/haussler/separation", set_systems},
      {"milnor-thom census", milnor_thom},
      {"unit distances R4", unit_distances_r4},
      {"planar cutting", planar_cutting_families},
      {"cli determinism", [&] { return cli_determinism(cli, scratch); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.require(false, std::string("threw: ") + e.what());
    }
    all = all && result.pass();
    std::cout << (result.pass() ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << result.text()
              << std::endl;
  }
  return all ? 0 : 1;
}
