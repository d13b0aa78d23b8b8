#include "incidence/cutting.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace incidence {

Curve Curve::line(double a, double b, double c) {
  if (a == 0 && b == 0) throw std::invalid_argument("line needs (a, b) != (0, 0)");
  Curve k;
  k.kind = Kind::line;
  k.a = a;
  k.b = b;
  k.c = c;
  return k;
}

Curve Curve::circle(double cx, double cy, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("circle needs a positive radius");
  Curve k;
  k.kind = Kind::circle;
  k.cx = cx;
  k.cy = cy;
  k.radius = radius;
  return k;
}

std::vector<Curve> parse_curves(std::istream& in) {
  std::vector<Curve> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind)) continue;
    double p = 0, q = 0, s = 0;
    if (!(ls >> p >> q >> s)) throw std::invalid_argument("curve line " + std::to_string(lineno) + ": expected 3 numbers");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("curve line " + std::to_string(lineno) + ": trailing input");
    if (kind == "line") {
      out.push_back(Curve::line(p, q, s));
    } else if (kind == "circle") {
      out.push_back(Curve::circle(p, q, s));
    } else {
      throw std::invalid_argument("curve line " + std::to_string(lineno) + ": unknown kind '" + kind + "'");
    }
  }
  return out;
}

std::string to_string(const Curve& curve) {
  std::ostringstream os;
  os.precision(17);
  if (curve.kind == Curve::Kind::line) {
    os << "line " << curve.a << ' ' << curve.b << ' ' << curve.c;
  } else {
    os << "circle " << curve.cx << ' ' << curve.cy << ' ' << curve.radius;
  }
  return os.str();
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<Curve> random_curves(std::size_t lines, std::size_t circles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Curve> out;
  for (std::size_t i = 0; i < lines; ++i) {
    const double theta = std::numbers::pi * unit_uniform(rng);
    const double px = 2 * unit_uniform(rng) - 1;
    const double py = 2 * unit_uniform(rng) - 1;
    const double a = std::cos(theta);
    const double b = std::sin(theta);
    out.push_back(Curve::line(a, b, -(a * px + b * py)));
  }
  for (std::size_t i = 0; i < circles; ++i) {
    const double cx = 2 * unit_uniform(rng) - 1;
    const double cy = 2 * unit_uniform(rng) - 1;
    out.push_back(Curve::circle(cx, cy, 0.2 + unit_uniform(rng)));
  }
  return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tolerance(double v) { return 1e-9 * (1 + std::abs(v)); }

bool is_vertical(const Curve& k) { return k.kind == Curve::Kind::line && std::abs(k.b) <= 1e-14 * std::abs(k.a); }

// x-monotone piece of a curve: a non-vertical line, or one arc of a circle.
struct Piece {
  std::size_t curve;
  bool upper;
  double lo;
  double hi;

  long id() const { return static_cast<long>(2 * curve + (upper ? 1 : 0)); }
};

double eval(const Curve& k, const Piece& p, double x) {
  if (k.kind == Curve::Kind::line) return -(k.a * x + k.c) / k.b;
  const double dx = x - k.cx;
  const double h = std::sqrt(std::max(0.0, k.radius * k.radius - dx * dx));
  return p.upper ? k.cy + h : k.cy - h;
}

std::vector<Piece> pieces_of(const Curve& k, std::size_t index) {
  if (k.kind == Curve::Kind::line) {
    if (is_vertical(k)) return {};
    return {{index, false, -kInf, kInf}};
  }
  return {{index, false, k.cx - k.radius, k.cx + k.radius}, {index, true, k.cx - k.radius, k.cx + k.radius}};
}

struct Vertex {
  double x;
  double y;
};

std::vector<Vertex> intersect(const Curve& p, const Curve& q) {
  std::vector<Vertex> out;
  if (p.kind == Curve::Kind::line && q.kind == Curve::Kind::line) {
    const double det = p.a * q.b - p.b * q.a;
    if (std::abs(det) <= 1e-14 * (std::abs(p.a * q.b) + std::abs(p.b * q.a))) return out;
    out.push_back({(p.b * q.c - q.b * p.c) / det, (q.a * p.c - p.a * q.c) / det});
    return out;
  }
  if (p.kind == Curve::Kind::circle && q.kind == Curve::Kind::line) return intersect(q, p);
  if (p.kind == Curve::Kind::line) {
    const double norm = std::hypot(p.a, p.b);
    const double dist = (p.a * q.cx + p.b * q.cy + p.c) / norm;
    if (std::abs(dist) > q.radius) return out;
    const double fx = q.cx - dist * p.a / norm;
    const double fy = q.cy - dist * p.b / norm;
    const double half = std::sqrt(std::max(0.0, q.radius * q.radius - dist * dist));
    const double tx = -p.b / norm;
    const double ty = p.a / norm;
    out.push_back({fx - half * tx, fy - half * ty});
    out.push_back({fx + half * tx, fy + half * ty});
    return out;
  }
  const double dx = q.cx - p.cx;
  const double dy = q.cy - p.cy;
  const double d = std::hypot(dx, dy);
  if (d == 0 || d > p.radius + q.radius || d < std::abs(p.radius - q.radius)) return out;
  const double a = (p.radius * p.radius - q.radius * q.radius + d * d) / (2 * d);
  const double h = std::sqrt(std::max(0.0, p.radius * p.radius - a * a));
  const double mx = p.cx + a * dx / d;
  const double my = p.cy + a * dy / d;
  out.push_back({mx - h * dy / d, my + h * dx / d});
  out.push_back({mx + h * dy / d, my - h * dx / d});
  return out;
}

struct Trapezoid {
  double xl;
  double xr;
  std::optional<Piece> bottom;
  std::optional<Piece> top;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Test points covering every open interval between consecutive critical values.
std::vector<double> probe_points(std::vector<double> crit) {
  std::sort(crit.begin(), crit.end());
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
    const double lo = crit[i];
    const double hi = crit[i + 1];
    if (std::isfinite(lo) && std::isfinite(hi) && !(hi - lo > tolerance(lo))) continue;
    if (lo == hi) continue;
    if (std::isfinite(lo) && std::isfinite(hi)) {
      out.push_back(0.5 * (lo + hi));
    } else if (std::isfinite(hi)) {
      out.push_back(hi - 1 - std::abs(hi));
    } else if (std::isfinite(lo)) {
      out.push_back(lo + 1 + std::abs(lo));
    } else {
      out.push_back(0);
    }
  }
  return out;
}

class Decomposition {
 public:
  explicit Decomposition(const std::vector<Curve>& curves) : curves_(curves) {
    std::vector<double> events;
    for (std::size_t i = 0; i < curves_.size(); ++i) {
      const Curve& k = curves_[i];
      if (is_vertical(k)) {
        walls_.push_back(-k.c / k.a);
        events.push_back(walls_.back());
      }
      if (k.kind == Curve::Kind::circle) {
        vertices_.push_back({k.cx - k.radius, k.cy});
        vertices_.push_back({k.cx + k.radius, k.cy});
      }
      for (std::size_t j = i + 1; j < curves_.size(); ++j) {
        for (const auto& v : intersect(k, curves_[j])) vertices_.push_back(v);
      }
    }
    for (const auto& v : vertices_) events.push_back(v.x);
    std::sort(events.begin(), events.end());
    for (double e : events) {
      if (events_.empty() || e - events_.back() > tolerance(e)) events_.push_back(e);
    }

    std::vector<Piece> all;
    for (std::size_t i = 0; i < curves_.size(); ++i) {
      for (const auto& p : pieces_of(curves_[i], i)) all.push_back(p);
    }
    // Slab s spans (events_[s-1], events_[s]) with infinite ends.
    const std::size_t slabs = events_.size() + 1;
    std::vector<std::map<std::pair<long, long>, std::size_t>> by_pair(slabs);
    for (std::size_t s = 0; s < slabs; ++s) {
      const double xl = s == 0 ? -kInf : events_[s - 1];
      const double xr = s == events_.size() ? kInf : events_[s];
      const double mid = probe_points({xl, xr}).front();
      std::vector<std::pair<double, Piece>> active;
      for (const auto& p : all) {
        if (p.lo < mid && mid < p.hi) active.emplace_back(eval(curves_[p.curve], p, mid), p);
      }
      std::sort(active.begin(), active.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      for (std::size_t g = 0; g <= active.size(); ++g) {
        Trapezoid t{xl, xr, std::nullopt, std::nullopt};
        if (g > 0) t.bottom = active[g - 1].second;
        if (g < active.size()) t.top = active[g].second;
        by_pair[s][{t.bottom ? t.bottom->id() : -1, t.top ? t.top->id() : -1}] = traps_.size();
        slab_of_.push_back(s);
        traps_.push_back(t);
      }
    }
    UnionFind uf(traps_.size());
    for (std::size_t s = 0; s + 1 < slabs; ++s) {
      const double x0 = events_[s];
      if (std::any_of(walls_.begin(), walls_.end(), [&](double w) { return std::abs(w - x0) <= tolerance(x0); })) continue;
      for (const auto& [key, left] : by_pair[s]) {
        auto it = by_pair[s + 1].find(key);
        if (it == by_pair[s + 1].end()) continue;
        const Trapezoid& t = traps_[left];
        const double yb = t.bottom ? eval(curves_[t.bottom->curve], *t.bottom, x0) : -kInf;
        const double yt = t.top ? eval(curves_[t.top->curve], *t.top, x0) : kInf;
        const bool blocked = std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) {
          return std::abs(v.x - x0) <= tolerance(x0) && v.y > yb + tolerance(yb) && v.y < yt - tolerance(yt);
        });
        if (!blocked) uf.unite(left, it->second);
      }
    }
    std::map<std::size_t, std::size_t> cell_of_root;
    for (std::size_t i = 0; i < traps_.size(); ++i) {
      const std::size_t root = uf.find(i);
      auto [it, fresh] = cell_of_root.emplace(root, members_.size());
      if (fresh) members_.emplace_back();
      members_[it->second].push_back(i);
    }
  }

  std::vector<CuttingCell> cells(const std::vector<Curve>& probes, const std::vector<std::size_t>& skip) const {
    std::vector<bool> skipped(probes.size(), false);
    for (auto i : skip) {
      if (i < probes.size()) skipped[i] = true;
    }
    // Intersections of every probe with every boundary curve, by x.
    std::vector<std::vector<std::vector<double>>> cross_x(probes.size(), std::vector<std::vector<double>>(curves_.size()));
    for (std::size_t p = 0; p < probes.size(); ++p) {
      if (skipped[p]) continue;
      for (std::size_t c = 0; c < curves_.size(); ++c) {
        for (const auto& v : intersect(probes[p], curves_[c])) cross_x[p][c].push_back(v.x);
      }
    }
    std::vector<CuttingCell> out;
    for (const auto& members : members_) {
      CuttingCell cell;
      const Trapezoid& first = traps_[members.front()];
      cell.x_left = first.xl;
      cell.x_right = traps_[members.back()].xr;
      cell.bottom = first.bottom ? first.bottom->id() : -1;
      cell.top = first.top ? first.top->id() : -1;
      for (std::size_t p = 0; p < probes.size(); ++p) {
        if (skipped[p]) continue;
        for (auto t : members) {
          if (crosses(probes[p], cross_x[p], traps_[t])) {
            ++cell.crossings;
            break;
          }
        }
      }
      out.push_back(cell);
    }
    return out;
  }

 private:
  bool crosses(const Curve& probe, const std::vector<std::vector<double>>& cross_x, const Trapezoid& t) const {
    if (is_vertical(probe)) {
      const double x0 = -probe.c / probe.a;
      return t.xl + tolerance(t.xl) < x0 && x0 < t.xr - tolerance(t.xr);
    }
    for (const auto& piece : pieces_of(probe, 0)) {
      const double lo = std::max(t.xl, piece.lo);
      const double hi = std::min(t.xr, piece.hi);
      if (!(hi > lo)) continue;
      std::vector<double> crit{lo, hi};
      for (const auto& side : {t.bottom, t.top}) {
        if (!side) continue;
        for (double x : cross_x[side->curve]) {
          if (lo < x && x < hi) crit.push_back(x);
        }
      }
      for (double x : probe_points(crit)) {
        const double y = eval(probe, piece, x);
        const double yb = t.bottom ? eval(curves_[t.bottom->curve], *t.bottom, x) : -kInf;
        const double yt = t.top ? eval(curves_[t.top->curve], *t.top, x) : kInf;
        if (y > yb + tolerance(y) && y < yt - tolerance(y)) return true;
      }
    }
    return false;
  }

  const std::vector<Curve>& curves_;
  std::vector<double> walls_;
  std::vector<Vertex> vertices_;
  std::vector<double> events_;
  std::vector<Trapezoid> traps_;
  std::vector<std::size_t> slab_of_;
  std::vector<std::vector<std::size_t>> members_;
};

}  // namespace

std::vector<CuttingCell> vertical_decomposition(const std::vector<Curve>& curves, const std::vector<Curve>& probes,
                                                const std::vector<std::size_t>& probe_skip) {
  return Decomposition(curves).cells(probes, probe_skip);
}

CuttingResult planar_cutting(const std::vector<Curve>& curves, std::size_t r, std::uint64_t seed,
                             const CuttingOptions& options) {
  if (r < 1) throw std::invalid_argument("cutting needs r >= 1");
  if (options.max_attempts < 1) throw std::invalid_argument("cutting needs at least one attempt");
  const std::size_t n = curves.size();
  const double rr = static_cast<double>(r);
  const auto wanted = static_cast<std::size_t>(std::floor(options.sample_constant * rr * std::log(rr + 1)));
  const std::size_t s = std::min(n, wanted);

  CuttingResult best;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < s; ++i) std::swap(order[i], order[i + rng() % (n - i)]);
    std::vector<std::size_t> sample(order.begin(), order.begin() + static_cast<long>(s));
    std::sort(sample.begin(), sample.end());
    std::vector<Curve> chosen;
    for (auto i : sample) chosen.push_back(curves[i]);

    CuttingResult result;
    result.cells = vertical_decomposition(chosen, curves, sample);
    result.sample = sample;
    result.sample_size = s;
    result.crossing_limit = options.crossing_constant * static_cast<double>(n) / rr;
    result.cell_limit = options.cell_constant * rr * rr;
    result.seed_used = seed + attempt;
    result.attempts = attempt + 1;
    for (const auto& c : result.cells) result.max_crossing = std::max(result.max_crossing, c.crossings);
    result.accepted = static_cast<double>(result.max_crossing) <= result.crossing_limit &&
                      static_cast<double>(result.cells.size()) <= result.cell_limit;
    if (result.accepted) return result;
    if (attempt == 0 || result.max_crossing < best.max_crossing) best = std::move(result);
    best.attempts = attempt + 1;
  }
  return best;
}

}  // namespace incidence
