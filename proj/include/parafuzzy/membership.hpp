#pragma once

// Piecewise-linear fuzzy sets: vertex-list membership functions, min/max
// norms, Mamdani max-min aggregation and closed-form centroid defuzzification.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parafuzzy {

struct Vertex {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Vertex& a, const Vertex& b) {
  return a.x == b.x && a.y == b.y;
}

// Membership function given by an ordered vertex list. x must be
// non-decreasing and y in [0,1]. Between vertices the function is linear;
// outside [front.x, back.x] it is 0. Duplicate x values form a vertical
// segment; evaluation at that x yields the maximum y there, so a leading
// (0,0),(0,1) pair anchors full membership at x = 0.
class PiecewiseLinearMembership {
 public:
  PiecewiseLinearMembership() = default;

  PiecewiseLinearMembership(std::string name, std::vector<Vertex> vertices)
      : name_(std::move(name)), vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) {
      throw std::invalid_argument("membership '" + name_ +
                                  "': needs at least 2 vertices");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].y < 0.0 || vertices_[i].y > 1.0) {
        throw std::invalid_argument("membership '" + name_ +
                                    "': y outside [0,1]");
      }
      if (i > 0 && vertices_[i].x < vertices_[i - 1].x) {
        throw std::invalid_argument("membership '" + name_ +
                                    "': x not non-decreasing");
      }
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  double min_x() const { return vertices_.front().x; }
  double max_x() const { return vertices_.back().x; }

  double evaluate(double x) const {
    if (x < vertices_.front().x || x > vertices_.back().x) return 0.0;
    double best = 0.0;
    bool hit_vertex = false;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const Vertex& a = vertices_[i];
      const Vertex& b = vertices_[i + 1];
      if (x < a.x || x > b.x) continue;
      if (a.x == b.x) {
        best = std::max({best, a.y, b.y});
        hit_vertex = true;
      } else {
        const double t = (x - a.x) / (b.x - a.x);
        best = std::max(best, a.y + t * (b.y - a.y));
        hit_vertex = true;
      }
    }
    if (!hit_vertex) {
      // x equals an isolated vertex (single-point support)
      for (const Vertex& v : vertices_)
        if (v.x == x) best = std::max(best, v.y);
    }
    return best;
  }

 private:
  std::string name_;
  std::vector<Vertex> vertices_;
};

inline double membership_at(const PiecewiseLinearMembership& f, double x) {
  return f.evaluate(x);
}

// Parses the 4-vertex tuple notation "(X1,Y1;X2,Y2;X3,Y3;X4,Y4)".
// Accepts any vertex count >= 2; whitespace is ignored.
inline PiecewiseLinearMembership parse_membership(const std::string& name,
                                                  const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);

  std::vector<Vertex> verts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    const std::string pair = s.substr(pos, end - pos);
    const std::size_t comma = pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("membership '" + name +
                                  "': malformed vertex '" + pair + "'");
    }
    try {
      verts.push_back(Vertex{std::stod(pair.substr(0, comma)),
                             std::stod(pair.substr(comma + 1))});
    } catch (const std::exception&) {
      throw std::invalid_argument("membership '" + name +
                                  "': non-numeric vertex '" + pair + "'");
    }
    pos = end + 1;
  }
  return PiecewiseLinearMembership(name, std::move(verts));
}

inline double tnorm_min(double a, double b) { return a < b ? a : b; }
inline double tconorm_max(double a, double b) { return a > b ? a : b; }

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// A membership function together with the closed universe it lives on.
struct FuzzySet {
  PiecewiseLinearMembership membership;
  Interval universe;
  std::string units;

  FuzzySet() = default;
  FuzzySet(PiecewiseLinearMembership m, Interval u, std::string un = {})
      : membership(std::move(m)), universe(u), units(std::move(un)) {
    if (membership.min_x() < universe.lo || membership.max_x() > universe.hi)
      throw std::invalid_argument("fuzzy set '" + membership.name() +
                                  "': support exceeds universe");
  }
};

// One fired rule: a consequent membership function clipped at `strength`.
struct RuleActivation {
  const PiecewiseLinearMembership* consequent = nullptr;
  double strength = 0.0;
};

namespace detail {

// Exact max-envelope of clipped piecewise-linear functions. Breakpoints are
// collected from every vertex, every clip crossing and every pairwise segment
// intersection, so the envelope is linear between consecutive sample points.
class ClippedEnvelope {
 public:
  ClippedEnvelope(std::span<const RuleActivation> activations) {
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const RuleActivation& a : activations) {
      if (a.consequent == nullptr)
        throw std::invalid_argument("rule activation without consequent");
      if (a.strength < 0.0 || a.strength > 1.0)
        throw std::invalid_argument("rule strength outside [0,1]");
      if (a.strength == 0.0) continue;
      active_.push_back(a);
      const double mn = a.consequent->min_x();
      const double mx = a.consequent->max_x();
      if (!any) {
        lo = mn;
        hi = mx;
        any = true;
      } else {
        lo = std::min(lo, mn);
        hi = std::max(hi, mx);
      }
    }
    lo_ = lo;
    hi_ = hi;
    if (!any) return;

    collect_breakpoints();
  }

  bool empty() const { return active_.empty(); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& breakpoints() const { return xs_; }

  double value(double x) const {
    double best = 0.0;
    for (const RuleActivation& a : active_)
      best = std::max(best, std::min(a.consequent->evaluate(x), a.strength));
    return best;
  }

 private:
  void collect_breakpoints() {
    std::vector<double> xs;
    for (const RuleActivation& a : active_) {
      const auto& vs = a.consequent->vertices();
      for (const Vertex& v : vs) xs.push_back(v.x);
      // clip crossings: where the function passes its strength level
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Vertex& p = vs[i];
        const Vertex& q = vs[i + 1];
        if (p.x == q.x || p.y == q.y) continue;
        const double t = (a.strength - p.y) / (q.y - p.y);
        if (t > 0.0 && t < 1.0) xs.push_back(p.x + t * (q.x - p.x));
      }
    }
    // pairwise segment intersections between different activations
    for (std::size_t i = 0; i < active_.size(); ++i) {
      for (std::size_t j = i + 1; j < active_.size(); ++j) {
        intersect(active_[i], active_[j], xs);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) {
                           return std::abs(a - b) < 1e-15;
                         }),
             xs.end());
    xs_ = std::move(xs);
  }

  static void intersect(const RuleActivation& fa, const RuleActivation& fb,
                        std::vector<double>& xs) {
    const auto& va = fa.consequent->vertices();
    const auto& vb = fb.consequent->vertices();
    for (std::size_t i = 0; i + 1 < va.size(); ++i) {
      if (va[i].x == va[i + 1].x) continue;
      const double a1 = va[i].x, a2 = va[i + 1].x;
      const double sa = (va[i + 1].y - va[i].y) / (a2 - a1);
      for (std::size_t j = 0; j + 1 < vb.size(); ++j) {
        if (vb[j].x == vb[j + 1].x) continue;
        const double b1 = vb[j].x, b2 = vb[j + 1].x;
        const double sb = (vb[j + 1].y - vb[j].y) / (b2 - b1);
        if (sa == sb) continue;
        // y_a(x) = va[i].y + sa (x - a1); y_b likewise; solve equal
        const double x =
            (vb[j].y - va[i].y + sa * a1 - sb * b1) / (sa - sb);
        if (x >= std::max(a1, b1) && x <= std::min(a2, b2)) xs.push_back(x);
      }
    }
  }

  std::vector<RuleActivation> active_;
  std::vector<double> xs_;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace detail

// Max aggregation of consequents clipped at their activation strengths.
// The result is an explicit piecewise-linear set over the consequents' span.
inline FuzzySet mamdani_infer(std::span<const RuleActivation> activations) {
  if (activations.empty())
    throw std::invalid_argument("mamdani_infer: no active rules");

  detail::ClippedEnvelope env(activations);
  std::vector<Vertex> verts;
  if (env.empty()) {
    // all strengths zero: an empty (zero) set over a degenerate span
    verts.push_back({0.0, 0.0});
    verts.push_back({0.0, 0.0});
    return FuzzySet(PiecewiseLinearMembership("aggregate", std::move(verts)),
                    Interval{0.0, 0.0});
  }

  const auto& xs = env.breakpoints();
  verts.reserve(xs.size());
  for (double x : xs) verts.push_back({x, env.value(x)});
  return FuzzySet(PiecewiseLinearMembership("aggregate", std::move(verts)),
                  Interval{env.lo(), env.hi()});
}

inline FuzzySet mamdani_infer(std::initializer_list<RuleActivation> acts) {
  return mamdani_infer(std::span<const RuleActivation>(acts.begin(),
                                                       acts.size()));
}

// Center-of-gravity defuzzification, exact per linear segment:
// area of a segment trapezoid is (y1+y2)/2 * w and its first moment is
// w * (x1 (2 y1 + y2) + x2 (y1 + 2 y2)) / 6.
inline double defuzzify_centroid(const FuzzySet& s) {
  const auto& vs = s.membership.vertices();
  double area = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Vertex& a = vs[i];
    const Vertex& b = vs[i + 1];
    const double w = b.x - a.x;
    if (w <= 0.0) continue;
    area += 0.5 * (a.y + b.y) * w;
    moment += w * (a.x * (2.0 * a.y + b.y) + b.x * (a.y + 2.0 * b.y)) / 6.0;
  }
  if (area <= 1e-12)
    throw std::domain_error("defuzzify_centroid: degenerate output set");
  return moment / area;
}

}  // namespace parafuzzy
