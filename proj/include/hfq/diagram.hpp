#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfq/errors.hpp"
#include "hfq/rational.hpp"

namespace hfq {

enum class CurveFamily : std::uint8_t { alpha, beta };

inline const char* family_name(CurveFamily f) {
  return f == CurveFamily::alpha ? "alpha" : "beta";
}

// An intersection point of one alpha curve with one beta curve.
struct Vertex {
  int alpha_curve = -1;
  int beta_curve = -1;
};

// Directed arc of a curve, running from one intersection point to the next
// in the curve's cyclic order.
struct Arc {
  int from = -1;
  int to = -1;
  CurveFamily family = CurveFamily::alpha;
  int curve = -1;  // index within its family
};

// One step of an oriented region boundary word: an arc traversed forward
// (tail -> head) or backward.  Words keep the region on the left.
struct BoundaryStep {
  int arc = -1;
  bool forward = true;

  friend bool operator==(const BoundaryStep&, const BoundaryStep&) = default;
};

using BoundaryWord = std::vector<BoundaryStep>;

// Closure of one complementary component of the curves, as a compact surface
// with corners.  euler_char is chi of that surface; boundary holds one word
// per boundary circle.
struct Region {
  int euler_char = 1;
  std::vector<BoundaryWord> boundary;
};

// Integer 2-chain: one coefficient per region.
using Domain = std::vector<Int>;

// Integer 0-chain: one coefficient per vertex.
using ZeroChain = std::vector<Int>;

// Sorted vertex ids selecting one point on each alpha curve and each beta
// curve.
using Generator = std::vector<int>;

// A region touching some quadrants at a vertex: `count` of the four local
// quadrants belong to `region`.
struct QuadrantUse {
  int region = -1;
  int count = 0;

  friend bool operator==(const QuadrantUse&, const QuadrantUse&) = default;
};

struct Violation {
  std::string code;
  std::string location;
  std::string detail;
};

namespace detail {

// Endpoint of a boundary step: the vertex the traversal reaches, together
// with the arc-end it arrives by.  Arc-ends distinguish the head end from the
// tail end; a loop arc contributes two distinct ends at its single vertex.
struct ArcEnd {
  int arc = -1;
  bool head = true;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

inline int step_start(const BoundaryStep& s, const std::vector<Arc>& arcs) {
  return s.forward ? arcs[s.arc].from : arcs[s.arc].to;
}
inline int step_end(const BoundaryStep& s, const std::vector<Arc>& arcs) {
  return s.forward ? arcs[s.arc].to : arcs[s.arc].from;
}
inline ArcEnd arrival_end(const BoundaryStep& s) { return {s.arc, s.forward}; }
inline ArcEnd departure_end(const BoundaryStep& s) { return {s.arc, !s.forward}; }

}  // namespace detail

// A multi-pointed Heegaard diagram as pure combinatorial data, immutable
// after construction.  Construction performs a structural analysis (word
// continuity, orientable gluing) and caches the derived corner counts and
// per-vertex quadrant incidences; all further invariants are checked by
// validate().  Operations that need the derived data require analyzable().
class Diagram {
 public:
  Diagram(int genus, std::vector<Vertex> vertices, std::vector<Arc> arcs,
          std::vector<std::vector<int>> alpha_curves,
          std::vector<std::vector<int>> beta_curves, std::vector<Region> regions,
          std::vector<int> basepoint_regions)
      : genus_(genus),
        vertices_(std::move(vertices)),
        arcs_(std::move(arcs)),
        alpha_curves_(std::move(alpha_curves)),
        beta_curves_(std::move(beta_curves)),
        regions_(std::move(regions)),
        basepoints_(std::move(basepoint_regions)) {
    analyze();
  }

  int genus() const { return genus_; }
  int num_basepoints() const { return static_cast<int>(basepoints_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_regions() const { return static_cast<int>(regions_.size()); }
  int generator_rank() const {
    return static_cast<int>(alpha_curves_.size());  // = g + l - 1 when valid
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Region>& regions() const { return regions_; }
  const std::vector<int>& basepoint_regions() const { return basepoints_; }
  const std::vector<std::vector<int>>& curves(CurveFamily f) const {
    return f == CurveFamily::alpha ? alpha_curves_ : beta_curves_;
  }

  bool is_basepoint_region(int r) const {
    return std::find(basepoints_.begin(), basepoints_.end(), r) != basepoints_.end();
  }

  bool analyzable() const { return analyzable_; }
  const std::vector<Violation>& structural_problems() const { return structural_; }

  int corner_count(int region) const {
    require_analyzable();
    return corner_counts_[region];
  }

  const std::vector<QuadrantUse>& quadrants_at(int vertex) const {
    require_analyzable();
    return quadrants_[vertex];
  }

  // Region using the arc forward in its boundary word (the region on the
  // arc's left), and the one using it backward.
  int region_left_of(int arc) const {
    require_analyzable();
    return arc_left_[arc];
  }
  int region_right_of(int arc) const {
    require_analyzable();
    return arc_right_[arc];
  }

  Domain zero_domain() const { return Domain(regions_.size(), Int(0)); }
  Domain full_surface_domain() const { return Domain(regions_.size(), Int(1)); }

  bool is_hatted(const Domain& a) const {
    for (int r : basepoints_)
      if (a[r] != 0) return false;
    return true;
  }

 private:
  void require_analyzable() const {
    if (!analyzable_)
      throw Error(Errc::invalid_diagram,
                  "operation requires a structurally coherent diagram; run validate()");
  }

  void analyze() {
    const int nv = num_vertices();
    const int na = num_arcs();
    const int nr = num_regions();

    auto bad = [&](std::string code, std::string loc, std::string detail) {
      structural_.push_back({std::move(code), std::move(loc), std::move(detail)});
    };

    for (int i = 0; i < na; ++i) {
      const Arc& a = arcs_[i];
      if (a.from < 0 || a.from >= nv || a.to < 0 || a.to >= nv)
        bad("arc-range", "arc " + std::to_string(i), "endpoint out of range");
    }
    auto check_curves = [&](const std::vector<std::vector<int>>& cs, CurveFamily f) {
      for (size_t c = 0; c < cs.size(); ++c)
        for (int e : cs[c])
          if (e < 0 || e >= na)
            bad("arc-range", std::string(family_name(f)) + " curve " + std::to_string(c),
                "arc id out of range");
    };
    check_curves(alpha_curves_, CurveFamily::alpha);
    check_curves(beta_curves_, CurveFamily::beta);
    for (int r = 0; r < nr; ++r)
      for (const BoundaryWord& w : regions_[r].boundary)
        for (const BoundaryStep& s : w)
          if (s.arc < 0 || s.arc >= na)
            bad("arc-range", "region " + std::to_string(r), "boundary arc id out of range");
    for (int b : basepoints_)
      if (b < 0 || b >= nr)
        bad("basepoint-range", "basepoints", "region id " + std::to_string(b) + " out of range");
    if (!structural_.empty()) return;

    // Word continuity and U-turn freeness; derive corners and quadrants.
    corner_counts_.assign(nr, 0);
    quadrants_.assign(nv, {});
    arc_left_.assign(na, -1);
    arc_right_.assign(na, -1);
    auto add_quadrants = [&](int v, int region, int count) {
      for (QuadrantUse& q : quadrants_[v]) {
        if (q.region == region) {
          q.count += count;
          return;
        }
      }
      quadrants_[v].push_back({region, count});
    };

    for (int r = 0; r < nr; ++r) {
      for (size_t wi = 0; wi < regions_[r].boundary.size(); ++wi) {
        const BoundaryWord& w = regions_[r].boundary[wi];
        const std::string loc = "region " + std::to_string(r) + " word " + std::to_string(wi);
        if (w.empty()) {
          bad("word-empty", loc, "empty boundary word");
          continue;
        }
        bool ok = true;
        for (size_t t = 0; t < w.size(); ++t) {
          const BoundaryStep& cur = w[t];
          const BoundaryStep& nxt = w[(t + 1) % w.size()];
          if (detail::step_end(cur, arcs_) != detail::step_start(nxt, arcs_)) {
            bad("word-continuity", loc,
                "step " + std::to_string(t) + " does not connect to its successor");
            ok = false;
          } else if (detail::arrival_end(cur) == detail::departure_end(nxt)) {
            bad("word-uturn", loc, "boundary backtracks at step " + std::to_string(t));
            ok = false;
          }
          int& side = cur.forward ? arc_left_[cur.arc] : arc_right_[cur.arc];
          if (side != -1) {
            bad("arc-gluing", loc,
                "arc " + std::to_string(cur.arc) + " traversed twice in the same direction");
            ok = false;
          } else {
            side = r;
          }
        }
        if (!ok) continue;
        for (size_t t = 0; t < w.size(); ++t) {
          const BoundaryStep& cur = w[t];
          const BoundaryStep& nxt = w[(t + 1) % w.size()];
          int v = detail::step_end(cur, arcs_);
          bool corner = arcs_[cur.arc].family != arcs_[nxt.arc].family;
          if (corner) {
            corner_counts_[r] += 1;
            add_quadrants(v, r, 1);
          } else {
            add_quadrants(v, r, 2);
          }
        }
      }
    }
    for (int e = 0; e < na; ++e) {
      if (arc_left_[e] == -1)
        bad("arc-gluing", "arc " + std::to_string(e), "never traversed forward");
      if (arc_right_[e] == -1)
        bad("arc-gluing", "arc " + std::to_string(e), "never traversed backward");
    }
    if (!structural_.empty()) return;

    for (auto& quads : quadrants_)
      std::sort(quads.begin(), quads.end(),
                [](const QuadrantUse& a, const QuadrantUse& b) { return a.region < b.region; });
    analyzable_ = true;
  }

  int genus_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> alpha_curves_;
  std::vector<std::vector<int>> beta_curves_;
  std::vector<Region> regions_;
  std::vector<int> basepoints_;

  bool analyzable_ = false;
  std::vector<Violation> structural_;
  std::vector<int> corner_counts_;
  std::vector<std::vector<QuadrantUse>> quadrants_;
  std::vector<int> arc_left_;
  std::vector<int> arc_right_;
};

// e(A) = sum_i a_i (chi(D_i) - p_i/4).
inline Rational euler_measure(const Diagram& d, const Domain& a) {
  Rational acc(0);
  for (int r = 0; r < d.num_regions(); ++r) {
    if (a[r] == 0) continue;
    Rational term = make_rational(Int(4 * d.regions()[r].euler_char - d.corner_count(r)), Int(4));
    acc += Rational(a[r]) * term;
  }
  return acc;
}

// n_x(A): at each selected point, the average of the four quadrant
// coefficients (with multiplicity), summed over the generator.
inline Rational point_measure(const Diagram& d, const Generator& x, const Domain& a) {
  Int acc(0);
  for (int v : x)
    for (const QuadrantUse& q : d.quadrants_at(v)) acc += Int(q.count) * a[q.region];
  return make_rational(std::move(acc), Int(4));
}

namespace detail {

inline ZeroChain dd_family(const Diagram& d, const Domain& a, CurveFamily f) {
  ZeroChain out(d.num_vertices(), Int(0));
  for (int e = 0; e < d.num_arcs(); ++e) {
    if (d.arcs()[e].family != f) continue;
    Int coeff = a[d.region_left_of(e)] - a[d.region_right_of(e)];
    if (coeff == 0) continue;
    out[d.arcs()[e].to] += coeff;
    out[d.arcs()[e].from] -= coeff;
  }
  return out;
}

}  // namespace detail

// Boundary of the alpha part of the boundary of A: restrict the 1-chain
// dA to alpha arcs, then take endpoints (head - tail).
inline ZeroChain dd_alpha(const Diagram& d, const Domain& a) {
  return detail::dd_family(d, a, CurveFamily::alpha);
}

inline ZeroChain dd_beta(const Diagram& d, const Domain& a) {
  return detail::dd_family(d, a, CurveFamily::beta);
}

// Difference 0-chain sum_{v in y} v - sum_{v in x} v.
inline ZeroChain generator_difference(const Diagram& d, const Generator& x, const Generator& y) {
  ZeroChain out(d.num_vertices(), Int(0));
  for (int v : y) out[v] += 1;
  for (int v : x) out[v] -= 1;
  return out;
}

// Emits every generator in lexicographic order (on sorted vertex ids) until
// the visitor returns false.  Returns false iff stopped early.
inline bool for_each_generator(const Diagram& d, const std::function<bool(const Generator&)>& fn) {
  const int k = d.generator_rank();
  const int nv = d.num_vertices();
  if (static_cast<int>(d.curves(CurveFamily::beta).size()) != k)
    throw Error(Errc::invalid_diagram, "alpha/beta curve counts differ");
  std::vector<char> alpha_used(k, 0), beta_used(k, 0);
  // Suffix counts of vertices remaining per curve, for pruning.
  std::vector<int> alpha_left(k, 0), beta_left(k, 0);
  for (const Vertex& v : d.vertices()) {
    if (v.alpha_curve < 0 || v.alpha_curve >= k || v.beta_curve < 0 || v.beta_curve >= k)
      throw Error(Errc::invalid_diagram, "vertex curve index out of range");
    ++alpha_left[v.alpha_curve];
    ++beta_left[v.beta_curve];
  }
  Generator current;
  current.reserve(k);

  std::function<bool(int, int)> go = [&](int next, int chosen) -> bool {
    if (chosen == k) return fn(current);
    if (nv - next < k - chosen) return true;
    for (int c = 0; c < k; ++c) {
      if (!alpha_used[c] && alpha_left[c] == 0) return true;
      if (!beta_used[c] && beta_left[c] == 0) return true;
    }
    if (next >= nv) return true;
    const Vertex& v = d.vertices()[next];
    --alpha_left[v.alpha_curve];
    --beta_left[v.beta_curve];
    bool keep_going = true;
    if (!alpha_used[v.alpha_curve] && !beta_used[v.beta_curve]) {
      alpha_used[v.alpha_curve] = beta_used[v.beta_curve] = 1;
      current.push_back(next);
      keep_going = go(next + 1, chosen + 1);
      current.pop_back();
      alpha_used[v.alpha_curve] = beta_used[v.beta_curve] = 0;
    }
    if (keep_going) keep_going = go(next + 1, chosen);
    ++alpha_left[v.alpha_curve];
    ++beta_left[v.beta_curve];
    return keep_going;
  };
  return go(0, 0);
}

struct GeneratorList {
  std::vector<Generator> generators;
  bool truncated = false;  // limit reached before exhaustion
};

inline GeneratorList enumerate_generators(const Diagram& d,
                                          std::optional<size_t> limit = std::nullopt) {
  GeneratorList out;
  out.truncated = !for_each_generator(d, [&](const Generator& g) {
    if (limit && out.generators.size() == *limit) return false;
    out.generators.push_back(g);
    return true;
  });
  return out;
}

}  // namespace hfq
