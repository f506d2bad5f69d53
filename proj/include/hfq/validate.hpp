#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hfq/diagram.hpp"

namespace hfq {

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string code, std::string location, std::string detail) {
    violations.push_back({std::move(code), std::move(location), std::move(detail)});
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

  int components() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

 private:
  std::vector<int> parent_;
};

// Components of the surface cut along one family: regions glued across the
// other family's arcs.
inline void check_family_components(const Diagram& d, CurveFamily cut, ValidationReport& rep) {
  const CurveFamily glue = cut == CurveFamily::alpha ? CurveFamily::beta : CurveFamily::alpha;
  UnionFind uf(d.num_regions());
  for (int e = 0; e < d.num_arcs(); ++e)
    if (d.arcs()[e].family == glue) uf.unite(d.region_left_of(e), d.region_right_of(e));
  std::vector<int> bp_count(d.num_regions(), 0);
  for (int b : d.basepoint_regions()) ++bp_count[uf.find(b)];
  int comps = uf.components();
  if (comps != d.num_basepoints())
    rep.add(std::string(family_name(cut)) + "-components", "diagram",
            "surface minus " + std::string(family_name(cut)) + " curves has " +
                std::to_string(comps) + " components, expected " +
                std::to_string(d.num_basepoints()));
  for (int r = 0; r < d.num_regions(); ++r)
    if (uf.find(r) == r && bp_count[r] != 1)
      rep.add(std::string(family_name(cut)) + "-components",
              "component of region " + std::to_string(r),
              "contains " + std::to_string(bp_count[r]) + " basepoints, expected 1");
}

}  // namespace detail

// Checks every diagram invariant; the report is empty iff the diagram is
// valid.  Structural problems found at construction are included verbatim.
inline ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  rep.violations = d.structural_problems();

  if (d.genus() < 1) rep.add("genus", "diagram", "genus must be at least 1");
  const int ell = d.num_basepoints();
  if (ell < 1) rep.add("basepoints", "diagram", "at least one basepoint required");

  const int expected_curves = d.genus() + ell - 1;
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    int n = static_cast<int>(d.curves(f).size());
    if (n != expected_curves)
      rep.add("curve-count", family_name(f),
              std::to_string(n) + " curves, expected g+l-1 = " + std::to_string(expected_curves));
  }

  // Basepoint regions pairwise distinct (range errors are structural).
  {
    std::set<int> seen;
    for (int b : d.basepoint_regions())
      if (b >= 0 && b < d.num_regions() && !seen.insert(b).second)
        rep.add("basepoint-duplicate", "basepoints",
                "region " + std::to_string(b) + " holds more than one basepoint");
  }

  // Curves: nonempty, arcs consecutive, each vertex visited exactly once,
  // vertex curve fields consistent, arcs partitioned among curves.
  std::vector<int> arc_owner(d.num_arcs(), -1);
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    const auto& curves = d.curves(f);
    std::vector<int> vertex_curve(d.num_vertices(), -1);
    for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
      const std::string loc = std::string(family_name(f)) + " curve " + std::to_string(c);
      const std::vector<int>& seq = curves[c];
      if (seq.empty()) {
        rep.add("curve-empty", loc, "curve has no arcs (needs at least one vertex)");
        continue;
      }
      bool arcs_ok = true;
      for (int e : seq) {
        if (e < 0 || e >= d.num_arcs()) {
          arcs_ok = false;
          continue;
        }
        if (d.arcs()[e].family != f || d.arcs()[e].curve != c)
          rep.add("arc-curve-field", loc,
                  "arc " + std::to_string(e) + " is labeled for another curve");
        if (arc_owner[e] != -1)
          rep.add("arc-shared", loc, "arc " + std::to_string(e) + " appears in two curves");
        arc_owner[e] = c;
      }
      if (!arcs_ok) continue;
      for (size_t i = 0; i < seq.size(); ++i) {
        const Arc& cur = d.arcs()[seq[i]];
        const Arc& nxt = d.arcs()[seq[(i + 1) % seq.size()]];
        if (cur.to != nxt.from)
          rep.add("curve-continuity", loc,
                  "arc " + std::to_string(seq[i]) + " does not end where the next begins");
        if (cur.from < 0 || cur.from >= d.num_vertices()) continue;
        if (vertex_curve[cur.from] != -1)
          rep.add("curve-revisit", loc,
                  "vertex " + std::to_string(cur.from) + " visited more than once in " +
                      family_name(f));
        vertex_curve[cur.from] = c;
      }
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
      int expected =
          f == CurveFamily::alpha ? d.vertices()[v].alpha_curve : d.vertices()[v].beta_curve;
      if (vertex_curve[v] == -1)
        rep.add("vertex-uncovered", "vertex " + std::to_string(v),
                std::string("not visited by any ") + family_name(f) + " curve");
      else if (vertex_curve[v] != expected)
        rep.add("vertex-curve-field", "vertex " + std::to_string(v),
                std::string(family_name(f)) + " curve field is " + std::to_string(expected) +
                    " but the curve visiting it is " + std::to_string(vertex_curve[v]));
    }
  }
  for (int e = 0; e < d.num_arcs(); ++e)
    if (arc_owner[e] == -1)
      rep.add("arc-orphan", "arc " + std::to_string(e), "belongs to no curve");

  // Region surface data: chi <= 1 and chi = 2 - 2h - b for integer h >= 0.
  for (int r = 0; r < d.num_regions(); ++r) {
    const Region& reg = d.regions()[r];
    const std::string loc = "region " + std::to_string(r);
    int b = static_cast<int>(reg.boundary.size());
    if (b < 1) rep.add("region-boundary", loc, "region has no boundary words");
    if (reg.euler_char > 1)
      rep.add("region-euler-char", loc, "chi = " + std::to_string(reg.euler_char) + " > 1");
    int twice_genus = 2 - reg.euler_char - b;
    if (b >= 1 && (twice_genus < 0 || twice_genus % 2 != 0))
      rep.add("region-genus", loc,
              "chi = " + std::to_string(reg.euler_char) + " with " + std::to_string(b) +
                  " boundary circles is not a surface");
  }

  // Euler characteristic gluing identity: 2 - 2g = V - E + sum chi(D_i).
  {
    long long chi_sum = 0;
    for (const Region& reg : d.regions()) chi_sum += reg.euler_char;
    long long lhs = 2 - 2 * static_cast<long long>(d.genus());
    long long rhs = d.num_vertices() - d.num_arcs() + chi_sum;
    if (lhs != rhs)
      rep.add("euler-characteristic", "diagram",
              "2-2g = " + std::to_string(lhs) + " but V-E+sum(chi) = " + std::to_string(rhs));
  }

  if (!d.analyzable()) return rep;

  // Each vertex is a transverse crossing: its four quadrants are covered
  // exactly four times in total (corners count 1, straight passes count 2).
  for (int v = 0; v < d.num_vertices(); ++v) {
    int total = 0;
    for (const QuadrantUse& q : d.quadrants_at(v)) total += q.count;
    if (total != 4)
      rep.add("quadrant-coverage", "vertex " + std::to_string(v),
              "quadrants covered " + std::to_string(total) + " times, expected 4");
  }

  // Connectivity of the whole surface.
  {
    detail::UnionFind uf(d.num_regions());
    for (int e = 0; e < d.num_arcs(); ++e) uf.unite(d.region_left_of(e), d.region_right_of(e));
    if (d.num_regions() > 0 && uf.components() != 1)
      rep.add("connectivity", "diagram", "surface is not connected");
  }

  // One basepoint per component of the surface cut along each family.
  detail::check_family_components(d, CurveFamily::alpha, rep);
  detail::check_family_components(d, CurveFamily::beta, rep);

  return rep;
}

}  // namespace hfq
