#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <utility>
#include <vector>

#include "hfq/diagram.hpp"
#include "hfq/grading.hpp"
#include "hfq/snf.hpp"
#include "hfq/spinc.hpp"
#include "hfq/validate.hpp"

namespace hfq {

// A Z/n arc cocycle classifying a cyclic cover of the underlying 3-manifold.
// Values are attached to the arcs' stored directions; the reverse direction
// implicitly carries the negative.  Validity demands a zero sum along every
// region boundary word (so regions lift) and along every full curve (so the
// pairing descends to H_1 of the manifold, not just the surface).
struct CoveringSpec {
  int n = 1;
  std::vector<int> cocycle;  // one value in [0, n) per arc
};

inline ValidationReport validate_cocycle(const Diagram& d, const CoveringSpec& spec) {
  ValidationReport rep;
  if (spec.n < 1) rep.add("cocycle-order", "spec", "deck group order must be >= 1");
  if (static_cast<int>(spec.cocycle.size()) != d.num_arcs()) {
    rep.add("cocycle-size", "spec",
            "expected one value per arc (" + std::to_string(d.num_arcs()) + ")");
    return rep;
  }
  if (spec.n < 1) return rep;
  for (int e = 0; e < d.num_arcs(); ++e)
    if (spec.cocycle[e] < 0 || spec.cocycle[e] >= spec.n)
      rep.add("cocycle-range", "arc " + std::to_string(e),
              "value " + std::to_string(spec.cocycle[e]) + " outside [0," +
                  std::to_string(spec.n) + ")");
  if (!rep.ok()) return rep;

  for (int r = 0; r < d.num_regions(); ++r)
    for (size_t wi = 0; wi < d.regions()[r].boundary.size(); ++wi) {
      long long sum = 0;
      for (const BoundaryStep& s : d.regions()[r].boundary[wi])
        sum += s.forward ? spec.cocycle[s.arc] : -spec.cocycle[s.arc];
      if (((sum % spec.n) + spec.n) % spec.n != 0)
        rep.add("face-condition", "region " + std::to_string(r) + " word " + std::to_string(wi),
                "cocycle does not sum to 0 mod n along the word");
    }
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    const auto& curves = d.curves(f);
    for (size_t c = 0; c < curves.size(); ++c) {
      long long sum = 0;
      for (int e : curves[c]) sum += spec.cocycle[e];
      if (((sum % spec.n) + spec.n) % spec.n != 0)
        rep.add("curve-condition", std::string(family_name(f)) + " curve " + std::to_string(c),
                "cocycle does not sum to 0 mod n along the curve");
    }
  }
  return rep;
}

// The n-fold cyclic covering diagram together with the lift maps.  Cell
// (x, k) of the cover sits at id x*n + k for every kind of cell.
struct CoverResult {
  Diagram cover;
  int n = 1;
  int base_vertices = 0;
  int base_arcs = 0;
  int base_regions = 0;

  int vertex_lift(int v, int k) const { return v * n + k; }
  int arc_lift(int e, int k) const { return e * n + k; }
  int region_lift(int r, int k) const { return r * n + k; }

  // Total preimage of a generator: one lifted point on every lifted curve.
  Generator generator_lift(const Generator& g) const {
    Generator out;
    out.reserve(g.size() * n);
    for (int v : g)
      for (int k = 0; k < n; ++k) out.push_back(vertex_lift(v, k));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Total preimage of a 2-chain.
  Domain domain_lift(const Domain& a) const {
    Domain out(cover.num_regions(), Int(0));
    for (int r = 0; r < base_regions; ++r)
      for (int k = 0; k < n; ++k) out[region_lift(r, k)] = a[r];
    return out;
  }
};

// Builds the covering Heegaard diagram determined by a valid cocycle: vertex
// (v,k) connects through arc e to (w, k + c(e)); every region and basepoint
// lifts n times.  Throws DisconnectedCover when the cocycle's image along
// cycles generates a proper subgroup of Z/n.
inline CoverResult build_cover(const Diagram& d, const CoveringSpec& spec) {
  {
    ValidationReport rep = validate_cocycle(d, spec);
    if (!rep.ok())
      throw Error(Errc::invalid_cocycle, rep.violations.front().code + " at " +
                                             rep.violations.front().location);
  }
  const int n = spec.n;
  const int nv = d.num_vertices();
  const int na = d.num_arcs();
  const int nr = d.num_regions();
  auto modn = [n](long long k) { return static_cast<int>(((k % n) + n) % n); };

  // Level offset of each arc inside its curve: partial cocycle sums along the
  // curve from its stored starting arc.  Lifted curve (c,k) then carries arc
  // (e, k + offset(e)) and is itself closed by the curve condition.
  std::vector<int> arc_curve_offset(na, 0);
  std::vector<int> vertex_curve_offset_alpha(nv, 0), vertex_curve_offset_beta(nv, 0);
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta}) {
    for (const std::vector<int>& seq : d.curves(f)) {
      int acc = 0;
      for (int e : seq) {
        arc_curve_offset[e] = acc;
        int v = d.arcs()[e].from;
        (f == CurveFamily::alpha ? vertex_curve_offset_alpha : vertex_curve_offset_beta)[v] = acc;
        acc = modn(acc + spec.cocycle[e]);
      }
    }
  }

  std::vector<Vertex> vertices(nv * n);
  for (int v = 0; v < nv; ++v)
    for (int k = 0; k < n; ++k)
      vertices[v * n + k] = {
          d.vertices()[v].alpha_curve * n + modn(k - vertex_curve_offset_alpha[v]),
          d.vertices()[v].beta_curve * n + modn(k - vertex_curve_offset_beta[v])};

  std::vector<Arc> arcs(na * n);
  for (int e = 0; e < na; ++e)
    for (int k = 0; k < n; ++k)
      arcs[e * n + k] = {d.arcs()[e].from * n + k,
                         d.arcs()[e].to * n + modn(k + spec.cocycle[e]),
                         d.arcs()[e].family,
                         d.arcs()[e].curve * n + modn(k - arc_curve_offset[e])};

  auto lift_curves = [&](CurveFamily f) {
    std::vector<std::vector<int>> out;
    for (const std::vector<int>& seq : d.curves(f))
      for (int k = 0; k < n; ++k) {
        std::vector<int> lifted;
        lifted.reserve(seq.size());
        int level = k;
        for (int e : seq) {
          lifted.push_back(e * n + level);
          level = modn(level + spec.cocycle[e]);
        }
        out.push_back(std::move(lifted));
      }
    return out;
  };

  std::vector<Region> regions(nr * n);
  for (int r = 0; r < nr; ++r)
    for (int k = 0; k < n; ++k) {
      Region& reg = regions[r * n + k];
      reg.euler_char = d.regions()[r].euler_char;
      for (const BoundaryWord& w : d.regions()[r].boundary) {
        BoundaryWord lifted;
        lifted.reserve(w.size());
        int level = k;
        for (const BoundaryStep& s : w) {
          if (s.forward) {
            lifted.push_back({s.arc * n + level, true});
            level = modn(level + spec.cocycle[s.arc]);
          } else {
            level = modn(level - spec.cocycle[s.arc]);
            lifted.push_back({s.arc * n + level, false});
          }
        }
        if (level != k)
          throw Error(Errc::internal, "face condition violated while lifting a word");
        reg.boundary.push_back(std::move(lifted));
      }
    }

  std::vector<int> basepoints;
  for (int b : d.basepoint_regions())
    for (int k = 0; k < n; ++k) basepoints.push_back(b * n + k);

  // Connectivity of the covering surface.
  {
    detail::UnionFind uf(nv * n);
    for (const Arc& a : arcs) uf.unite(a.from, a.to);
    for (const Region& reg : regions) {
      int first = -1;
      for (const BoundaryWord& w : reg.boundary) {
        int v = detail::step_start(w.front(), arcs);
        if (first == -1)
          first = v;
        else
          uf.unite(first, v);
      }
    }
    if (uf.components() != 1)
      throw Error(Errc::disconnected_cover,
                  "cocycle values generate a proper subgroup of Z/n; cover is disconnected");
  }

  int cover_genus = n * d.genus() - n + 1;
  Diagram cover(cover_genus, std::move(vertices), std::move(arcs),
                lift_curves(CurveFamily::alpha), lift_curves(CurveFamily::beta),
                std::move(regions), std::move(basepoints));
  return CoverResult{std::move(cover), n, nv, na, nr};
}

// Searches for a valid connected Z/n cocycle (n = torsion order of the
// difference class) whose cover merges the Spin^c classes of the lifts.
// Candidates are the solutions of the face and curve conditions mod n,
// gauge-fixed to vanish on a spanning tree of the curve graph (one candidate
// per cohomology class), tried in lexicographic order.
inline CoveringSpec find_trivializing_cocycle(const Diagram& d, const Generator& x,
                                              const Generator& y) {
  BoundaryLattice lattice(d);
  std::optional<Int> order = lattice.order_of_difference(d, x, y);
  if (!order)
    throw Error(Errc::infinite_order, "difference class has infinite order; no finite cover");
  if (!order->fits_sint_p())
    throw Error(Errc::search_failed, "torsion order too large to search");
  const int n = static_cast<int>(order->get_si());
  if (n == 1) return CoveringSpec{1, std::vector<int>(d.num_arcs(), 0)};

  // Spanning tree of the graph formed by the curves (BFS in arc-id order).
  std::vector<char> in_tree(d.num_arcs(), 0), seen(d.num_vertices(), 0);
  std::deque<int> queue;
  seen[0] = 1;
  queue.push_back(0);
  std::vector<std::vector<std::pair<int, int>>> incident(d.num_vertices());  // (arc, other)
  for (int e = 0; e < d.num_arcs(); ++e) {
    incident[d.arcs()[e].from].push_back({e, d.arcs()[e].to});
    incident[d.arcs()[e].to].push_back({e, d.arcs()[e].from});
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : incident[v])
      if (!seen[w]) {
        seen[w] = 1;
        in_tree[e] = 1;
        queue.push_back(w);
      }
  }
  std::vector<int> free_arcs;
  for (int e = 0; e < d.num_arcs(); ++e)
    if (!in_tree[e]) free_arcs.push_back(e);
  std::vector<int> free_index(d.num_arcs(), -1);
  for (size_t i = 0; i < free_arcs.size(); ++i) free_index[free_arcs[i]] = static_cast<int>(i);
  const int k = static_cast<int>(free_arcs.size());

  // Face and curve conditions restricted to the free arcs.
  IntMatrix conditions;
  for (int r = 0; r < d.num_regions(); ++r)
    for (const BoundaryWord& w : d.regions()[r].boundary) {
      std::vector<Int> row(k, Int(0));
      for (const BoundaryStep& s : w)
        if (free_index[s.arc] >= 0) row[free_index[s.arc]] += s.forward ? 1 : -1;
      conditions.push_back(std::move(row));
    }
  for (CurveFamily f : {CurveFamily::alpha, CurveFamily::beta})
    for (const std::vector<int>& seq : d.curves(f)) {
      std::vector<Int> row(k, Int(0));
      for (int e : seq)
        if (free_index[e] >= 0) row[free_index[e]] += 1;
      conditions.push_back(std::move(row));
    }

  // Solutions of (conditions) * c = 0 mod n: integer kernel of [L | n*I],
  // projected to the free-arc coordinates.
  const int rows = static_cast<int>(conditions.size());
  IntMatrix extended(rows, std::vector<Int>(k + rows, Int(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < k; ++j) extended[i][j] = conditions[i][j];
    extended[i][k + i] = n;
  }
  SmithDecomposition snf = smith_decompose(std::move(extended));
  std::vector<std::vector<int>> group_generators;
  for (int j = snf.rank; j < k + rows; ++j) {
    std::vector<int> gen(k, 0);
    bool nonzero = false;
    for (int i = 0; i < k; ++i) {
      Int v = snf.right[i][j] % n;
      if (v < 0) v += n;
      gen[i] = static_cast<int>(v.get_si());
      nonzero |= gen[i] != 0;
    }
    if (nonzero) group_generators.push_back(std::move(gen));
  }

  std::set<std::vector<int>> solutions{std::vector<int>(k, 0)};
  std::deque<std::vector<int>> work(solutions.begin(), solutions.end());
  constexpr size_t kSearchCap = 200000;
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.front());
    work.pop_front();
    for (const std::vector<int>& g : group_generators) {
      std::vector<int> next(k);
      for (int i = 0; i < k; ++i) next[i] = (cur[i] + g[i]) % n;
      if (solutions.insert(next).second) {
        if (solutions.size() > kSearchCap)
          throw Error(Errc::search_failed, "cocycle solution space too large to enumerate");
        work.push_back(std::move(next));
      }
    }
  }

  for (const std::vector<int>& sol : solutions) {  // std::set iterates lexicographically
    CoveringSpec spec;
    spec.n = n;
    spec.cocycle.assign(d.num_arcs(), 0);
    for (int i = 0; i < k; ++i) spec.cocycle[free_arcs[i]] = sol[i];
    if (!validate_cocycle(d, spec).ok()) continue;
    try {
      CoverResult cover = build_cover(d, spec);
      BoundaryLattice up(cover.cover);
      if (up.solve(cover.cover, cover.generator_lift(x), cover.generator_lift(y), Int(1)))
        return spec;
    } catch (const Error& err) {
      if (err.code() != Errc::disconnected_cover) throw;
    }
  }
  throw Error(Errc::search_failed, "no trivializing cocycle found at the torsion order");
}

struct ScalingCheck {
  int n = 1;
  Rational downstairs;     // Gr(x, y) in the base diagram
  Rational upstairs;       // gr (or Gr) of the lifted generators
  bool lifts_equivalent = false;
  bool pass = false;
};

// Checks n * Gr(x, y) == gr(lift x, lift y) (or Gr of the lifts when they
// stay inequivalent upstairs) for the cover classified by the given cocycle.
inline ScalingCheck verify_scaling(const Diagram& d, const CoveringSpec& spec,
                                   const Generator& x, const Generator& y) {
  {
    ValidationReport rep = validate_cocycle(d, spec);
    if (!rep.ok())
      throw Error(Errc::invalid_cocycle, rep.violations.front().code + " at " +
                                             rep.violations.front().location);
  }
  ScalingCheck check;
  check.n = spec.n;
  BoundaryLattice base(d);
  check.downstairs = relative_q_grading(d, base, x, y);

  CoverResult cover = build_cover(d, spec);
  Generator lx = cover.generator_lift(x);
  Generator ly = cover.generator_lift(y);
  BoundaryLattice up(cover.cover);
  if (up.solve(cover.cover, lx, ly, Int(1))) {
    check.lifts_equivalent = true;
    check.upstairs = Rational(relative_z_grading(cover.cover, up, lx, ly));
  } else {
    check.lifts_equivalent = false;
    check.upstairs = relative_q_grading(cover.cover, up, lx, ly);
  }
  check.pass = Rational(check.n) * check.downstairs == check.upstairs;
  return check;
}

}  // namespace hfq
