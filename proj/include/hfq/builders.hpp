#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "hfq/diagram.hpp"

namespace hfq {

// Genus-1 one-pointed diagram for -L(p,q): the torus with one horizontal
// curve and one curve of slope -p/q.  Vertices x_0..x_{p-1} in order along
// the horizontal curve; square regions D_0..D_{p-1} with the basepoint in
// D_0.  Orientations are chosen so that
//   dd_alpha(D_i) = x_{i+q} - x_{i+q-1} + x_{i-1} - x_i   (indices mod p).
inline Diagram lens_diagram(int p, int q) {
  if (p <= 0 || q <= 0) throw Error(Errc::invalid_parameters, "lens diagram needs p, q >= 1");
  if (std::gcd(p, q) != 1) throw Error(Errc::invalid_parameters, "lens diagram needs gcd(p,q)=1");
  if (q > p || (q == p && p != 1))
    throw Error(Errc::invalid_parameters, "lens diagram needs q < p (or p = q = 1)");

  auto mod = [p](int k) { return ((k % p) + p) % p; };
  std::vector<Vertex> vertices(p, Vertex{0, 0});
  std::vector<Arc> arcs;
  arcs.reserve(2 * p);
  // Arc k: x_k -> x_{k+1} along alpha; arc p+k: x_k -> x_{k+q} along beta.
  for (int k = 0; k < p; ++k) arcs.push_back({k, mod(k + 1), CurveFamily::alpha, 0});
  for (int k = 0; k < p; ++k) arcs.push_back({k, mod(k + q), CurveFamily::beta, 0});

  std::vector<int> alpha_seq(p), beta_seq(p);
  for (int k = 0; k < p; ++k) alpha_seq[k] = k;
  for (int j = 0; j < p; ++j) beta_seq[j] = p + mod(j * q);

  std::vector<Region> regions(p);
  for (int j = 0; j < p; ++j) {
    regions[j].euler_char = 1;
    regions[j].boundary = {{
        {mod(j + q - 1), true},       // alpha arc x_{j+q-1} -> x_{j+q}
        {p + j, false},               // beta arc x_j -> x_{j+q}, backward
        {mod(j - 1), false},          // alpha arc x_{j-1} -> x_j, backward
        {p + mod(j - 1), true},       // beta arc x_{j-1} -> x_{j-1+q}
    }};
  }

  return Diagram(1, std::move(vertices), std::move(arcs), {std::move(alpha_seq)},
                 {std::move(beta_seq)}, std::move(regions), {0});
}

// Genus-1 one-pointed diagram for S^1 x S^2: two isotopic curves meeting
// twice.  Regions: 0 = the annulus (basepoint), 1 and 2 = the two bigons.
// Vertices 0 and 1 give the two generators; the connecting domain from {0}
// to {1} is region 1.
inline Diagram s1_x_s2_diagram() {
  std::vector<Vertex> vertices{{0, 0}, {0, 0}};
  std::vector<Arc> arcs{
      {0, 1, CurveFamily::alpha, 0},  // 0
      {1, 0, CurveFamily::alpha, 0},  // 1
      {0, 1, CurveFamily::beta, 0},   // 2
      {1, 0, CurveFamily::beta, 0},   // 3
  };
  std::vector<Region> regions(3);
  regions[0].euler_char = 0;  // annulus between the parallel curves
  regions[0].boundary = {{{2, true}, {1, true}}, {{0, false}, {3, false}}};
  regions[1].euler_char = 1;
  regions[1].boundary = {{{0, true}, {2, false}}};
  regions[2].euler_char = 1;
  regions[2].boundary = {{{3, true}, {1, false}}};
  return Diagram(1, std::move(vertices), std::move(arcs), {{0, 1}}, {{2, 3}},
                 std::move(regions), {0});
}

namespace detail {

struct RegionRemap {
  // new id per old region, -1 for removed ones
  std::vector<int> map;
};

inline std::vector<BoundaryWord> offset_words(const std::vector<BoundaryWord>& words,
                                              int arc_offset) {
  std::vector<BoundaryWord> out = words;
  for (BoundaryWord& w : out)
    for (BoundaryStep& s : w) s.arc += arc_offset;
  return out;
}

}  // namespace detail

// Connected sum of two one-pointed diagrams: a tube joins the interiors of
// the two basepoint regions, which merge into the single basepoint region of
// the result (chi drops by 2, boundary words live on as separate circles).
// Vertices/arcs/curves of d2 are appended after d1's; the merged region gets
// id 0 and the remaining regions keep their relative order (d1 first).
inline Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (d1.num_basepoints() != 1 || d2.num_basepoints() != 1)
    throw Error(Errc::not_one_pointed, "connected sum requires one-pointed diagrams");
  const int v_off = d1.num_vertices();
  const int a_off = d1.num_arcs();
  const int c_off = d1.generator_rank();

  std::vector<Vertex> vertices = d1.vertices();
  for (Vertex v : d2.vertices())
    vertices.push_back({v.alpha_curve + c_off, v.beta_curve + c_off});

  std::vector<Arc> arcs = d1.arcs();
  for (Arc a : d2.arcs()) arcs.push_back({a.from + v_off, a.to + v_off, a.family, a.curve + c_off});

  auto combine_curves = [&](CurveFamily f) {
    std::vector<std::vector<int>> out = d1.curves(f);
    for (std::vector<int> seq : d2.curves(f)) {
      for (int& e : seq) e += a_off;
      out.push_back(std::move(seq));
    }
    return out;
  };

  const int z1 = d1.basepoint_regions()[0];
  const int z2 = d2.basepoint_regions()[0];
  Region merged;
  merged.euler_char = d1.regions()[z1].euler_char + d2.regions()[z2].euler_char - 2;
  merged.boundary = d1.regions()[z1].boundary;
  for (const BoundaryWord& w : detail::offset_words(d2.regions()[z2].boundary, a_off))
    merged.boundary.push_back(w);

  std::vector<Region> regions{std::move(merged)};
  for (int r = 0; r < d1.num_regions(); ++r) {
    if (r == z1) continue;
    regions.push_back(d1.regions()[r]);
  }
  for (int r = 0; r < d2.num_regions(); ++r) {
    if (r == z2) continue;
    Region reg = d2.regions()[r];
    reg.boundary = detail::offset_words(reg.boundary, a_off);
    regions.push_back(std::move(reg));
  }

  return Diagram(d1.genus() + d2.genus(), std::move(vertices), std::move(arcs),
                 combine_curves(CurveFamily::alpha), combine_curves(CurveFamily::beta),
                 std::move(regions), {0});
}

// Region id translation used by connected_sum: old d1 region -> new id.
inline int connected_sum_region_from_first(const Diagram& d1, int r) {
  const int z1 = d1.basepoint_regions()[0];
  if (r == z1) return 0;
  return r < z1 ? r + 1 : r;
}

// Joins basepoint regions i and j (indices into the basepoint list) by a
// tube: genus goes up by one, the two regions merge (chi_i + chi_j - 2), and
// basepoint j disappears.  Generators and all dd values are unchanged under
// the region reindexing.
inline Diagram merge_basepoints(const Diagram& d, int i, int j) {
  const int ell = d.num_basepoints();
  if (i < 0 || j < 0 || i >= ell || j >= ell || i == j)
    throw Error(Errc::bad_index, "merge needs two distinct basepoint indices");
  if (ell < 2) throw Error(Errc::bad_index, "merge needs at least two basepoints");
  const int ri = d.basepoint_regions()[i];
  const int rj = d.basepoint_regions()[j];

  std::vector<Region> regions;
  regions.reserve(d.num_regions() - 1);
  std::vector<int> remap(d.num_regions(), -1);
  for (int r = 0; r < d.num_regions(); ++r) {
    if (r == rj) continue;
    remap[r] = static_cast<int>(regions.size());
    regions.push_back(d.regions()[r]);
  }
  Region& merged = regions[remap[ri]];
  merged.euler_char += d.regions()[rj].euler_char - 2;
  for (const BoundaryWord& w : d.regions()[rj].boundary) merged.boundary.push_back(w);

  std::vector<int> basepoints;
  for (int b = 0; b < ell; ++b) {
    if (b == j) continue;
    basepoints.push_back(remap[d.basepoint_regions()[b]]);
  }

  return Diagram(d.genus() + 1, d.vertices(), d.arcs(), d.curves(CurveFamily::alpha),
                 d.curves(CurveFamily::beta), std::move(regions), std::move(basepoints));
}

// Region id translation used by merge_basepoints: old region -> new id
// (region of basepoint j maps to the merged region).
inline int merged_region_id(const Diagram& d, int i, int j, int old_region) {
  const int ri = d.basepoint_regions()[i];
  const int rj = d.basepoint_regions()[j];
  int r = old_region == rj ? ri : old_region;
  return r < rj ? r : r - 1;
}

}  // namespace hfq
