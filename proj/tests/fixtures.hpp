#pragma once

#include <utility>
#include <vector>

#include "hfq/builders.hpp"
#include "hfq/diagram.hpp"

namespace hfq::fixtures {

// Two-pointed genus-1 diagram (a grid of two parallel horizontal and two
// parallel vertical curves on the torus): 4 vertices, 4 square regions,
// basepoints in two diagonal squares.  Underlying manifold is S^3, seen
// through a 2-pointed diagram.
inline Diagram grid_two_pointed() {
  // vertices: 0 = a0^b0, 1 = a0^b1, 2 = a1^b0, 3 = a1^b1
  std::vector<Vertex> vertices{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<Arc> arcs{
      {0, 1, CurveFamily::alpha, 0},  // 0: a00
      {1, 0, CurveFamily::alpha, 0},  // 1: a01
      {2, 3, CurveFamily::alpha, 1},  // 2: a10
      {3, 2, CurveFamily::alpha, 1},  // 3: a11
      {0, 2, CurveFamily::beta, 0},   // 4: b00
      {2, 0, CurveFamily::beta, 0},   // 5: b01
      {1, 3, CurveFamily::beta, 1},   // 6: b10
      {3, 1, CurveFamily::beta, 1},   // 7: b11
  };
  std::vector<Region> regions(4);
  // region 0 (basepoint z1): central square, corners 0,1,3,2
  regions[0].euler_char = 1;
  regions[0].boundary = {{{0, true}, {6, true}, {2, false}, {4, false}}};
  // region 1 (basepoint z2): opposite square
  regions[1].euler_char = 1;
  regions[1].boundary = {{{3, true}, {5, true}, {1, false}, {7, false}}};
  // region 2: right square
  regions[2].euler_char = 1;
  regions[2].boundary = {{{1, true}, {4, true}, {3, false}, {6, false}}};
  // region 3: top square
  regions[3].euler_char = 1;
  regions[3].boundary = {{{2, true}, {7, true}, {0, false}, {5, false}}};
  return Diagram(1, std::move(vertices), std::move(arcs), {{0, 1}, {2, 3}}, {{4, 5}, {6, 7}},
                 std::move(regions), {0, 1});
}

// Small deterministic corpus of valid diagrams for property tests.
inline std::vector<std::pair<const char*, Diagram>> small_corpus() {
  std::vector<std::pair<const char*, Diagram>> out;
  out.emplace_back("lens(2,1)", lens_diagram(2, 1));
  out.emplace_back("lens(3,1)", lens_diagram(3, 1));
  out.emplace_back("lens(5,1)", lens_diagram(5, 1));
  out.emplace_back("lens(5,2)", lens_diagram(5, 2));
  out.emplace_back("lens(6,1)", lens_diagram(6, 1));
  out.emplace_back("lens(7,3)", lens_diagram(7, 3));
  out.emplace_back("lens(8,3)", lens_diagram(8, 3));
  out.emplace_back("s1xs2", s1_x_s2_diagram());
  out.emplace_back("grid", grid_two_pointed());
  out.emplace_back("lens(2,1)#lens(3,1)", connected_sum(lens_diagram(2, 1), lens_diagram(3, 1)));
  out.emplace_back("lens(2,1)#lens(2,1)", connected_sum(lens_diagram(2, 1), lens_diagram(2, 1)));
  out.emplace_back("s1xs2#lens(3,1)", connected_sum(s1_x_s2_diagram(), lens_diagram(3, 1)));
  return out;
}

}  // namespace hfq::fixtures
