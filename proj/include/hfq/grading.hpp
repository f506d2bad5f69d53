#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hfq/diagram.hpp"
#include "hfq/spinc.hpp"

namespace hfq {

// gr(x, y) = e(A) + n_x(A) + n_y(A) for any A in pi2(x, y); defined within a
// torsion Spin^c class and independent of the choice of A.
inline Int relative_z_grading(const Diagram& d, const BoundaryLattice& lattice,
                              const Generator& x, const Generator& y) {
  if (!class_is_torsion(d, lattice.kernel_basis(d), x))
    throw Error(Errc::non_torsion_class, "relative Z-grading needs a torsion Spin^c class");
  std::optional<Domain> a = lattice.solve(d, x, y, Int(1));
  if (!a)
    throw Error(Errc::different_spinc_class,
                "generators lie in different Spin^c classes");
  Rational val = euler_measure(d, *a) + point_measure(d, x, *a) + point_measure(d, y, *a);
  if (!is_integer(val))
    throw Error(Errc::internal, "relative Z-grading did not reduce to an integer");
  return val.get_num();
}

inline Int relative_z_grading(const Diagram& d, const Generator& x, const Generator& y) {
  return relative_z_grading(d, BoundaryLattice(d), x, y);
}

// Gr(x, y) = (1/n) [e(A) + n_x(A) + n_y(A)] with n the torsion order of the
// difference class and A any element of pi2(nx, ny).
inline Rational relative_q_grading(const Diagram& d, const BoundaryLattice& lattice,
                                   const Generator& x, const Generator& y) {
  std::vector<Domain> periodic = lattice.kernel_basis(d);
  if (!class_is_torsion(d, periodic, x) || !class_is_torsion(d, periodic, y))
    throw Error(Errc::non_torsion_class, "relative Q-grading needs torsion Spin^c classes");
  std::optional<Int> n = lattice.order_of_difference(d, x, y);
  if (!n)
    throw Error(Errc::infinite_order, "difference of Spin^c classes has infinite order");
  std::optional<Domain> a = lattice.solve(d, x, y, *n);
  if (!a) throw Error(Errc::internal, "no domain at the computed torsion order");
  Rational val = euler_measure(d, *a) + point_measure(d, x, *a) + point_measure(d, y, *a);
  return val / Rational(*n);
}

inline Rational relative_q_grading(const Diagram& d, const Generator& x, const Generator& y) {
  return relative_q_grading(d, BoundaryLattice(d), x, y);
}

// Full grading data of a diagram.  Generators in non-torsion classes carry no
// potential and are excluded from the Gr columns.  Within each torsion class
// the integer column is normalized so the lexicographically least member
// sits at 0.
struct GradingTable {
  SpincPartition partition;
  std::vector<std::optional<Rational>> potential;  // Gr(gen, reference), per generator
  std::vector<std::optional<Int>> z_grading;       // per generator, nullopt if non-torsion

  int num_generators() const { return static_cast<int>(partition.generators.size()); }

  bool graded(int g) const { return potential[g].has_value(); }

  // Gr(a, b); nullopt when either class is non-torsion.
  std::optional<Rational> q_grading(int a, int b) const {
    if (!potential[a] || !potential[b]) return std::nullopt;
    return Rational(*potential[a] - *potential[b]);
  }
};

inline GradingTable grading_table(const Diagram& d, const BoundaryLattice& lattice) {
  GradingTable table;
  table.partition = spinc_partition(d, lattice);
  const auto& part = table.partition;
  const int ng = static_cast<int>(part.generators.size());
  table.potential.assign(ng, std::nullopt);
  table.z_grading.assign(ng, std::nullopt);

  int reference = -1;
  for (int g = 0; g < ng && reference < 0; ++g)
    if (part.class_torsion[part.class_of[g]]) reference = g;
  if (reference < 0) return table;  // nothing graded

  for (int g = 0; g < ng; ++g) {
    if (!part.class_torsion[part.class_of[g]]) continue;
    table.potential[g] =
        g == reference
            ? Rational(0)
            : relative_q_grading(d, lattice, part.generators[g], part.generators[reference]);
  }
  for (size_t c = 0; c < part.classes.size(); ++c) {
    if (!part.class_torsion[c]) continue;
    const Rational& base = *table.potential[part.classes[c].front()];
    for (int g : part.classes[c]) {
      Rational rel = *table.potential[g] - base;
      if (!is_integer(rel))
        throw Error(Errc::internal, "within-class grading is not an integer");
      table.z_grading[g] = rel.get_num();
    }
  }
  return table;
}

inline GradingTable grading_table(const Diagram& d) {
  return grading_table(d, BoundaryLattice(d));
}

inline std::string generator_name(int index) { return "g" + std::to_string(index); }

inline std::string generator_vertices(const Generator& g) {
  std::string s = "{";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + "}";
}

inline std::string to_text(const GradingTable& t) {
  std::ostringstream os;
  const auto& part = t.partition;
  os << "generators: " << part.generators.size() << "\n";
  for (size_t g = 0; g < part.generators.size(); ++g)
    os << "  " << generator_name(static_cast<int>(g)) << " = "
       << generator_vertices(part.generators[g]) << "\n";
  os << "spinc classes: " << part.classes.size() << "\n";
  for (size_t c = 0; c < part.classes.size(); ++c) {
    os << "  class " << c << (part.class_torsion[c] ? " (torsion):" : " (non-torsion):");
    for (int g : part.classes[c]) os << " " << generator_name(g);
    os << "\n";
  }
  os << "torsion orders (class pairs):\n";
  for (size_t a = 0; a < part.classes.size(); ++a)
    for (size_t b = a + 1; b < part.classes.size(); ++b) {
      const auto& n = part.class_pair_order[a][b];
      os << "  (" << a << "," << b << "): " << (n ? to_string(*n) : "infinite") << "\n";
    }
  os << "gr (torsion classes, least member at 0):\n";
  for (size_t g = 0; g < part.generators.size(); ++g)
    if (t.z_grading[g])
      os << "  " << generator_name(static_cast<int>(g)) << ": " << to_string(*t.z_grading[g])
         << "\n";
  os << "Gr (row, col):\n";
  for (size_t a = 0; a < part.generators.size(); ++a) {
    os << "  " << generator_name(static_cast<int>(a)) << ":";
    for (size_t b = 0; b < part.generators.size(); ++b) {
      auto v = t.q_grading(static_cast<int>(a), static_cast<int>(b));
      os << " " << (v ? to_string(*v) : "-");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hfq
