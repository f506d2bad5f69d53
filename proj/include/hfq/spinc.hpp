#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hfq/diagram.hpp"
#include "hfq/snf.hpp"

namespace hfq {

// Boundary matrix of the hatted domain group: one column per non-basepoint
// region holding dd_alpha of that unit domain, one row per vertex.  The Smith
// decomposition is computed once at construction; every query afterwards is
// read-only.
class BoundaryLattice {
 public:
  explicit BoundaryLattice(const Diagram& d) {
    rows_ = d.num_vertices();
    for (int r = 0; r < d.num_regions(); ++r)
      if (!d.is_basepoint_region(r)) columns_.push_back(r);
    IntMatrix m(rows_, std::vector<Int>(columns_.size(), Int(0)));
    for (size_t j = 0; j < columns_.size(); ++j) {
      Domain unit = d.zero_domain();
      unit[columns_[j]] = 1;
      ZeroChain col = dd_alpha(d, unit);
      for (int v = 0; v < rows_; ++v) m[v][j] = col[v];
    }
    matrix_ = m;
    smith_ = smith_decompose(std::move(m));
  }

  const std::vector<int>& column_regions() const { return columns_; }
  const IntMatrix& matrix() const { return matrix_; }
  const SmithDecomposition& smith() const { return smith_; }

  // Transformed right-hand side left * (y - x).
  std::vector<Int> transformed_difference(const Diagram& d, const Generator& x,
                                          const Generator& y) const {
    return mat_vec(smith_.left, generator_difference(d, x, y));
  }

  // Minimal n >= 1 with n*(y-x) in the column lattice, read off the diagonal
  // divisibility conditions; nullopt when no multiple lies in it.
  std::optional<Int> order_of_difference(const Diagram& d, const Generator& x,
                                         const Generator& y) const {
    std::vector<Int> c = transformed_difference(d, x, y);
    for (int i = smith_.rank; i < rows_; ++i)
      if (c[i] != 0) return std::nullopt;  // nonzero component in the free part
    Int n(1);
    for (int i = 0; i < smith_.rank; ++i) {
      if (c[i] == 0) continue;
      Int need = smith_.diagonal[i] / gcd(smith_.diagonal[i], c[i]);
      n = lcm(n, need);
    }
    return n;
  }

  // Some hatted domain A with dd_alpha(A) = n*(y-x), or nullopt.  The output
  // is re-verified against the equation before being returned.
  std::optional<Domain> solve(const Diagram& d, const Generator& x, const Generator& y,
                              const Int& n) const {
    std::vector<Int> c = transformed_difference(d, x, y);
    for (int i = smith_.rank; i < rows_; ++i)
      if (c[i] != 0) return std::nullopt;
    std::vector<Int> t(columns_.size(), Int(0));
    for (int i = 0; i < smith_.rank; ++i) {
      Int num = n * c[i];
      if (num % smith_.diagonal[i] != 0) return std::nullopt;
      t[i] = num / smith_.diagonal[i];
    }
    std::vector<Int> a = mat_vec(smith_.right, t);
    Domain domain = d.zero_domain();
    for (size_t j = 0; j < columns_.size(); ++j) domain[columns_[j]] = a[j];

    ZeroChain got = dd_alpha(d, domain);
    ZeroChain want = generator_difference(d, x, y);
    for (int v = 0; v < rows_; ++v)
      if (got[v] != n * want[v])
        throw Error(Errc::internal, "solver output failed dd_alpha re-verification");
    return domain;
  }

  // Z-basis of {hatted A : dd_alpha(A) = 0}: the trailing columns of the
  // right transform.
  std::vector<Domain> kernel_basis(const Diagram& d) const {
    std::vector<Domain> basis;
    for (int j = smith_.rank; j < static_cast<int>(columns_.size()); ++j) {
      Domain domain = d.zero_domain();
      for (size_t i = 0; i < columns_.size(); ++i) domain[columns_[i]] = smith_.right[i][j];
      basis.push_back(std::move(domain));
    }
    return basis;
  }

  // Signature separating Spin^c classes: coordinates of left*(sum of the
  // generator's vertices), reduced mod d_i on the torsion part and kept exact
  // on the free part.  Two generators are equivalent iff signatures agree.
  std::vector<Int> signature(const Diagram& d, const Generator& g) const {
    ZeroChain ind(d.num_vertices(), Int(0));
    for (int v : g) ind[v] += 1;
    std::vector<Int> c = mat_vec(smith_.left, ind);
    for (int i = 0; i < smith_.rank; ++i) {
      c[i] %= smith_.diagonal[i];
      if (c[i] < 0) c[i] += smith_.diagonal[i];
    }
    return c;
  }

 private:
  int rows_ = 0;
  std::vector<int> columns_;
  IntMatrix matrix_;
  SmithDecomposition smith_;
};

inline std::optional<Domain> solve_domain(const Diagram& d, const Generator& x,
                                          const Generator& y, const Int& n) {
  if (n <= 0) throw Error(Errc::invalid_parameters, "solve_domain needs n >= 1");
  return BoundaryLattice(d).solve(d, x, y, n);
}

// Minimal n with a connecting domain in pi2(nx, ny); nullopt = infinite order.
inline std::optional<Int> torsion_order(const Diagram& d, const Generator& x,
                                        const Generator& y) {
  return BoundaryLattice(d).order_of_difference(d, x, y);
}

inline std::vector<Domain> periodic_domain_basis(const Diagram& d) {
  return BoundaryLattice(d).kernel_basis(d);
}

// <c1 of the generator's class, P> = e(P) + 2 n_x(P); the class is torsion
// iff this vanishes for every periodic domain.
inline bool class_is_torsion(const Diagram& d, const std::vector<Domain>& periodic_basis,
                             const Generator& x) {
  for (const Domain& p : periodic_basis)
    if (euler_measure(d, p) + 2 * point_measure(d, x, p) != 0) return false;
  return true;
}

struct SpincPartition {
  std::vector<Generator> generators;      // lexicographic enumeration order
  std::vector<std::vector<int>> classes;  // generator indices, each sorted
  std::vector<int> class_of;              // generator index -> class index
  std::vector<bool> class_torsion;        // c1 torsion flag per class
  // order[c][c']: torsion order of the difference, nullopt = infinite
  std::vector<std::vector<std::optional<Int>>> class_pair_order;
};

inline SpincPartition spinc_partition(const Diagram& d, const BoundaryLattice& lattice) {
  SpincPartition part;
  part.generators = enumerate_generators(d).generators;
  std::map<std::vector<Int>, int> by_signature;
  for (size_t g = 0; g < part.generators.size(); ++g) {
    std::vector<Int> sig = lattice.signature(d, part.generators[g]);
    auto [it, inserted] = by_signature.try_emplace(std::move(sig), part.classes.size());
    if (inserted) part.classes.emplace_back();
    part.classes[it->second].push_back(static_cast<int>(g));
    part.class_of.push_back(it->second);
  }

  std::vector<Domain> periodic = lattice.kernel_basis(d);
  for (const std::vector<int>& cls : part.classes) {
    bool torsion = class_is_torsion(d, periodic, part.generators[cls.front()]);
    if (cls.size() > 1 &&
        torsion != class_is_torsion(d, periodic, part.generators[cls[1]]))
      throw Error(Errc::internal, "torsion flag differs within a Spin^c class");
    part.class_torsion.push_back(torsion);
  }

  const int nc = static_cast<int>(part.classes.size());
  part.class_pair_order.assign(nc, std::vector<std::optional<Int>>(nc));
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b)
      part.class_pair_order[a][b] =
          a == b ? std::optional<Int>(Int(1))
                 : lattice.order_of_difference(d, part.generators[part.classes[a].front()],
                                               part.generators[part.classes[b].front()]);
  return part;
}

inline SpincPartition spinc_partition(const Diagram& d) {
  return spinc_partition(d, BoundaryLattice(d));
}

}  // namespace hfq
