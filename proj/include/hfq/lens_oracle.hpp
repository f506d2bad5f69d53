#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfq/builders.hpp"
#include "hfq/grading.hpp"

namespace hfq {

namespace detail {

inline void check_lens_parameters(long p, long q) {
  if (p <= 0 || q <= 0) throw Error(Errc::invalid_parameters, "need p, q >= 1");
  if (std::gcd(p, q) != 1) throw Error(Errc::invalid_parameters, "need gcd(p,q) = 1");
  if (q > p || (q == p && p != 1))
    throw Error(Errc::invalid_parameters, "need q < p (or p = q = 1)");
}

}  // namespace detail

// Ozsvath-Szabo recursion for the absolute Q-grading of the p generators of
// -L(p,q), with the S^3 level pinned at `base`:
//   tgr_{p,q}(x_{i mod p}) = (pq - (2i+1-p-q)^2) / (4pq) - tgr_{q, p mod q}(x_{i mod q})
// for 0 <= i < p+q.  The index range hits every residue more than once; the
// assignments are checked to be conflict-free.  Only differences of entries
// are consumed downstream, so the base constant cancels.
inline std::vector<Rational> lens_absolute_grading_with_base(long p, long q,
                                                             const Rational& base) {
  if (p == 1) return {base};
  detail::check_lens_parameters(p, q);
  std::vector<Rational> sub = lens_absolute_grading_with_base(q, p % q == 0 ? 1 : p % q, base);
  if (q == 1) sub = {base};  // level (1,0): the single S^3 generator

  std::vector<std::optional<Rational>> vals(p);
  for (long i = 0; i < p + q; ++i) {
    Int dev(2 * i + 1 - p - q);
    Rational term = make_rational(Int(p) * Int(q) - dev * dev, Int(4) * Int(p) * Int(q));
    Rational val = term - sub[i % q];
    auto& slot = vals[i % p];
    if (slot && *slot != val)
      throw Error(Errc::internal, "lens grading recursion assigned conflicting values");
    slot = val;
  }
  std::vector<Rational> out;
  out.reserve(p);
  for (long i = 0; i < p; ++i) out.push_back(*vals[i]);
  return out;
}

inline const std::vector<Rational>& lens_absolute_grading(long p, long q) {
  if (!(p == 1 && q == 1)) detail::check_lens_parameters(p, q);
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::vector<Rational>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find({p, q});
  if (it == memo.end())
    it = memo.emplace(std::make_pair(p, q), lens_absolute_grading_with_base(p, q, Rational(0)))
             .first;
  return it->second;
}

// Closed-form step tgr(x_{i+q mod p}) - tgr(x_i) = (p - 1 - 2i) / p.
inline Rational lens_grading_step(long p, long q, long i) {
  detail::check_lens_parameters(p, q);
  if (i < 0 || i >= p) throw Error(Errc::invalid_parameters, "index must satisfy 0 <= i < p");
  return make_rational(Int(p - 1 - 2 * i), Int(p));
}

struct LensComparisonReport {
  long p = 0;
  long q = 0;
  int pairs_checked = 0;
  std::vector<std::string> discrepancies;

  bool agree() const { return discrepancies.empty(); }
};

// Three-way check on -L(p,q): the grading engine's table against (a) chained
// closed-form steps and (b) differences of the recursion's absolute values.
inline LensComparisonReport compare_lens_gradings(long p, long q) {
  detail::check_lens_parameters(p, q);
  LensComparisonReport rep;
  rep.p = p;
  rep.q = q;

  Diagram d = lens_diagram(static_cast<int>(p), static_cast<int>(q));
  GradingTable table = grading_table(d);
  // Generator index i is {x_i}: singletons enumerate in vertex order.
  const std::vector<Rational>& abs = lens_absolute_grading(p, q);

  std::vector<Rational> chained(p, Rational(0));
  long c = 0;
  Rational acc(0);
  for (long t = 0; t < p; ++t) {
    acc += lens_grading_step(p, q, c);
    c = (c + q) % p;
    if (t + 1 < p) chained[c] = acc;
  }
  if (acc != 0) rep.discrepancies.push_back("closed-form steps do not sum to 0 around the orbit");

  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      std::optional<Rational> engine =
          table.q_grading(static_cast<int>(a), static_cast<int>(b));
      ++rep.pairs_checked;
      if (!engine) {
        rep.discrepancies.push_back("engine left pair (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") ungraded");
        continue;
      }
      Rational by_abs = abs[a] - abs[b];
      Rational by_steps = chained[a] - chained[b];
      if (*engine != by_abs || *engine != by_steps)
        rep.discrepancies.push_back(
            "pair (" + std::to_string(a) + "," + std::to_string(b) + "): engine " +
            to_string(*engine) + ", recursion " + to_string(by_abs) + ", steps " +
            to_string(by_steps));
    }
  return rep;
}

}  // namespace hfq
