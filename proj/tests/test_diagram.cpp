#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "hfq/builders.hpp"
#include "hfq/diagram.hpp"
#include "hfq/validate.hpp"

using namespace hfq;

namespace {

Domain random_domain(const Diagram& d, std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  Domain a = d.zero_domain();
  for (int r = 0; r < d.num_regions(); ++r) a[r] = coeff(rng);
  return a;
}

// Reference enumeration: all k-subsets of vertices filtered by the
// one-point-per-curve condition.
std::vector<Generator> naive_generators(const Diagram& d) {
  const int k = d.generator_rank();
  const int nv = d.num_vertices();
  std::vector<Generator> out;
  std::vector<int> pick;
  std::function<void(int)> go = [&](int next) {
    if (static_cast<int>(pick.size()) == k) {
      std::set<int> alpha, beta;
      for (int v : pick) {
        alpha.insert(d.vertices()[v].alpha_curve);
        beta.insert(d.vertices()[v].beta_curve);
      }
      if (static_cast<int>(alpha.size()) == k && static_cast<int>(beta.size()) == k)
        out.push_back(pick);
      return;
    }
    if (next >= nv) return;
    pick.push_back(next);
    go(next + 1);
    pick.pop_back();
    go(next + 1);
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("constructed diagrams validate cleanly") {
  for (auto& [name, d] : fixtures::small_corpus()) {
    INFO(name);
    ValidationReport rep = validate(d);
    for (const Violation& v : rep.violations) UNSCOPED_INFO(v.code << " @ " << v.location);
    CHECK(rep.ok());
  }
}

TEST_CASE("validate reports an euler characteristic mismatch") {
  Diagram good = lens_diagram(5, 1);
  std::vector<Region> regions = good.regions();
  regions[2].euler_char -= 1;
  Diagram bad(good.genus(), good.vertices(), good.arcs(), good.curves(CurveFamily::alpha),
              good.curves(CurveFamily::beta), regions, good.basepoint_regions());
  ValidationReport rep = validate(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                    [](const Violation& v) { return v.code == "euler-characteristic"; }));
}

TEST_CASE("validate reports duplicated basepoints") {
  Diagram good = fixtures::grid_two_pointed();
  Diagram bad(good.genus(), good.vertices(), good.arcs(), good.curves(CurveFamily::alpha),
              good.curves(CurveFamily::beta), good.regions(), {0, 0});
  ValidationReport rep = validate(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(std::any_of(rep.violations.begin(), rep.violations.end(), [](const Violation& v) {
    return v.code == "basepoint-duplicate" || v.code == "alpha-components" ||
           v.code == "beta-components";
  }));
}

TEST_CASE("validate reports a broken boundary word") {
  Diagram good = lens_diagram(3, 1);
  std::vector<Region> regions = good.regions();
  std::swap(regions[1].boundary[0][0], regions[1].boundary[0][2]);
  Diagram bad(good.genus(), good.vertices(), good.arcs(), good.curves(CurveFamily::alpha),
              good.curves(CurveFamily::beta), regions, good.basepoint_regions());
  CHECK_FALSE(bad.analyzable());
  CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("euler measure on lens regions and bigons") {
  Diagram lens = lens_diagram(7, 2);
  for (int r = 0; r < lens.num_regions(); ++r) {
    Domain unit = lens.zero_domain();
    unit[r] = 1;
    CHECK(euler_measure(lens, unit) == 0);  // squares: chi 1, four corners
  }
  CHECK(euler_measure(lens, lens.zero_domain()) == 0);

  Diagram s = s1_x_s2_diagram();
  Domain bigon = s.zero_domain();
  bigon[1] = 1;
  CHECK(euler_measure(s, bigon) == make_rational(Int(1), Int(2)));
  Domain annulus = s.zero_domain();
  annulus[0] = 1;
  CHECK(euler_measure(s, annulus) == -1);
}

TEST_CASE("point measure matches the lens quadrant pattern") {
  const int p = 5, q = 1;
  Diagram d = lens_diagram(p, q);
  // x_i touches D_i, D_{i+1}, D_{i-q}, D_{i-q+1} mod p (with multiplicity).
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      Domain unit = d.zero_domain();
      unit[j] = 1;
      int expected = 0;
      auto mod = [&](int k) { return ((k % p) + p) % p; };
      for (int t : {mod(i), mod(i + 1), mod(i - q), mod(i - q + 1)})
        if (t == j) ++expected;
      CHECK(point_measure(d, {i}, unit) == make_rational(Int(expected), Int(4)));
    }
  }
  CHECK(point_measure(d, {0}, d.full_surface_domain()) == 1);
  CHECK(point_measure(d, {0}, d.zero_domain()) == 0);
}

TEST_CASE("dd_alpha reproduces the lens boundary formula") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {5, 1}, {5, 2}, {7, 3}, {9, 4}}) {
    Diagram d = lens_diagram(p, q);
    auto mod = [&](int k) { return ((k % p) + p) % p; };
    for (int i = 0; i < p; ++i) {
      Domain unit = d.zero_domain();
      unit[i] = 1;
      ZeroChain got = dd_alpha(d, unit);
      ZeroChain want(p, Int(0));
      want[mod(i + q)] += 1;
      want[mod(i + q - 1)] -= 1;
      want[mod(i - 1)] += 1;
      want[mod(i)] -= 1;
      INFO("p=" << p << " q=" << q << " i=" << i);
      CHECK(got == want);
    }
  }
}

TEST_CASE("dd_alpha of the fundamental class vanishes") {
  for (auto& [name, d] : fixtures::small_corpus()) {
    INFO(name);
    ZeroChain z = dd_alpha(d, d.full_surface_domain());
    CHECK(std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; }));
  }
}

TEST_CASE("measures and boundaries are linear; dd_alpha = -dd_beta") {
  std::mt19937_64 rng(20240811);
  for (auto& [name, d] : fixtures::small_corpus()) {
    INFO(name);
    Generator x = enumerate_generators(d).generators.front();
    for (int trial = 0; trial < 10; ++trial) {
      Domain a = random_domain(d, rng), b = random_domain(d, rng);
      Domain sum(a);
      for (int r = 0; r < d.num_regions(); ++r) sum[r] += b[r];
      CHECK(euler_measure(d, sum) == euler_measure(d, a) + euler_measure(d, b));
      CHECK(point_measure(d, x, sum) == point_measure(d, x, a) + point_measure(d, x, b));
      ZeroChain da = dd_alpha(d, a), db = dd_alpha(d, b), dsum = dd_alpha(d, sum);
      ZeroChain dbeta = dd_beta(d, a);
      Int total(0);
      for (int v = 0; v < d.num_vertices(); ++v) {
        CHECK(dsum[v] == da[v] + db[v]);
        CHECK(dbeta[v] == -da[v]);
        total += da[v];
      }
      CHECK(total == 0);
    }
  }
}

TEST_CASE("generator enumeration matches the naive subset filter") {
  for (auto& [name, d] : fixtures::small_corpus()) {
    if (d.num_vertices() > 12) continue;
    INFO(name);
    std::vector<Generator> got = enumerate_generators(d).generators;
    std::vector<Generator> want = naive_generators(d);
    CHECK(got == want);  // both lexicographic
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("generator counts for standard diagrams") {
  CHECK(enumerate_generators(lens_diagram(1, 1)).generators.size() == 1);
  CHECK(enumerate_generators(lens_diagram(5, 2)).generators.size() == 5);
  CHECK(enumerate_generators(s1_x_s2_diagram()).generators.size() == 2);
  CHECK(enumerate_generators(fixtures::grid_two_pointed()).generators.size() == 2);
}

TEST_CASE("enumeration limit signals truncation") {
  Diagram d = lens_diagram(5, 1);
  GeneratorList gl = enumerate_generators(d, 3);
  CHECK(gl.generators.size() == 3);
  CHECK(gl.truncated);
  GeneratorList full = enumerate_generators(d, 5);
  CHECK(full.generators.size() == 5);
  CHECK_FALSE(full.truncated);
  GeneratorList over = enumerate_generators(d, 9);
  CHECK(over.generators.size() == 5);
  CHECK_FALSE(over.truncated);
}
