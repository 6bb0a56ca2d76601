#include "support.hpp"

#include <gtest/gtest.h>

using namespace mckay;

namespace {

// Minimum of c.x over {A x >= b, x >= 0} by enumerating every vertex.
std::optional<Rational> vertex_minimum(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
  const std::size_t n = c.size();
  std::vector<RatVec> rows = A;
  RatVec rhs = b;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == n) {
      std::vector<RatVec> S;
      RatVec t;
      for (auto k : pick) {
        S.push_back(rows[k]);
        t.push_back(rhs[k]);
      }
      auto x = oracle::solve(S, t);
      if (!x) return;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (dot(rows[k], *x) < rhs[k]) return;
      Rational v = dot(c, *x);
      if (!best || v < *best) best = v;
      return;
    }
    for (std::size_t k = start; k < rows.size(); ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

IntVec random_vec(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(LP, RandomBoundedProgramsMatchVertexEnumeration) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 2 + rng() % 2, m = 2 + rng() % 3;
    LinearProgram lp(n);
    std::vector<RatVec> A;
    RatVec b;
    for (std::size_t k = 0; k < m; ++k) {
      RatVec row(n);
      for (auto& x : row) x = d(rng);
      Rational r = d(rng);
      A.push_back(row);
      b.push_back(r);
      lp.add(row, Relation::Ge, r);
    }
    // bounding box keeps every instance bounded
    for (std::size_t i = 0; i < n; ++i) {
      RatVec row(n, Rational(0));
      row[i] = -1;
      A.push_back(row);
      b.push_back(-6);
      lp.add(row, Relation::Ge, -6);
    }
    for (auto& x : lp.objective) x = d(rng);
    auto res = lp_solve(lp);
    auto best = vertex_minimum(A, b, lp.objective);
    if (!best) {
      ASSERT_EQ(res.status, LPStatus::Infeasible);
      EXPECT_TRUE(verify_farkas(lp, res.farkas));
      continue;
    }
    ASSERT_EQ(res.status, LPStatus::Optimal);
    EXPECT_EQ(res.value, *best);
    EXPECT_TRUE(satisfies(lp, res.x));
  }
}

TEST(LP, ScalingObjectiveKeepsVertex) {
  std::mt19937 rng(32);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    LinearProgram lp(3);
    for (int k = 0; k < 4; ++k) {
      RatVec row(3);
      for (auto& x : row) x = d(rng);
      lp.add(row, Relation::Le, 5 + d(rng));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      RatVec row(3, Rational(0));
      row[i] = 1;
      lp.add(row, Relation::Le, 4);
    }
    for (auto& x : lp.objective) x = d(rng);
    auto a = lp_solve(lp);
    LinearProgram scaled = lp;
    for (auto& x : scaled.objective) x *= Rational(7, 3);
    auto b = lp_solve(scaled);
    ASSERT_EQ(a.status, b.status);
    if (a.status == LPStatus::Optimal) EXPECT_EQ(a.x, b.x);
  }
}

TEST(LP, UnboundedAndFreeVariables) {
  LinearProgram lp(1);
  lp.objective[0] = -1;
  EXPECT_EQ(lp_solve(lp).status, LPStatus::Unbounded);
  LinearProgram f(1);
  f.kinds[0] = VarKind::Free;
  f.objective[0] = 1;
  f.add({1}, Relation::Ge, -3);
  auto r = lp_solve(f);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.x[0], -3);
}

TEST(LP, InfeasibleHasVerifiedFarkas) {
  LinearProgram lp(2);
  lp.add({1, 1}, Relation::Ge, 3);
  lp.add({1, 0}, Relation::Le, 1);
  lp.add({0, 1}, Relation::Le, 1);
  auto r = lp_solve(lp);
  ASSERT_EQ(r.status, LPStatus::Infeasible);
  EXPECT_TRUE(verify_farkas(lp, r.farkas));
}

TEST(Separation, SoundBothWays) {
  std::mt19937 rng(33);
  int separable = 0, blocked = 0;
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 2 + rng() % 3, m = 1 + rng() % 5;
    std::vector<IntVec> pairs;
    for (std::size_t k = 0; k < m; ++k) {
      IntVec v = random_vec(rng, n, -3, 3);
      if (!is_zero(v)) pairs.push_back(v);
    }
    if (pairs.empty()) continue;
    for (bool strict : {false, true}) {
      auto s = strict_separation(pairs, strict);
      EXPECT_TRUE(verify_separation(pairs, s, strict));
      (s.separable ? separable : blocked)++;
    }
  }
  EXPECT_GT(separable, 0);
  EXPECT_GT(blocked, 0);
}

TEST(Separation, ThreeCyclicPairs) {
  std::vector<IntVec> pairs{{2, -3, 1}, {-3, 1, 2}, {1, 2, -3}};
  auto s = strict_separation(pairs, true);
  ASSERT_FALSE(s.separable);
  EXPECT_EQ(s.multipliers, (IntVec{1, 1, 1}));
  EXPECT_TRUE(is_zero(s.combination));
}

TEST(Cone, PointednessAndExtremeRays) {
  EXPECT_FALSE(is_pointed({{1, 0}, {-1, 0}}));
  EXPECT_TRUE(is_pointed({{1, 0}, {1, 1}}));
  auto r = extreme_rays({{1, 0}, {2, 1}, {0, 1}, {2, 0}});
  EXPECT_EQ(r, (std::vector<IntVec>{{1, 0}, {0, 1}}));
  EXPECT_THROW(extreme_rays({{1, 0}, {-1, 0}, {0, 1}}), NotPointed);
}

// Facets of a full-dimensional 3d cone, by cross products of generator pairs.
TEST(Cone, FacetsMatchCrossProductOracle) {
  std::mt19937 rng(34);
  for (int t = 0; t < 40; ++t) {
    std::vector<IntVec> gens;
    for (int k = 0; k < 5; ++k) {
      IntVec v = random_vec(rng, 3, -3, 3);
      v[2] = 1 + rng() % 3;
      gens.push_back(v);
    }
    if (rank(gens, 3) < 3) continue;
    std::set<IntVec> oracle_facets;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const auto& u = gens[a];
        const auto& v = gens[b];
        IntVec c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        if (is_zero(c)) continue;
        for (int s : {1, -1}) {
          IntVec cs = c;
          for (auto& x : cs) x *= s;
          bool ok = true;
          for (const auto& g : gens) ok = ok && dot(cs, g) >= 0;
          if (ok) oracle_facets.insert(primitive(cs));
        }
      }
    auto cd = describe_cone(extreme_rays(gens));
    EXPECT_EQ(std::set<IntVec>(cd.facets.begin(), cd.facets.end()), oracle_facets);
  }
}

TEST(HilbertBasis, KnownPlaneCones) {
  IntMatrix Z2 = IntMatrix::identity(2);
  EXPECT_EQ(hilbert_basis({{1, 0}, {1, 3}}, Z2).vectors, (std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(hilbert_basis({{0, 1}, {3, -2}}, Z2).vectors, (std::vector<IntVec>{{0, 1}, {1, 0}, {2, -1}, {3, -2}}));
  IntMatrix even = IntMatrix::from_int_rows<long>({{1, 1}, {0, 2}}, 2);
  EXPECT_EQ(hilbert_basis({{1, 1}, {1, -1}}, even).vectors, (std::vector<IntVec>{{1, -1}, {1, 1}}));
}

TEST(HilbertBasis, MinimalAndCompleteOnRandomCones) {
  std::mt19937 rng(35);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    auto spec = oracle::random_group(rng, 12, 3);
    CharGroup G(spec);
    const std::size_t n = spec.n;
    // generators in M; cones without a nonnegative separating weight are skipped
    std::vector<IntVec> gens = G.lattice().row_list();
    for (int k = 0; k < 2; ++k) {
      IntVec c = random_vec(rng, G.lattice().rows(), -2, 2);
      IntVec v(n, 0);
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t i = 0; i < n; ++i) v[i] += c[a] * G.lattice()(a, i);
      if (!is_zero(v)) gens.push_back(v);
    }
    auto sep = strict_separation(gens, false);
    if (!sep.separable) continue;
    RatVec grading = to_ratvec(sep.witness);
    auto hb = hilbert_basis(gens, G.lattice()).vectors;
    ++checked;
    // minimality
    for (std::size_t k = 0; k < hb.size(); ++k) {
      std::vector<IntVec> others;
      for (std::size_t j = 0; j < hb.size(); ++j)
        if (j != k) others.push_back(hb[j]);
      EXPECT_FALSE(semigroup_contains(others, hb[k], grading).member);
      EXPECT_FALSE(oracle::decomposes(others, hb[k], grading));
      EXPECT_TRUE(G.in_lattice(hb[k]));
      EXPECT_TRUE(in_cone_lp(gens, hb[k]));
    }
    // completeness for lattice points of grading up to three times the largest generator
    Rational gmax = 0;
    for (const auto& g : gens) gmax = std::max(gmax, dot(grading, g));
    Rational B = 3 * gmax;
    // the truncated cone is the hull of 0 and the rays scaled to grading B
    std::vector<Integer> lo(n, 0), hi(n, 0);
    for (const auto& r : extreme_rays(gens)) {
      Rational lam = B / dot(grading, r);
      for (std::size_t i = 0; i < n; ++i) {
        Rational b = lam * r[i];
        hi[i] = std::max(hi[i], oracle::floor_q(b));
        lo[i] = std::min(lo[i], oracle::ceil_q(b));
      }
    }
    std::size_t points = 0;
    IntVec x(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        if (is_zero(x) || dot(grading, x) > B || !G.in_lattice(x) || !in_cone_lp(gens, x)) return;
        ++points;
        EXPECT_TRUE(oracle::decomposes(hb, x, grading)) << format_vector(x);
        return;
      }
      for (Integer v = lo[i]; v <= hi[i]; ++v) {
        x[i] = v;
        rec(i + 1);
      }
    };
    double box = 1;
    for (std::size_t i = 0; i < n; ++i) box *= Integer(hi[i] - lo[i] + 1).get_d();
    if (box > 60000) continue;
    rec(0);
    EXPECT_GT(points, 0u);
  }
  EXPECT_GE(checked, 10);
}

TEST(Semigroup, MembershipAndNonMembership) {
  std::vector<IntVec> gens{{2, 0}, {0, 2}, {1, 1}};
  RatVec g{1, 1};
  auto a = semigroup_contains(gens, {3, 1}, g);
  ASSERT_TRUE(a.member);
  IntVec sum(2, 0);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < 2; ++i) sum[i] += a.multiplicities[k] * gens[k][i];
  EXPECT_EQ(sum, (IntVec{3, 1}));
  EXPECT_FALSE(semigroup_contains(gens, {1, 0}, g).member);
  EXPECT_THROW(semigroup_contains({{1, -1}}, {1, -1}, g), InvalidGrading);
}
