#include "support.hpp"

#include <gtest/gtest.h>

using namespace mckay;

namespace {

CharGroup z11() { return CharGroup(parse_group("n = 3\ngen 11 : 1 2 8\n")); }

ThetaParam random_theta(std::mt19937& rng, std::size_t r) {
  RatVec t(r);
  Rational s = 0;
  for (std::size_t k = 1; k < r; ++k) {
    t[k] = static_cast<long>(rng() % 21) - 10;
    s += t[k];
  }
  t[0] = -s;
  return ThetaParam(t);
}

RatVec random_weight(std::mt19937& rng, std::size_t n) {
  RatVec w(n);
  for (auto& x : w) x = static_cast<long>(rng() % 12);
  return w;
}

}  // namespace

TEST(McKayModule, OneGeneratorPerArrow) {
  auto G = z11();
  auto gens = mckay_module(G);
  ASSERT_EQ(gens.size(), 33u);
  EXPECT_EQ(gens[0].target, 1u);
  EXPECT_EQ(gens[1].target, 2u);
  EXPECT_EQ(gens[2].target, 8u);
  CharGroup Z2(parse_group("n = 1\ngen 2 : 1\n"));
  auto g2 = mckay_module(Z2);
  ASSERT_EQ(g2.size(), 2u);
  EXPECT_EQ(g2[0].target, 1u);
  EXPECT_EQ(g2[1].target, 0u);
}

TEST(Distinguished, Z2HandSolvedProgram) {
  CharGroup G(parse_group("n = 1\ngen 2 : 1\n"));
  auto c = distinguished_constellation(G, ThetaParam(RatVec{-1, 1}), RatVec{1});
  EXPECT_EQ(c.v, (RatVec{0, -1}));
  EXPECT_EQ(c.rep.at(0, 0), 0);
  EXPECT_EQ(c.rep.at(1, 0), 1);
  auto q = support_quiver(G, c.rep, true);
  ASSERT_EQ(q.arrows.size(), 1u);
  EXPECT_EQ(q.arrows[0].tail, 0u);
  EXPECT_EQ(q.arrows[0].rho, 1u);
  EXPECT_EQ(format_module(G, c.rep, {"x"}), "rho0: x*e_rho0\nrho1: x*e_rho1 - e_rho0\n");
}

TEST(Distinguished, ZeroWeightGivesTheMcKayModule) {
  auto G = z11();
  auto c = distinguished_constellation(G, ThetaParam::ghilb_default(11), RatVec{0, 0, 0});
  EXPECT_EQ(c.rep, QuiverRep::ones(11, 3));
  EXPECT_NO_THROW(verify_quiver_rep(G, c.rep));
  EXPECT_THROW(support_quiver(G, c.rep, true), UnexpectedCycle);
}

TEST(Distinguished, RejectsBadInput) {
  auto G = z11();
  EXPECT_THROW(distinguished_constellation(G, ThetaParam::ghilb_default(11), RatVec{1, -1, 1}),
               std::invalid_argument);
  EXPECT_THROW(distinguished_constellation(G, ThetaParam::ghilb_default(5), RatVec{1, 1, 1}),
               std::invalid_argument);
}

TEST(Distinguished, RelationsHoldForRandomParameters) {
  std::mt19937 rng(51);
  for (int t = 0; t < 30; ++t) {
    auto spec = oracle::random_group(rng, 16, 4);
    CharGroup G(spec);
    auto c = distinguished_constellation(G, random_theta(rng, G.r()), random_weight(rng, G.n()));
    EXPECT_NO_THROW(verify_quiver_rep(G, c.rep));
    for (std::size_t k = 0; k < c.slack.size(); ++k) EXPECT_GE(c.slack[k], 0);
  }
}

// Degenerate programs have many optimal vertices; b must not depend on which
// one the solver reaches.
TEST(Distinguished, IndependentOfConstraintOrder) {
  std::mt19937 rng(52);
  for (int t = 0; t < 50; ++t) {
    CharGroup G = t % 2 ? z11() : CharGroup(oracle::random_group(rng, 16, 4));
    auto theta = random_theta(rng, G.r());
    auto w = random_weight(rng, G.n());
    auto base = distinguished_constellation(G, theta, w);
    for (int s = 0; s < 3; ++s) {
      std::vector<std::size_t> order(G.r() * G.n());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      auto c = distinguished_constellation(G, theta, w, order);
      EXPECT_EQ(c.rep, base.rep);
      EXPECT_EQ(c.value, base.value);
    }
  }
}

TEST(QuiverRepCheck, ConstructedViolation) {
  auto G = z11();
  auto rep = QuiverRep::ones(11, 3);
  rep.set(G.times_rho(0, 1), 0, 0);
  try {
    verify_quiver_rep(G, rep);
    FAIL();
  } catch (const RelationViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
    EXPECT_EQ(e.rho, 0u);
  }
}

// In the G-Hilb chamber with a generic weight the tight arrows form the
// shortest-path structure out of rho0, and path types are the standard
// monomials of in_w(I_M).
TEST(Distinguished, GHilbChamberPathsAreStandardMonomials) {
  std::mt19937 rng(53);
  for (int t = 0; t < 10; ++t) {
    auto spec = oracle::random_group(rng, 14, 3);
    CharGroup G(spec);
    auto ideal = lattice_ideal(G);
    auto theta = ThetaParam::ghilb_default(G.r());
    ASSERT_TRUE(validate_theta_ghilb(theta));
    for (const auto& cone : enumerate_fan(ideal, G.n())) {
      RatVec w = to_ratvec(cone.cone.witness);
      auto c = distinguished_constellation(G, theta, w);
      auto q = support_quiver(G, c.rep, true);
      auto reach = q.reachable({0});
      for (std::size_t v = 0; v < G.r(); ++v) EXPECT_TRUE(reach[v]) << G.label(v);
      auto table = standard_monomials(cone.J, G);
      std::set<Exponents> standard(table.begin(), table.end()), seen;
      std::vector<std::vector<const Arrow*>> out(G.r());
      for (const auto& a : q.arrows) out[a.tail].push_back(&a);
      Exponents u(G.n(), 0);
      std::function<void(std::size_t)> walk = [&](std::size_t v) {
        EXPECT_EQ(table[G.inverse(v)], u);
        seen.insert(u);
        for (const Arrow* a : out[v]) {
          ++u[a->i];
          walk(a->rho);
          --u[a->i];
        }
      };
      walk(0);
      EXPECT_EQ(seen, standard);
    }
  }
}

TEST(SupportQuiver, ExampleHardOrientation) {
  auto G = z11();
  auto c = distinguished_constellation(G, ThetaParam(RatVec{1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1}), RatVec{10, 7, 6});
  auto q = support_quiver(G, c.rep, true);
  std::set<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& a : q.arrows) arrows.emplace(a.tail, a.rho);
  std::set<std::pair<std::size_t, std::size_t>> want{{2, 0}, {8, 0}, {3, 1}, {4, 2}, {5, 3}, {8, 6},
                                                     {3, 6}, {4, 7}, {5, 8}, {0, 9}, {6, 9}, {7, 10}};
  EXPECT_EQ(arrows, want);
  auto from_sources = q.reachable({4, 5});
  for (std::size_t v = 0; v < 11; ++v) EXPECT_TRUE(from_sources[v]);
}

TEST(PathDecompose, TrivialCases) {
  CharGroup G(parse_group("n = 1\ngen 2 : 1\n"));
  auto Q = quiver_matrices(G);
  auto z = path_decompose(IntVec(2, 0), ThetaParam(RatVec{0, 0}), Q);
  EXPECT_TRUE(is_zero(z.cycles));
  EXPECT_TRUE(z.paths.empty());
  // the 2-cycle rho0 -> rho1 -> rho0
  auto c = path_decompose(IntVec{1, 1}, ThetaParam(RatVec{0, 0}), Q);
  EXPECT_EQ(c.cycles, (IntVec{1, 1}));
  EXPECT_TRUE(c.paths.empty());
  // one arrow out of rho0: column (rho1, x) has tail rho0
  auto p = path_decompose(IntVec{0, 1}, ThetaParam(RatVec{-1, 1}), Q);
  ASSERT_EQ(p.paths.size(), 1u);
  EXPECT_EQ(p.paths[0], (IntVec{0, 1}));
  EXPECT_EQ(p.endpoints[0], 1u);
}

TEST(PathDecompose, RandomWalksAndCycles) {
  std::mt19937 rng(54);
  for (int t = 0; t < 40; ++t) {
    CharGroup G(oracle::random_group(rng, 12, 3));
    auto Q = quiver_matrices(G);
    const std::size_t r = G.r(), n = G.n(), m = r * n;
    IntVec u(m, 0);
    auto step = [&](std::size_t tail, std::size_t i) {
      std::size_t head = G.multiply(tail, G.inverse(G.rho(i)));
      u[head * n + i] += 1;
      return head;
    };
    for (int k = 0; k < 3; ++k) {
      std::size_t v = 0;
      for (std::size_t len = rng() % 6; len > 0; --len) v = step(v, rng() % n);
    }
    for (int k = 0; k < 2; ++k) {
      std::size_t start = rng() % r, i = rng() % n, v = start;
      do v = step(v, i);
      while (v != start);
    }
    RatVec th(r, Rational(0));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t c = 0; c < m; ++c) th[a] += Rational(Q.B(a, c) * u[c]);
    auto d = path_decompose(u, ThetaParam(th), Q);
    IntVec sum = d.cycles;
    for (const auto& x : d.cycles) EXPECT_GE(x, 0);
    for (std::size_t a = 0; a < r; ++a) {
      Integer s = 0;
      for (std::size_t c = 0; c < m; ++c) s += Q.B(a, c) * d.cycles[c];
      EXPECT_EQ(s, 0);
    }
    for (std::size_t k = 0; k < d.paths.size(); ++k) {
      for (std::size_t c = 0; c < m; ++c) sum[c] += d.paths[k][c];
      for (std::size_t a = 0; a < r; ++a) {
        Integer s = 0;
        for (std::size_t c = 0; c < m; ++c) s += Q.B(a, c) * d.paths[k][c];
        Integer want = (a == d.endpoints[k] ? 1 : 0) - (a == 0 ? 1 : 0);
        EXPECT_EQ(s, want);
      }
    }
    EXPECT_EQ(sum, u);
  }
}

TEST(PathDecompose, RejectsBadTheta) {
  CharGroup G(parse_group("n = 1\ngen 2 : 1\n"));
  auto Q = quiver_matrices(G);
  EXPECT_THROW(path_decompose(IntVec{1, 0}, ThetaParam(RatVec{1, -1}), Q), std::invalid_argument);
  EXPECT_THROW(path_decompose(IntVec{0, 1}, ThetaParam(RatVec{0, 0}), Q), std::invalid_argument);
}
