#include "support.hpp"

#include <gtest/gtest.h>

using namespace mckay;

TEST(GroupParse, ReadsNamesAndComments) {
  auto g = parse_group("# a comment\nn = 3\ngen 11 : 1 2 8   # trailing\nnames = x y z\n");
  EXPECT_EQ(g.n, 3u);
  ASSERT_EQ(g.generators.size(), 1u);
  EXPECT_EQ(g.generators[0].modulus, 11);
  EXPECT_EQ(g.generators[0].exponents, (std::vector<std::int64_t>{1, 2, 8}));
  EXPECT_EQ(g.variable_names(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(GroupParse, DefaultNames) {
  auto g = parse_group("n = 2\ngen 2 : 1 1\n");
  EXPECT_EQ(g.variable_names(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(GroupParse, ReportsLineAndColumn) {
  try {
    parse_group("n = 3\ngen 0 : 1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.column, 5u);
  }
  try {
    parse_group("n = 3\ngen 5 : 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
  }
  EXPECT_THROW(parse_group("gen 5 : 1 2\n"), ParseError);
  EXPECT_THROW(parse_group("n = 2\nfoo\n"), ParseError);
  EXPECT_THROW(parse_group("n = 2\nnames = a a\n"), ParseError);
}

TEST(GroupParse, SerializeRoundTrip) {
  std::mt19937 rng(1);
  for (int t = 0; t < 30; ++t) {
    auto g = oracle::random_group(rng, 30, 4);
    if (t % 2) {
      g.names.clear();
      for (std::size_t i = 0; i < g.n; ++i) g.names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    EXPECT_EQ(parse_group(serialize_group(g)), g);
  }
}

TEST(CharGroup, Z11Characters) {
  CharGroup G(make_group(3, {{11, {1, 2, 8}}}));
  EXPECT_EQ(G.r(), 11u);
  EXPECT_EQ(G.rho(0), 1u);
  EXPECT_EQ(G.rho(1), 2u);
  EXPECT_EQ(G.rho(2), 8u);
  EXPECT_EQ(G.times_rho(5, 2), 2u);
  EXPECT_EQ(G.inverse(3), 8u);
}

TEST(CharGroup, OrderMatchesBruteForceOnRandomGroups) {
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_group(rng, 40, 4);
    CharGroup G(g);
    EXPECT_EQ(G.r(), oracle::group_order(g));
    EXPECT_EQ(lattice_index(G.lattice()), Integer(static_cast<long>(G.r())));
    Integer prod = 1;
    for (const auto& d : G.invariant_factors()) prod *= d;
    EXPECT_EQ(prod, Integer(static_cast<long>(G.r())));
  }
}

TEST(CharGroup, DegreeIsAHomomorphism) {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto g = oracle::random_group(rng, 40, 4);
    CharGroup G(g);
    std::uniform_int_distribution<int> d(0, 9);
    for (int k = 0; k < 20; ++k) {
      Exponents u(g.n), v(g.n), s(g.n);
      for (std::size_t i = 0; i < g.n; ++i) {
        u[i] = d(rng);
        v[i] = d(rng);
        s[i] = u[i] + v[i];
      }
      EXPECT_EQ(G.degree(s), G.multiply(G.degree(u), G.degree(v)));
      // two monomials share a degree exactly when their residues agree
      EXPECT_EQ(G.degree(u) == G.degree(v), oracle::degree_tuple(g, u) == oracle::degree_tuple(g, v));
      IntVec diff(g.n);
      for (std::size_t i = 0; i < g.n; ++i) diff[i] = u[i] - v[i];
      EXPECT_EQ(G.in_lattice(diff), G.degree(u) == G.degree(v));
    }
    for (std::size_t i = 0; i < g.n; ++i) {
      Exponents e(g.n, 0);
      e[i] = 1;
      EXPECT_EQ(G.degree(e), G.rho(i));
    }
  }
}

TEST(CharGroup, RedundancyReport) {
  CharGroup G(parse_group("n = 6\ngen 5 : 1 0 0 0 4 0\ngen 5 : 0 1 0 0 0 4\ngen 5 : 0 0 1 0 1 3\ngen 5 : 0 0 0 1 1 3\n"));
  EXPECT_EQ(G.r(), 625u);
  EXPECT_EQ(G.redundancy().exponent_rank, 4u);
  EXPECT_TRUE(G.redundancy().independent);
  CharGroup H(make_group(2, {{4, {1, 3}}, {2, {1, 1}}}));
  EXPECT_EQ(H.r(), 4u);
  EXPECT_FALSE(H.redundancy().independent);
}

TEST(QuiverMatrices, ColumnSumsAndCoordinateRows) {
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    CharGroup G(oracle::random_group(rng, 20, 4));
    auto Q = quiver_matrices(G);
    for (std::size_t c = 0; c < G.r() * G.n(); ++c) {
      Integer s = 0;
      for (std::size_t a = 0; a < G.r(); ++a) s += Q.B(a, c);
      EXPECT_EQ(s, 0);
      auto [rho, i] = Q.arrow_of_column(c);
      EXPECT_EQ(Q.column_index(rho, i), c);
      for (std::size_t k = 0; k < G.n(); ++k) EXPECT_EQ(Q.C(G.r() + k, c), k == i ? 1 : 0);
      if (G.times_rho(rho, i) != rho) {
        EXPECT_EQ(Q.B(rho, c), 1);
        EXPECT_EQ(Q.B(G.times_rho(rho, i), c), -1);
      }
    }
  }
}

TEST(Theta, SumZeroAndChamber) {
  EXPECT_THROW(ThetaParam(RatVec{1, 1}), std::invalid_argument);
  EXPECT_TRUE(validate_theta_ghilb(ThetaParam::ghilb_default(5)));
  EXPECT_FALSE(validate_theta_ghilb(ThetaParam(RatVec{1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1})));
}
