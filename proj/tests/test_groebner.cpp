#include "support.hpp"

#include <gtest/gtest.h>

using namespace mckay;

namespace {

RatVec random_weight(std::mt19937& rng, std::size_t n, int hi = 40) {
  RatVec w(n);
  for (auto& x : w) x = 1 + static_cast<long>(rng() % hi);
  return w;
}

}  // namespace

TEST(TermOrder, WeightThenLex) {
  auto o = TermOrder::weight({1, 1, 1});
  EXPECT_GT(o.compare({2, 0, 0}, {0, 1, 0}), 0);
  EXPECT_GT(o.compare({1, 0, 0}, {0, 1, 0}), 0);
  EXPECT_LT(o.compare({0, 0, 2}, {0, 1, 1}), 0);
  EXPECT_EQ(o.compare({1, 2, 3}, {1, 2, 3}), 0);
}

TEST(TermOrder, RejectsNonMonomialOrders) {
  EXPECT_THROW(TermOrder::weight({1, -1}), std::invalid_argument);
  EXPECT_NO_THROW(TermOrder::matrix({{1, 1}, {0, -1}}));
  EXPECT_THROW(TermOrder::matrix({{1, 0}, {0, -1}}), std::invalid_argument);
  EXPECT_THROW(TermOrder::matrix({{0, 1}, {-1, 0}}), std::invalid_argument);
}

TEST(MonomialIdeal, MinimalCanonicalGenerators) {
  MonomialIdeal J(2, {{2, 0}, {1, 1}, {3, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(J.min_gens(), (std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_TRUE(J.contains({5, 1}));
  EXPECT_FALSE(J.contains({1, 0}));
  EXPECT_TRUE(J.is_artinian());
  EXPECT_EQ(J.standard_monomials().size(), 3u);
  EXPECT_FALSE(MonomialIdeal(2, {{1, 1}}).is_artinian());
}

TEST(Buchberger, Z14LatticeIdeal) {
  CharGroup G(parse_group("n = 3\ngen 14 : 1 9 11\n"));
  auto gb = lattice_ideal_gb(G.lattice(), default_order(3));
  EXPECT_TRUE(verify_groebner_basis(gb).ok);
  TermOrder o = default_order(3);
  std::vector<Binomial> ref{Binomial::oriented({14, 0, 0}, {0, 0, 0}, o),
                            Binomial::oriented({0, 1, 0}, {9, 0, 0}, o),
                            Binomial::oriented({0, 0, 1}, {11, 0, 0}, o)};
  EXPECT_TRUE(ideals_equal(gb.elements, ref, 3));
  for (const auto& g : gb.elements) EXPECT_TRUE(G.in_lattice(g.vector()));
}

// The normal form of x^u is the least monomial of its degree, so the
// standard monomials agree with an exhaustive search.
TEST(Buchberger, StandardMonomialsMatchExhaustiveSearch) {
  std::mt19937 rng(21);
  for (int t = 0; t < 25; ++t) {
    auto spec = oracle::random_group(rng, 20, 4);
    CharGroup G(spec);
    RatVec w = random_weight(rng, spec.n);
    TermOrder o = TermOrder::weight(w);
    auto gb = buchberger(reorient(lattice_ideal(G), o), o);
    auto ver = verify_groebner_basis(gb);
    ASSERT_TRUE(ver.ok) << ver.failure;
    auto J = leading_ideal(gb);
    auto best = oracle::minimal_monomials(spec, G.r(), oracle::weight_lex_less(w));
    ASSERT_EQ(best.size(), G.r());
    auto table = standard_monomials(J, G);
    std::set<Exponents> S;
    for (const auto& [tuple, m] : best) {
      S.insert(m);
      EXPECT_EQ(table[G.degree(m)], m);
    }
    auto corners = oracle::corners(S, spec.n);
    EXPECT_EQ(std::set<Exponents>(J.min_gens().begin(), J.min_gens().end()), corners);
  }
}

TEST(Buchberger, NormalFormIdempotentAndConstantOnDegreeClasses) {
  std::mt19937 rng(22);
  for (int t = 0; t < 10; ++t) {
    auto spec = oracle::random_group(rng, 20, 4);
    CharGroup G(spec);
    TermOrder o = TermOrder::weight(random_weight(rng, spec.n));
    auto gb = buchberger(reorient(lattice_ideal(G), o), o);
    std::map<std::size_t, Exponents> nf_of;
    for (const auto& m : oracle::monomials_up_to(spec.n, 6)) {
      auto nf = normal_form(m, gb);
      EXPECT_EQ(normal_form(nf, gb), nf);
      EXPECT_EQ(G.degree(nf), G.degree(m));
      auto [it, fresh] = nf_of.emplace(G.degree(m), nf);
      if (!fresh) EXPECT_EQ(it->second, nf);
    }
  }
}

TEST(Buchberger, GenericWeightHasNoTies) {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    auto spec = oracle::random_group(rng, 20, 4);
    CharGroup G(spec);
    RatVec w(spec.n);
    // distinct powers make every balanced relation impossible at this size
    for (std::size_t i = 0; i < spec.n; ++i) w[i] = Rational(1000) + (1L << (3 * i)) + static_cast<long>(rng() % 3);
    TermOrder o = TermOrder::weight(w);
    auto gb = buchberger(reorient(lattice_ideal(G), o), o);
    EXPECT_EQ(initial_ideal(gb), leading_ideal(gb));
  }
}

TEST(Buchberger, TiesAreReported) {
  CharGroup G(parse_group("n = 3\ngen 11 : 1 2 8\n"));
  TermOrder o = TermOrder::weight({1, 1, 1});
  auto gb = buchberger(reorient(lattice_ideal(G), o), o);
  EXPECT_THROW(initial_ideal(gb), TiedWeight);
}

TEST(Buchberger, ResultIsOrderOfInputIndependent) {
  CharGroup G(parse_group("n = 3\ngen 11 : 1 2 8\n"));
  TermOrder o = TermOrder::weight({10, 7, 6});
  auto gens = lattice_ideal(G);
  auto a = buchberger(reorient(gens, o), o);
  std::reverse(gens.begin(), gens.end());
  auto b = buchberger(reorient(gens, o), o);
  EXPECT_EQ(a.elements, b.elements);
}

TEST(Buchberger, PureDifferenceHookSeesEveryIntermediate) {
  std::size_t seen = 0;
  bool ok = true;
  groebner_hooks().on_intermediate = [&](const Binomial& b, const TermOrder& o) {
    ++seen;
    ok = ok && o.compare(b.lead, b.trail) > 0;
  };
  CharGroup G(parse_group("n = 3\ngen 14 : 1 9 11\n"));
  lattice_ideal(G);
  groebner_hooks() = {};
  EXPECT_GT(seen, 0u);
  EXPECT_TRUE(ok);
}

TEST(Buchberger, BudgetIsEnforced) {
  CharGroup G(parse_group("n = 3\ngen 11 : 1 2 8\n"));
  BuchbergerOptions opts;
  opts.max_basis_size = 2;
  EXPECT_THROW(lattice_ideal_gb(G.lattice(), default_order(3), opts), BudgetExceeded);
}

TEST(Saturation, TwistedCubic) {
  // kernel of (1 1 1 1; 0 1 2 3) generated by a non-saturated pair
  std::vector<IntVec> vecs{{1, -2, 1, 0}, {0, 1, -2, 1}};
  auto gb = saturate_homogeneous(vecs, {1, 1, 1, 1});
  TermOrder o = default_order(4);
  std::vector<Binomial> ref{Binomial::oriented({1, 0, 1, 0}, {0, 2, 0, 0}, o),
                            Binomial::oriented({0, 1, 0, 1}, {0, 0, 2, 0}, o),
                            Binomial::oriented({1, 0, 0, 1}, {0, 1, 1, 0}, o)};
  EXPECT_TRUE(ideals_equal(gb.elements, ref, 4));
}

TEST(Saturation, RejectsInhomogeneousInput) {
  EXPECT_THROW(saturate_homogeneous({{1, -2}}, {1, 1}), std::invalid_argument);
}
