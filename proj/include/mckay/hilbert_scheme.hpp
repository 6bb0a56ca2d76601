#pragma once

// G-clusters, coherent-component membership, chart semigroups, universal
// families and the normality scan.

#include "cone.hpp"
#include "fan.hpp"
#include "groebner.hpp"
#include "group.hpp"
#include "lp.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

struct GCluster {
  MonomialIdeal J;
  std::vector<Exponents> standard;  // indexed by character
};

inline GCluster is_g_cluster(const MonomialIdeal& J, const CharGroup& G) {
  return {J, standard_monomials(J, G)};
}

inline IntVec exponent_difference(const Exponents& a, const Exponents& b) {
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = static_cast<long>(a[i] - b[i]);
  return v;
}

/// g - s(deg g) for every minimal generator g, in generator order.
inline std::vector<IntVec> generator_pairs(const GCluster& c, const CharGroup& G) {
  std::vector<IntVec> out;
  for (const auto& g : c.J.min_gens()) out.push_back(exponent_difference(g, c.standard[G.degree(g)]));
  return out;
}

struct MembershipVerdict {
  bool on_coherent = false;
  IntVec witness;                 // when on_coherent
  ReducedGB recheck;              // Groebner basis under the witness
  SeparationResult separation;    // the final separation problem
  std::vector<IntVec> pairs;      // the pair set of the final problem
  std::size_t cuts = 0;           // pairs added beyond the generator pairs
};

/// J lies on the coherent component iff J = in_w(I_M) for some w. The
/// generator pairs are separated first; a witness is then rechecked by a
/// Groebner computation, and any character whose standard monomial differs
/// adds the violated pair before separating again.
inline MembershipVerdict coherent_membership(const GCluster& c, const std::vector<Binomial>& ideal,
                                             const CharGroup& G,
                                             const BuchbergerOptions& opts = {}) {
  MembershipVerdict v;
  v.pairs = generator_pairs(c, G);
  std::set<IntVec> have(v.pairs.begin(), v.pairs.end());
  if (v.pairs.empty()) throw std::invalid_argument("coherent_membership: empty ideal");
  for (;;) {
    v.separation = strict_separation(v.pairs, true);
    if (!v.separation.separable) {
      v.on_coherent = false;
      return v;
    }
    RatVec w = to_ratvec(v.separation.witness);
    TermOrder o = TermOrder::weight(w);
    ReducedGB gb = buchberger(reorient(ideal, o), o, opts);
    MonomialIdeal Jw = leading_ideal(gb);
    if (Jw == c.J) {
      initial_ideal(gb);  // TiedWeight would contradict the strict separation
      v.on_coherent = true;
      v.witness = v.separation.witness;
      v.recheck = std::move(gb);
      return v;
    }
    auto sw = standard_monomials(Jw, G);
    std::size_t added = 0;
    for (std::size_t rho = 0; rho < G.r(); ++rho) {
      if (sw[rho] == c.standard[rho]) continue;
      IntVec p = exponent_difference(sw[rho], c.standard[rho]);
      if (have.insert(p).second) {
        v.pairs.push_back(std::move(p));
        ++added;
      }
    }
    if (added == 0) throw std::logic_error("coherent_membership: no violated pair found");
    v.cuts += added;
  }
}

struct ClusterOptions {
  std::size_t max_nodes = 5'000'000;
};

/// All monomial G-clusters: order ideals with one monomial per character,
/// grown in increasing canonical order. Sorted by canonical order of J.
inline std::vector<GCluster> enumerate_monomial_clusters(const CharGroup& G,
                                                         const ClusterOptions& opts = {}) {
  const std::size_t r = G.r(), n = G.n();
  std::vector<GCluster> out;
  std::set<Exponents> S;
  std::vector<Exponents> seq;
  std::vector<bool> used(r, false);
  std::size_t nodes = 0;

  auto addable = [&](const Exponents& m) {
    if (S.count(m)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Exponents p = m;
      --p[i];
      if (!S.count(p)) return false;
    }
    return true;
  };
  auto corners = [&]() {
    std::set<Exponents> c;
    for (const auto& s : S)
      for (std::size_t i = 0; i < n; ++i) {
        Exponents m = s;
        ++m[i];
        if (addable(m)) c.insert(std::move(m));
      }
    return c;
  };

  auto rec = [&](auto&& self) -> void {
    if (++nodes > opts.max_nodes) throw BudgetExceeded("enumerate_monomial_clusters: node budget exceeded");
    if (seq.size() == r) {
      auto c = corners();
      MonomialIdeal J(n, std::vector<Exponents>(c.begin(), c.end()));
      std::vector<Exponents> table(r);
      for (const auto& s : seq) table[G.degree(s)] = s;
      out.push_back({std::move(J), std::move(table)});
      return;
    }
    std::vector<Exponents> next;
    for (const auto& m : corners())
      if (canonical_less(seq.back(), m) && !used[G.degree(m)]) next.push_back(m);
    std::sort(next.begin(), next.end(),
              [](const Exponents& a, const Exponents& b) { return canonical_less(a, b); });
    for (const auto& m : next) {
      std::size_t d = G.degree(m);
      used[d] = true;
      S.insert(m);
      seq.push_back(m);
      self(self);
      seq.pop_back();
      S.erase(m);
      used[d] = false;
    }
  };
  Exponents one(n, 0);
  S.insert(one);
  seq.push_back(one);
  used[0] = true;
  rec(rec);
  std::sort(out.begin(), out.end(), [](const GCluster& a, const GCluster& b) { return a.J < b.J; });
  return out;
}

struct DegenerateWitness : std::runtime_error {
  IntVec generator;
  explicit DegenerateWitness(IntVec g)
      : std::runtime_error("witness weight is not strictly positive on a chart generator"),
        generator(std::move(g)) {}
};

struct ChartSemigroup {
  GCluster J;
  std::vector<IntVec> gens;  // deduplicated, sorted
  IntVec witness;
  std::vector<std::pair<Exponents, Exponents>> binomials;  // (generator, standard), generator order
};

inline ChartSemigroup chart_semigroup(const GCluster& c, const IntVec& witness, const CharGroup& G) {
  ChartSemigroup A{c, {}, witness, {}};
  std::set<IntVec> gens;
  for (const auto& g : c.J.min_gens()) {
    const Exponents& s = c.standard[G.degree(g)];
    IntVec d = exponent_difference(g, s);
    if (dot(d, witness) <= 0) throw DegenerateWitness(d);
    A.binomials.emplace_back(g, s);
    gens.insert(std::move(d));
  }
  A.gens.assign(gens.begin(), gens.end());
  return A;
}

struct UniversalFamily {
  std::vector<std::pair<Exponents, Exponents>> binomials;  // x^{u_i} - y_i x^{u'_i}
  std::vector<Binomial> relations;                         // I_U in y_1..y_s
  std::size_t s = 0;
  bool complete = true;  // false when the saturation budget was exhausted
};

/// F = <x^{u_i} - y_i x^{u'_i}> + I_U, with I_U the toric ideal of the map
/// y_i -> u_i - u'_i. The witness grades the y variables positively.
inline UniversalFamily universal_family(const ChartSemigroup& A, const BuchbergerOptions& opts = {}) {
  UniversalFamily F;
  F.binomials = A.binomials;
  const std::size_t s = A.binomials.size();
  F.s = s;
  if (s == 0) return F;
  const std::size_t n = A.binomials.front().first.size();
  IntMatrix M(n, s);
  RatVec grading(s);
  for (std::size_t k = 0; k < s; ++k) {
    IntVec d = exponent_difference(A.binomials[k].first, A.binomials[k].second);
    for (std::size_t i = 0; i < n; ++i) M(i, k) = d[i];
    grading[k] = dot(to_ratvec(A.witness), d);
  }
  IntMatrix K = integer_kernel(M);
  if (K.rows() == 0) return F;
  try {
    F.relations = saturate_homogeneous(K.row_list(), grading, opts).elements;
  } catch (const BudgetExceeded&) {
    F.complete = false;
    TermOrder o = TermOrder::weight(grading);
    for (const auto& row : K.row_list()) F.relations.push_back(Binomial::from_vector(row, o));
  }
  return F;
}

enum class NormalityLattice { M, ZA };

struct ChartReport {
  GCluster J;
  IntVec witness;
  std::vector<IntVec> gens;
  std::vector<IntVec> hilbert_basis_M;
  std::vector<IntVec> missing_M;
  std::vector<IntVec> hilbert_basis_ZA;
  std::vector<IntVec> missing_ZA;
  std::size_t explored = 0;  // residuals searched while certifying non-membership
  bool normal_M = true;
  bool normal_ZA = true;
};

struct NormalityReport {
  GroupSpec group;
  std::size_t r = 0;
  std::size_t n = 0;
  NormalityLattice lattice = NormalityLattice::M;
  bool spot_check = false;
  std::vector<ChartReport> charts;
  bool overall_normal = true;
};

struct NormalityOptions {
  std::vector<RatVec> weights;  // spot-check mode when nonempty
  NormalityLattice lattice = NormalityLattice::M;
  bool both_lattices = true;
  FanOptions fan;
};

inline ChartReport analyze_chart(const GCluster& c, const IntVec& witness, const CharGroup& G,
                                 bool do_M, bool do_ZA) {
  ChartReport rep;
  rep.J = c;
  rep.witness = witness;
  auto A = chart_semigroup(c, witness, G);
  rep.gens = A.gens;
  RatVec grading = to_ratvec(witness);
  auto missing = [&](const std::vector<IntVec>& hb) {
    std::vector<IntVec> out;
    std::set<IntVec> gens(A.gens.begin(), A.gens.end());
    for (const auto& h : hb) {
      if (gens.count(h)) continue;
      auto m = semigroup_contains(A.gens, h, grading);
      rep.explored += m.explored;
      if (!m.member) out.push_back(h);
    }
    return out;
  };
  if (do_M) {
    rep.hilbert_basis_M = hilbert_basis(A.gens, G.lattice()).vectors;
    rep.missing_M = missing(rep.hilbert_basis_M);
    rep.normal_M = rep.missing_M.empty();
  }
  if (do_ZA) {
    rep.hilbert_basis_ZA = hilbert_basis(A.gens, generated_lattice(A.gens, G.n())).vectors;
    rep.missing_ZA = missing(rep.hilbert_basis_ZA);
    rep.normal_ZA = rep.missing_ZA.empty();
  }
  return rep;
}

/// Lattice ideal, then the charts (given weights or the whole fan), then a
/// Hilbert basis per chart semigroup and a membership test for each element.
inline NormalityReport check_normality(const GroupSpec& spec, const NormalityOptions& opts = {}) {
  CharGroup G(spec);
  NormalityReport rep;
  rep.group = spec;
  rep.r = G.r();
  rep.n = G.n();
  rep.lattice = opts.lattice;
  rep.spot_check = !opts.weights.empty();
  const bool do_M = opts.both_lattices || opts.lattice == NormalityLattice::M;
  const bool do_ZA = opts.both_lattices || opts.lattice == NormalityLattice::ZA;
  auto ideal = lattice_ideal(G);
  std::vector<std::pair<GCluster, IntVec>> charts;
  if (rep.spot_check) {
    std::set<MonomialIdeal> seen;
    for (const auto& w : opts.weights) {
      if (w.size() != G.n()) throw std::invalid_argument("weight has wrong length");
      TermOrder o = TermOrder::weight(w);
      auto gb = buchberger(reorient(ideal, o), o, opts.fan.groebner);
      MonomialIdeal J = initial_ideal(gb);
      if (!seen.insert(J).second) continue;
      charts.emplace_back(is_g_cluster(J, G), clear_denominators(w));
    }
  } else {
    for (auto& fc : enumerate_fan(ideal, G.n(), opts.fan))
      charts.emplace_back(is_g_cluster(fc.J, G), fc.cone.witness);
  }
  for (const auto& [c, w] : charts) {
    rep.charts.push_back(analyze_chart(c, w, G, do_M, do_ZA));
    const auto& ch = rep.charts.back();
    bool ok = opts.lattice == NormalityLattice::M ? ch.normal_M : ch.normal_ZA;
    rep.overall_normal = rep.overall_normal && ok;
  }
  std::sort(rep.charts.begin(), rep.charts.end(),
            [](const ChartReport& a, const ChartReport& b) { return a.J.J < b.J.J; });
  return rep;
}

}  // namespace mckay
