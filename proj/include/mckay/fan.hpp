#pragma once

// Groebner cones and traversal of the Groebner fan in the positive orthant.

#include "cone.hpp"
#include "groebner.hpp"
#include "lp.hpp"

#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace mckay {

/// Closed cone {w >= 0 : (lead - trail) . w >= 0 for every basis element}.
struct GroebnerCone {
  std::vector<IntVec> inequalities;  // every row, primitive, deduplicated
  std::vector<IntVec> facets;        // irredundant rows
  IntVec witness;                    // strictly interior, strictly positive

  [[nodiscard]] bool contains(const RatVec& w) const {
    for (const auto& a : inequalities)
      if (dot(w, a) < 0) return false;
    return true;
  }
  [[nodiscard]] bool contains_strictly(const RatVec& w) const {
    for (const auto& a : inequalities)
      if (dot(w, a) <= 0) return false;
    return true;
  }
};

namespace detail {

inline IntVec unit(std::size_t n, std::size_t i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

/// Row a is implied by the others iff {others . w >= 0, a . w <= -1} is empty.
inline std::vector<IntVec> irredundant(std::vector<IntVec> rows) {
  std::vector<bool> keep(rows.size(), true);
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    LinearProgram lp(n);
    for (auto& kd : lp.kinds) kd = VarKind::Free;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != k && keep[j]) lp.add(to_ratvec(rows[j]), Relation::Ge, 0);
    lp.add(to_ratvec(rows[k]), Relation::Le, -1);
    if (lp_solve(lp).status == LPStatus::Infeasible) keep[k] = false;
  }
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (keep[k]) out.push_back(std::move(rows[k]));
  return out;
}

}  // namespace detail

inline GroebnerCone groebner_cone(const ReducedGB& gb) {
  const std::size_t n = gb.n;
  std::set<IntVec> rows;
  for (const auto& g : gb.elements) rows.insert(primitive(g.vector()));
  for (std::size_t i = 0; i < n; ++i) rows.insert(detail::unit(n, i));
  GroebnerCone c;
  c.inequalities.assign(rows.begin(), rows.end());
  c.facets = detail::irredundant(c.inequalities);
  std::vector<IntVec> strict;
  for (const auto& g : gb.elements) strict.push_back(g.vector());
  if (strict.empty()) strict.push_back(IntVec(n, 0));
  if (!gb.elements.empty()) {
    auto sep = strict_separation(strict, true);
    if (!sep.separable) throw std::logic_error("groebner_cone: cone has empty interior");
    c.witness = sep.witness;
  } else {
    c.witness = IntVec(n, 1);
  }
  return c;
}

/// A point in the relative interior of facet d that is strictly positive, or
/// nothing when the facet only meets the boundary of the orthant.
inline std::optional<RatVec> facet_point(const GroebnerCone& c, const IntVec& d) {
  const std::size_t n = d.size();
  LinearProgram lp(n + 1);
  lp.kinds[n] = VarKind::Free;
  lp.objective[n] = -1;
  RatVec row(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) row[i] = d[i];
  lp.add(row, Relation::Eq, 0);
  for (const auto& f : c.facets) {
    if (f == d) continue;
    RatVec r(n + 1);
    for (std::size_t i = 0; i < n; ++i) r[i] = f[i];
    r[n] = -1;
    lp.add(std::move(r), Relation::Ge, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec r(n + 1, Rational(0));
    r[i] = 1;
    lp.add(r, Relation::Le, 1);
    r[n] = -1;
    lp.add(std::move(r), Relation::Ge, 0);
  }
  auto res = lp_solve(lp);
  if (res.status != LPStatus::Optimal || res.x[n] <= 0) return std::nullopt;
  return RatVec(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
}

struct FanCone {
  MonomialIdeal J;
  ReducedGB gb;
  GroebnerCone cone;
};

struct FanOptions {
  std::size_t max_cones = std::numeric_limits<std::size_t>::max();
  BuchbergerOptions groebner;
};

/// All monomial initial ideals in_w(I) for w in the open positive orthant,
/// by breadth-first facet flips from the order (1,...,1) refined by lex.
/// Output sorted by the canonical order of J.
inline std::vector<FanCone> enumerate_fan(const std::vector<Binomial>& ideal_gens, std::size_t n,
                                          const FanOptions& opts = {}) {
  std::vector<FanCone> found;
  std::map<MonomialIdeal, std::size_t> index;
  std::deque<std::size_t> queue;

  auto add = [&](ReducedGB gb) {
    MonomialIdeal J = leading_ideal(gb);
    if (index.count(J)) return;
    if (found.size() >= opts.max_cones) throw BudgetExceeded("enumerate_fan: cone budget exceeded");
    GroebnerCone c = groebner_cone(gb);
    index.emplace(J, found.size());
    queue.push_back(found.size());
    found.push_back({std::move(J), std::move(gb), std::move(c)});
  };

  TermOrder start = default_order(n);
  add(buchberger(reorient(ideal_gens, start), start, opts.groebner));
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    const GroebnerCone cone = found[k].cone;
    const std::vector<Binomial> gens = found[k].gb.elements;
    for (const auto& d : cone.facets) {
      bool coordinate = true;
      std::size_t nz = 0;
      for (const auto& x : d) {
        if (sgn(x) != 0) ++nz;
        if (sgn(x) < 0) coordinate = false;
      }
      if (coordinate && nz == 1) continue;
      auto wf = facet_point(cone, d);
      if (!wf) continue;
      RatVec md(n);
      for (std::size_t i = 0; i < n; ++i) md[i] = -d[i];
      TermOrder o = TermOrder::matrix({*wf, md});
      add(buchberger(reorient(gens, o), o, opts.groebner));
    }
  }
  std::vector<FanCone> out = std::move(found);
  std::sort(out.begin(), out.end(), [](const FanCone& a, const FanCone& b) { return a.J < b.J; });
  return out;
}

}  // namespace mckay
