#pragma once

// Rational polyhedral cones: pointedness, extreme rays, facets, placing
// triangulations, Hilbert bases and semigroup membership.

#include "exact.hpp"
#include "lp.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

struct NotPointed : std::runtime_error {
  NotPointed() : std::runtime_error("cone is not pointed") {}
};

struct InvalidGrading : std::runtime_error {
  IntVec generator;
  explicit InvalidGrading(IntVec g)
      : std::runtime_error("grading is not positive on a generator"), generator(std::move(g)) {}
};

/// Is x a nonnegative rational combination of gens?
inline bool in_cone_lp(const std::vector<IntVec>& gens, const IntVec& x) {
  const std::size_t m = gens.size(), d = x.size();
  if (is_zero(x)) return true;
  if (m == 0) return false;
  LinearProgram lp(m);
  for (std::size_t i = 0; i < d; ++i) {
    RatVec row(m);
    for (std::size_t k = 0; k < m; ++k) row[k] = gens[k][i];
    lp.add(std::move(row), Relation::Eq, Rational(x[i]));
  }
  return lp_solve(lp).status == LPStatus::Optimal;
}

/// No nonzero x with x and -x in the cone: no nonnegative combination of the
/// nonzero generators with total weight 1 vanishes.
inline bool is_pointed(const std::vector<IntVec>& gens) {
  std::vector<IntVec> nz;
  for (const auto& g : gens)
    if (!is_zero(g)) nz.push_back(g);
  if (nz.empty()) return true;
  const std::size_t m = nz.size(), d = nz.front().size();
  LinearProgram lp(m);
  for (std::size_t i = 0; i < d; ++i) {
    RatVec row(m);
    for (std::size_t k = 0; k < m; ++k) row[k] = nz[k][i];
    lp.add(std::move(row), Relation::Eq, 0);
  }
  lp.add(RatVec(m, Rational(1)), Relation::Eq, 1);
  return lp_solve(lp).status == LPStatus::Infeasible;
}

/// Minimal subset of gens with the same positive hull (one generator per
/// extreme ray, the first occurrence).
inline std::vector<IntVec> extreme_rays(const std::vector<IntVec>& gens) {
  if (!is_pointed(gens)) throw NotPointed();
  std::vector<IntVec> cand;
  std::set<IntVec> dirs;
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    if (dirs.insert(primitive(g)).second) cand.push_back(g);
  }
  std::vector<bool> keep(cand.size(), true);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (k != i && keep[k]) others.push_back(cand[k]);
    if (in_cone_lp(others, cand[i])) keep[i] = false;
  }
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) out.push_back(cand[i]);
  return out;
}

namespace detail {

/// Rational inverse of a square integer matrix given by rows.
inline std::optional<std::vector<RatVec>> inverse(const std::vector<IntVec>& rows) {
  const std::size_t d = rows.size();
  std::vector<RatVec> M(d, RatVec(2 * d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) M[i][j] = rows[i][j];
    M[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && sgn(M[p][c]) == 0) ++p;
    if (p == d) return std::nullopt;
    std::swap(M[p], M[c]);
    Rational piv = M[c][c];
    for (auto& x : M[c]) x /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || sgn(M[i][c]) == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<RatVec> inv(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv[i][j] = M[i][d + j];
  return inv;
}

}  // namespace detail

/// Facets and a placing triangulation of a full-dimensional pointed cone,
/// computed together by an incremental double description over the rays.
struct ConeDescription {
  std::size_t dim = 0;
  std::vector<IntVec> rays;                       // primitive extreme rays
  std::vector<IntVec> facets;                     // inner normals, primitive
  std::vector<std::vector<std::size_t>> simplices; // indices into rays

  [[nodiscard]] bool contains(const IntVec& x) const {
    for (const auto& a : facets)
      if (dot(a, x) < 0) return false;
    return true;
  }
};

/// `rays` must span Q^d and generate a pointed cone.
inline ConeDescription describe_cone(const std::vector<IntVec>& input_rays) {
  ConeDescription cd;
  if (input_rays.empty()) throw std::invalid_argument("describe_cone: no rays");
  const std::size_t d = input_rays.front().size();
  cd.dim = d;
  for (const auto& r : input_rays) cd.rays.push_back(primitive(r));
  const std::size_t m = cd.rays.size();

  // initial simplex
  std::vector<std::size_t> init;
  std::vector<IntVec> chosen;
  for (std::size_t k = 0; k < m && init.size() < d; ++k) {
    chosen.push_back(cd.rays[k]);
    if (rank(chosen, d) == chosen.size())
      init.push_back(k);
    else
      chosen.pop_back();
  }
  if (init.size() != d) throw std::invalid_argument("describe_cone: rays do not span");
  auto inv = detail::inverse(chosen);

  struct Facet {
    IntVec a;
    std::vector<bool> tight;  // over rays
  };
  std::vector<Facet> F;
  std::vector<bool> processed(m, false);
  for (auto k : init) processed[k] = true;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = (*inv)[i][j];
    Facet f{clear_denominators(col), std::vector<bool>(m, false)};
    for (std::size_t k = 0; k < m; ++k)
      if (processed[k] && sgn(dot(f.a, cd.rays[k])) == 0) f.tight[k] = true;
    F.push_back(std::move(f));
  }
  cd.simplices.push_back(init);

  for (std::size_t g = 0; g < m; ++g) {
    if (processed[g]) continue;
    const IntVec& v = cd.rays[g];
    std::vector<Integer> s(F.size());
    std::vector<std::size_t> pos, zer, neg;
    for (std::size_t f = 0; f < F.size(); ++f) {
      s[f] = dot(F[f].a, v);
      (sgn(s[f]) > 0 ? pos : sgn(s[f]) == 0 ? zer : neg).push_back(f);
    }
    // triangulation: cone over boundary faces lying in visible facets
    std::vector<std::vector<std::size_t>> added;
    for (auto f : neg)
      for (const auto& simp : cd.simplices)
        for (std::size_t drop = 0; drop < simp.size(); ++drop) {
          bool in_facet = true;
          for (std::size_t t = 0; t < simp.size() && in_facet; ++t)
            if (t != drop && !F[f].tight[simp[t]]) in_facet = false;
          if (!in_facet) continue;
          std::vector<std::size_t> ns;
          for (std::size_t t = 0; t < simp.size(); ++t)
            if (t != drop) ns.push_back(simp[t]);
          ns.push_back(g);
          added.push_back(std::move(ns));
        }
    for (auto& a : added) cd.simplices.push_back(std::move(a));

    processed[g] = true;
    std::vector<Facet> next;
    for (auto f : pos) next.push_back(F[f]);
    for (auto f : zer) {
      Facet ff = F[f];
      ff.tight[g] = true;
      next.push_back(std::move(ff));
    }
    for (auto p : pos)
      for (auto q : neg) {
        std::vector<bool> common(m, false);
        std::size_t cnt = 0;
        for (std::size_t k = 0; k < m; ++k)
          if (F[p].tight[k] && F[q].tight[k]) {
            common[k] = true;
            ++cnt;
          }
        if (cnt + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t f = 0; f < F.size() && adjacent; ++f) {
          if (f == p || f == q) continue;
          bool sup = true;
          for (std::size_t k = 0; k < m && sup; ++k)
            if (common[k] && !F[f].tight[k]) sup = false;
          if (sup) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = s[p] * F[q].a[i] - s[q] * F[p].a[i];
        a = primitive(std::move(a));
        Facet nf{std::move(a), std::vector<bool>(m, false)};
        for (std::size_t k = 0; k < m; ++k)
          if (processed[k] && sgn(dot(nf.a, cd.rays[k])) == 0) nf.tight[k] = true;
        next.push_back(std::move(nf));
      }
    F = std::move(next);
  }
  for (auto& f : F) cd.facets.push_back(std::move(f.a));
  std::sort(cd.facets.begin(), cd.facets.end());
  cd.facets.erase(std::unique(cd.facets.begin(), cd.facets.end()), cd.facets.end());
  return cd;
}

/// Nonzero points of the half-open parallelepiped sum [0,1) v_i of a
/// simplicial cone, as integer vectors.
inline std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& V) {
  const std::size_t d = V.size();
  auto inv = detail::inverse(V);
  if (!inv) throw std::invalid_argument("parallelepiped_points: singular simplex");
  auto H = hermite_normal_form(IntMatrix::from_rows(V, d)).H;
  std::vector<Integer> box(d);
  for (std::size_t j = 0; j < d; ++j) box[j] = H(j, j);
  std::vector<IntVec> out;
  IntVec x(d, 0);
  for (;;) {
    if (!is_zero(x)) {
      IntVec p = x;
      for (std::size_t i = 0; i < d; ++i) {
        Rational q = 0;
        for (std::size_t j = 0; j < d; ++j) q += x[j] * (*inv)[j][i];
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        if (sgn(fl) != 0)
          for (std::size_t j = 0; j < d; ++j) p[j] -= fl * V[i][j];
      }
      if (!is_zero(p)) out.push_back(std::move(p));
    }
    std::size_t j = 0;
    while (j < d) {
      x[j] += 1;
      if (x[j] < box[j]) break;
      x[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
  return out;
}

struct HilbertBasis {
  std::vector<IntVec> vectors;    // ambient coordinates, sorted
  IntMatrix lattice;              // as given
  std::vector<IntVec> cone_gens;  // as given
};

namespace detail {

/// Coordinates of the cone generators in a basis of (lattice) cap span(gens),
/// together with that basis expressed in ambient coordinates.
struct Restriction {
  std::vector<IntVec> coords;
  std::vector<IntVec> basis;  // rows, ambient
};

inline Restriction restrict_to_span(const std::vector<IntVec>& gens, const IntMatrix& lattice) {
  const IntMatrix L = lattice_basis(lattice);
  const std::size_t k = L.rows();
  std::vector<IntVec> c;
  for (const auto& g : gens) {
    auto z = lattice_coordinates(L, g);
    if (!z) throw std::invalid_argument("hilbert_basis: generator outside the lattice");
    c.push_back(std::move(*z));
  }
  IntMatrix C = IntMatrix::from_rows(c, k);
  IntMatrix N = integer_kernel(C);
  IntMatrix P = N.rows() == 0 ? IntMatrix::identity(k) : integer_kernel(N);
  P = lattice_basis(P);
  Restriction r;
  for (const auto& z : c) {
    auto y = lattice_coordinates(P, z);
    if (!y) throw std::logic_error("restrict_to_span: coordinate failure");
    r.coords.push_back(std::move(*y));
  }
  IntMatrix amb = P * L;
  r.basis = amb.row_list();
  return r;
}

inline IntVec to_ambient(const IntVec& y, const std::vector<IntVec>& basis, std::size_t n) {
  IntVec x(n, 0);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (sgn(y[k]) != 0)
      for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * basis[k][i];
  return x;
}

}  // namespace detail

/// Minimal generating set of {z in lattice : z in cone(gens)}. Candidates are
/// the extreme rays and the parallelepiped points of a placing triangulation;
/// the irreducible ones form the Hilbert basis.
inline HilbertBasis hilbert_basis(const std::vector<IntVec>& gens, const IntMatrix& lattice) {
  HilbertBasis hb{{}, lattice, gens};
  std::vector<IntVec> nz;
  for (const auto& g : gens)
    if (!is_zero(g)) nz.push_back(g);
  if (nz.empty()) return hb;
  const std::size_t n = nz.front().size();
  if (!is_pointed(nz)) throw NotPointed();
  auto R = detail::restrict_to_span(nz, lattice);
  auto rays = extreme_rays(R.coords);
  auto cd = describe_cone(rays);

  std::set<IntVec> cand(cd.rays.begin(), cd.rays.end());
  for (const auto& simp : cd.simplices) {
    std::vector<IntVec> V;
    for (auto k : simp) V.push_back(cd.rays[k]);
    for (auto& p : parallelepiped_points(V)) cand.insert(std::move(p));
  }
  IntVec grading(cd.dim, 0);
  for (const auto& a : cd.facets)
    for (std::size_t i = 0; i < cd.dim; ++i) grading[i] += a[i];
  std::vector<std::pair<Integer, IntVec>> sorted;
  for (const auto& c : cand) sorted.emplace_back(dot(grading, c), c);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Integer, IntVec>> basis;
  for (const auto& [deg, x] : sorted) {
    bool reducible = false;
    for (const auto& [hd, h] : basis) {
      if (hd >= deg) break;
      IntVec diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - h[i];
      if (cd.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.emplace_back(deg, x);
  }
  for (const auto& [deg, y] : basis) hb.vectors.push_back(detail::to_ambient(y, R.basis, n));
  std::sort(hb.vectors.begin(), hb.vectors.end());
  return hb;
}

/// The lattice generated by a set of vectors (rows, canonical HNF).
inline IntMatrix generated_lattice(const std::vector<IntVec>& gens, std::size_t n) {
  return lattice_basis(IntMatrix::from_rows(gens, n));
}

struct MembershipResult {
  bool member = false;
  IntVec multiplicities;     // decomposition when member
  std::size_t explored = 0;  // residuals examined
};

/// Decide whether target is a nonnegative integer combination of gens. The
/// grading must be positive on every generator; the search covers all
/// combinations of grading value at most grading . target.
inline MembershipResult semigroup_contains(const std::vector<IntVec>& gens, const IntVec& target,
                                           const RatVec& grading) {
  std::vector<Rational> gval;
  for (const auto& g : gens) {
    Rational v = dot(grading, g);
    if (v <= 0) throw InvalidGrading(g);
    gval.push_back(v);
  }
  MembershipResult res;
  res.multiplicities.assign(gens.size(), 0);
  std::set<IntVec> failed;
  std::vector<std::size_t> path;

  auto dfs = [&](auto&& self, const IntVec& t) -> bool {
    ++res.explored;
    if (is_zero(t)) return true;
    Rational tv = dot(grading, t);
    if (tv <= 0) return false;
    if (failed.count(t)) return false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gval[k] > tv) continue;
      IntVec nt(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) nt[i] = t[i] - gens[k][i];
      path.push_back(k);
      if (self(self, nt)) return true;
      path.pop_back();
    }
    failed.insert(t);
    return false;
  };
  if (dfs(dfs, target)) {
    res.member = true;
    for (auto k : path) res.multiplicities[k] += 1;
  }
  return res;
}

}  // namespace mckay
