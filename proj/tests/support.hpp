#pragma once

// Brute-force oracles and random inputs shared by the test binaries. Nothing
// here calls into the library beyond plain data types.

#include <mckay/mckay.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using mckay::Exponents;
using mckay::GroupSpec;
using mckay::IntVec;
using mckay::Integer;
using mckay::Rational;
using mckay::RatVec;

using Tuple = std::vector<std::int64_t>;

/// Residues of x^u under every generator, computed straight from the spec.
inline Tuple degree_tuple(const GroupSpec& g, const Exponents& u) {
  Tuple t;
  for (const auto& gen : g.generators) {
    __int128 s = 0;
    for (std::size_t i = 0; i < g.n; ++i) s += static_cast<__int128>(gen.exponents[i]) * u[i];
    std::int64_t m = gen.modulus;
    t.push_back(static_cast<std::int64_t>(((s % m) + m) % m));
  }
  return t;
}

/// Every exponent vector with total degree <= d.
inline std::vector<Exponents> monomials_up_to(std::size_t n, std::int64_t d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

/// |G| as the number of distinct degree tuples of monomials in a box.
inline std::size_t group_order(const GroupSpec& g) {
  std::int64_t L = 1;
  for (const auto& gen : g.generators) L = std::lcm(L, gen.modulus);
  std::set<Tuple> seen;
  Exponents e(g.n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == g.n) {
      seen.insert(degree_tuple(g, e));
      return;
    }
    for (std::int64_t k = 0; k < L; ++k) {
      e[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return seen.size();
}

/// For a monomial order, the smallest monomial of each degree. These are the
/// standard monomials of the initial ideal of the lattice ideal; each has
/// total degree below |G|, so enumerating that range is exhaustive.
inline std::map<Tuple, Exponents> minimal_monomials(const GroupSpec& g, std::size_t r,
                                                    const std::function<bool(const Exponents&, const Exponents&)>& less) {
  std::map<Tuple, Exponents> best;
  for (const auto& m : monomials_up_to(g.n, static_cast<std::int64_t>(r) - 1)) {
    auto t = degree_tuple(g, m);
    auto it = best.find(t);
    if (it == best.end() || less(m, it->second)) best[t] = m;
  }
  return best;
}

/// w . a < w . b, ties broken by lex with x1 largest.
inline std::function<bool(const Exponents&, const Exponents&)> weight_lex_less(const RatVec& w) {
  return [w](const Exponents& a, const Exponents& b) {
    Rational wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += w[i] * a[i];
      wb += w[i] * b[i];
    }
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
}

/// Minimal generators of the monomial ideal spanned by the complement of a
/// finite order ideal: the monomials outside S all of whose proper divisors
/// x^{m - e_i} lie in S.
inline std::set<Exponents> corners(const std::set<Exponents>& S, std::size_t n) {
  std::set<Exponents> out;
  for (const auto& s : S)
    for (std::size_t i = 0; i < n; ++i) {
      Exponents m = s;
      ++m[i];
      if (S.count(m)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (m[j] > 0) {
          Exponents d = m;
          --d[j];
          ok = S.count(d) > 0;
        }
      if (ok) out.insert(m);
    }
  return out;
}

inline Integer floor_q(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

inline Integer ceil_q(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z;
}

/// Is x a nonnegative integer combination of gens? Plain depth-first search
/// over a strictly positive grading, no memo.
inline bool decomposes(const std::vector<IntVec>& gens, const IntVec& x, const RatVec& grading,
                       std::size_t start = 0) {
  if (mckay::is_zero(x)) return true;
  Rational gx = mckay::dot(grading, x);
  if (gx <= 0) return false;
  for (std::size_t k = start; k < gens.size(); ++k) {
    IntVec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= gens[k][i];
    if (decomposes(gens, y, grading, k)) return true;
  }
  return false;
}

/// Solve a square rational system; nullopt when singular.
inline std::optional<RatVec> solve(std::vector<RatVec> A, RatVec b) {
  const std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

/// Determinant by fraction-free elimination over Q.
inline Rational determinant(std::vector<RatVec> A) {
  const std::size_t n = A.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(A[p], A[c]);
      d = -d;
    }
    d *= A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  return d;
}

/// Random abelian group of order between 2 and max_r acting diagonally on
/// 2..max_n variables.
inline GroupSpec random_group(std::mt19937& rng, std::size_t max_r, std::size_t max_n) {
  for (;;) {
    std::size_t n = 2 + rng() % (max_n - 1);
    std::size_t k = 1 + rng() % 2;
    GroupSpec g;
    g.n = n;
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 9);
      mckay::Generator gen{m, {}};
      for (std::size_t i = 0; i < n; ++i) gen.exponents.push_back(static_cast<std::int64_t>(rng() % m));
      g.generators.push_back(gen);
    }
    std::size_t r = group_order(g);
    if (r >= 2 && r <= max_r) return g;
  }
}

}  // namespace oracle
