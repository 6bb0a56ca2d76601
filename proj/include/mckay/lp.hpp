#pragma once

// Exact rational linear programming: two-phase tableau simplex with Bland's
// rule, Farkas certificates, unbounded rays, and strict separation.

#include "exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

enum class Relation { Ge, Le, Eq };
enum class VarKind { NonNeg, Free };

struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::Ge;
  Rational rhs = 0;
};

/// minimize objective . x subject to the constraints.
struct LinearProgram {
  std::size_t num_vars = 0;
  RatVec objective;
  std::vector<Constraint> constraints;
  std::vector<VarKind> kinds;  // empty means all NonNeg

  explicit LinearProgram(std::size_t n = 0)
      : num_vars(n), objective(n, Rational(0)), kinds(n, VarKind::NonNeg) {}

  void add(RatVec coeffs, Relation rel, Rational rhs) {
    if (coeffs.size() != num_vars) throw std::invalid_argument("LinearProgram: wrong row length");
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  RatVec x;       // optimal point
  Rational value; // optimal objective value
  RatVec farkas;  // one multiplier per constraint, when infeasible
  RatVec ray;     // improving feasible direction, when unbounded
};

namespace detail {

struct StandardResult {
  LPStatus status;
  RatVec x;
  RatVec ray;
};

/// min c.x  s.t.  A x = b, x >= 0, with b >= 0. Bland's rule throughout.
class Tableau {
 public:
  Tableau(std::vector<RatVec> A, RatVec b, RatVec c)
      : m_(A.size()), n_(c.size()), A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {}

  StandardResult solve() {
    // phase 1: artificial variable per row
    const std::size_t N = n_ + m_;
    T_.assign(m_, RatVec(N + 1, Rational(0)));
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) T_[i][j] = A_[i][j];
      T_[i][n_ + i] = 1;
      T_[i][N] = b_[i];
      basis_[i] = n_ + i;
    }
    cols_ = N;
    RatVec cost1(N, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost1[n_ + i] = 1;
    allowed_.assign(N, true);
    run(cost1);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) infeas += T_[i][N];
    if (infeas > 0) return {LPStatus::Infeasible, {}, {}};

    // drive artificials out of the basis, dropping redundant rows
    for (std::size_t i = 0; i < T_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t q = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(T_[i][j]) != 0) {
          q = j;
          break;
        }
      if (q == n_) {
        T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, q);
      ++i;
    }
    for (std::size_t j = n_; j < N; ++j) allowed_[j] = false;

    RatVec cost2(N, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost2[j] = c_[j];
    auto entering_unbounded = run(cost2);
    if (entering_unbounded) {
      std::size_t q = *entering_unbounded;
      RatVec ray(n_, Rational(0));
      ray[q] = 1;
      for (std::size_t i = 0; i < T_.size(); ++i)
        if (basis_[i] < n_) ray[basis_[i]] = -T_[i][q];
      return {LPStatus::Unbounded, {}, std::move(ray)};
    }
    RatVec x(n_, Rational(0));
    for (std::size_t i = 0; i < T_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = T_[i][cols_];
    return {LPStatus::Optimal, std::move(x), {}};
  }

 private:
  /// Simplex iterations on the current basis; returns the entering column
  /// if the problem is unbounded.
  std::optional<std::size_t> run(const RatVec& cost) {
    for (;;) {
      // reduced costs: c_j - c_B . column_j
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_ && !enter; ++j) {
        if (!allowed_[j]) continue;
        bool basic = false;
        for (auto bi : basis_) basic = basic || bi == j;
        if (basic) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < T_.size(); ++i)
          if (sgn(T_[i][j]) != 0) d -= cost[basis_[i]] * T_[i][j];
        if (d < 0) enter = j;
      }
      if (!enter) return std::nullopt;
      const std::size_t q = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < T_.size(); ++i) {
        if (T_[i][q] <= 0) continue;
        Rational ratio = T_[i][cols_] / T_[i][q];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return q;
      pivot(*leave, q);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    Rational p = T_[r][q];
    for (auto& x : T_[r]) x /= p;
    for (std::size_t i = 0; i < T_.size(); ++i) {
      if (i == r || sgn(T_[i][q]) == 0) continue;
      Rational f = T_[i][q];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(T_[r][j]) != 0) T_[i][j] -= f * T_[r][j];
    }
    basis_[r] = q;
  }

  std::size_t m_, n_;
  std::vector<RatVec> A_;
  RatVec b_, c_;
  std::vector<RatVec> T_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::size_t cols_ = 0;
};

/// Map a general LP to standard form. Free variables are split, slacks are
/// appended; rows are negated so that rhs >= 0.
struct StandardForm {
  std::vector<RatVec> A;
  RatVec b, c;
  std::vector<std::size_t> pos, neg;  // column of x_j^+ and x_j^- (neg = npos if NonNeg)
};

inline StandardForm to_standard(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t n = lp.num_vars;
  std::size_t col = 0;
  sf.pos.resize(n);
  sf.neg.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < n; ++j) {
    sf.pos[j] = col++;
    if (!lp.kinds.empty() && lp.kinds[j] == VarKind::Free) sf.neg[j] = col++;
  }
  std::size_t slacks = 0;
  for (const auto& c : lp.constraints) slacks += c.rel == Relation::Eq ? 0 : 1;
  const std::size_t total = col + slacks;
  std::size_t s = col;
  for (const auto& con : lp.constraints) {
    RatVec row(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[sf.pos[j]] = con.coeffs[j];
      if (sf.neg[j] != static_cast<std::size_t>(-1)) row[sf.neg[j]] = -con.coeffs[j];
    }
    if (con.rel == Relation::Ge) row[s++] = -1;
    if (con.rel == Relation::Le) row[s++] = 1;
    Rational rhs = con.rhs;
    if (rhs < 0) {
      for (auto& x : row) x = -x;
      rhs = -rhs;
    }
    sf.A.push_back(std::move(row));
    sf.b.push_back(std::move(rhs));
  }
  sf.c.assign(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    sf.c[sf.pos[j]] = lp.objective[j];
    if (sf.neg[j] != static_cast<std::size_t>(-1)) sf.c[sf.neg[j]] = -lp.objective[j];
  }
  return sf;
}

inline RatVec from_standard(const StandardForm& sf, const RatVec& z, std::size_t n) {
  RatVec x(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = z[sf.pos[j]];
    if (sf.neg[j] != static_cast<std::size_t>(-1)) x[j] -= z[sf.neg[j]];
  }
  return x;
}

inline StandardResult solve_raw(const LinearProgram& lp, StandardForm& sf) {
  sf = to_standard(lp);
  Tableau t(sf.A, sf.b, sf.c);
  return t.solve();
}

}  // namespace detail

/// Multipliers y proving infeasibility: y_i >= 0 on Ge rows, <= 0 on Le rows,
/// free on Eq rows; (y^T A)_j = 0 on free variables and <= 0 on nonnegative
/// ones; y . b = 1.
inline bool verify_farkas(const LinearProgram& lp, const RatVec& y) {
  if (y.size() != lp.constraints.size()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto rel = lp.constraints[i].rel;
    if (rel == Relation::Ge && y[i] < 0) return false;
    if (rel == Relation::Le && y[i] > 0) return false;
    yb += y[i] * lp.constraints[i].rhs;
  }
  if (yb <= 0) return false;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * lp.constraints[i].coeffs[j];
    bool free = !lp.kinds.empty() && lp.kinds[j] == VarKind::Free;
    if (free ? s != 0 : s > 0) return false;
  }
  return true;
}

inline bool satisfies(const LinearProgram& lp, const RatVec& x) {
  for (std::size_t j = 0; j < lp.num_vars; ++j)
    if ((lp.kinds.empty() || lp.kinds[j] == VarKind::NonNeg) && x[j] < 0) return false;
  for (const auto& c : lp.constraints) {
    Rational s = dot(c.coeffs, x);
    if (c.rel == Relation::Ge && s < c.rhs) return false;
    if (c.rel == Relation::Le && s > c.rhs) return false;
    if (c.rel == Relation::Eq && s != c.rhs) return false;
  }
  return true;
}

inline LPOutcome lp_solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars) throw std::invalid_argument("lp_solve: objective length");
  detail::StandardForm sf;
  auto res = detail::solve_raw(lp, sf);
  LPOutcome out;
  out.status = res.status;
  if (res.status == LPStatus::Optimal) {
    out.x = detail::from_standard(sf, res.x, lp.num_vars);
    out.value = dot(lp.objective, out.x);
    return out;
  }
  if (res.status == LPStatus::Unbounded) {
    out.ray = detail::from_standard(sf, res.ray, lp.num_vars);
    return out;
  }
  // Farkas multipliers from the alternative system.
  const std::size_t m = lp.constraints.size();
  LinearProgram alt(m);
  for (std::size_t i = 0; i < m; ++i)
    alt.kinds[i] = lp.constraints[i].rel == Relation::Eq ? VarKind::Free : VarKind::NonNeg;
  auto sign = [&](std::size_t i) {
    return lp.constraints[i].rel == Relation::Le ? Rational(-1) : Rational(1);
  };
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    RatVec row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = sign(i) * lp.constraints[i].coeffs[j];
    bool free = !lp.kinds.empty() && lp.kinds[j] == VarKind::Free;
    alt.add(std::move(row), free ? Relation::Eq : Relation::Le, 0);
  }
  RatVec brow(m);
  for (std::size_t i = 0; i < m; ++i) brow[i] = sign(i) * lp.constraints[i].rhs;
  alt.add(std::move(brow), Relation::Eq, 1);
  detail::StandardForm sf2;
  auto res2 = detail::solve_raw(alt, sf2);
  if (res2.status != LPStatus::Optimal)
    throw std::logic_error("lp_solve: no Farkas certificate for an infeasible program");
  RatVec z = detail::from_standard(sf2, res2.x, m);
  out.farkas.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.farkas[i] = sign(i) * z[i];
  if (!verify_farkas(lp, out.farkas)) throw std::logic_error("lp_solve: Farkas check failed");
  return out;
}

// ---------------------------------------------------------------------------
// strict separation

/// Either w >= 0 with w . d > 0 for all pairs d, or multipliers lambda >= 0
/// (not all zero) with sum lambda_k d_k <= 0 componentwise.
struct SeparationResult {
  bool separable = false;
  IntVec witness;      // primitive integer witness
  Rational margin;     // optimal epsilon of the normalized program
  IntVec multipliers;  // primitive integer certificate, one per pair
  IntVec combination;  // sum_k multipliers_k * pairs_k
};

inline bool verify_separation(const std::vector<IntVec>& pairs, const SeparationResult& s,
                              bool strictly_positive = false) {
  if (s.separable) {
    for (const auto& x : s.witness)
      if (x < 0 || (strictly_positive && x == 0)) return false;
    for (const auto& d : pairs)
      if (dot(d, s.witness) <= 0) return false;
    return true;
  }
  if (s.multipliers.size() != pairs.size() || pairs.empty()) return false;
  IntVec comb(pairs.front().size(), 0);
  bool nonzero = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (s.multipliers[k] < 0) return false;
    nonzero = nonzero || s.multipliers[k] > 0;
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] += s.multipliers[k] * pairs[k][i];
  }
  if (!nonzero || comb != s.combination) return false;
  for (const auto& x : comb)
    if (x > 0) return false;
  return true;
}

/// maximize eps s.t. d . w >= eps for every pair, 0 <= w <= 1 (and w_i >= eps
/// when strictly_positive). A positive optimum gives the witness; otherwise
/// the certificate comes from: lambda >= 0, sum lambda = 1,
/// sum lambda_k d_k <= 0, pushing the combination towards zero.
inline SeparationResult strict_separation(const std::vector<IntVec>& pairs,
                                          bool strictly_positive = false) {
  if (pairs.empty()) throw std::invalid_argument("strict_separation: no pairs");
  const std::size_t n = pairs.front().size();
  LinearProgram lp(n + 1);
  lp.kinds[n] = VarKind::Free;
  lp.objective[n] = -1;
  for (const auto& d : pairs) {
    RatVec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = d[i];
    row[n] = -1;
    lp.add(std::move(row), Relation::Ge, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(n + 1, Rational(0));
    row[i] = 1;
    lp.add(row, Relation::Le, 1);
    if (strictly_positive) {
      row[n] = -1;
      lp.add(std::move(row), Relation::Ge, 0);
    }
  }
  auto res = lp_solve(lp);
  if (res.status != LPStatus::Optimal) throw std::logic_error("strict_separation: LP not optimal");
  SeparationResult out;
  out.margin = res.x[n];
  if (out.margin > 0) {
    out.separable = true;
    out.witness = clear_denominators(RatVec(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n)));
    return out;
  }
  const std::size_t m = pairs.size();
  LinearProgram cert(m);
  cert.add(RatVec(m, Rational(1)), Relation::Eq, 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(m);
    for (std::size_t k = 0; k < m; ++k) {
      row[k] = pairs[k][i];
      cert.objective[k] -= pairs[k][i];
    }
    cert.add(std::move(row), Relation::Le, 0);
  }
  auto cr = lp_solve(cert);
  if (cr.status != LPStatus::Optimal) throw std::logic_error("strict_separation: no certificate");
  out.multipliers = clear_denominators(cr.x);
  out.combination.assign(n, 0);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) out.combination[i] += out.multipliers[k] * pairs[k][i];
  return out;
}

}  // namespace mckay
