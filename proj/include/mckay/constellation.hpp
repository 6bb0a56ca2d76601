#pragma once

// The McKay module, distinguished G-constellations, their support quivers
// and the path decomposition of quiver flows.

#include "group.hpp"
#include "lp.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// x_i e_rho - e_{rho rho_i}; arrow a_i^rho runs from rho rho_i (tail) to rho.
struct McKayGenerator {
  std::size_t rho;
  std::size_t i;
  std::size_t target;  // rho * rho_i
};

inline std::vector<McKayGenerator> mckay_module(const CharGroup& G) {
  std::vector<McKayGenerator> out;
  for (std::size_t rho = 0; rho < G.r(); ++rho)
    for (std::size_t i = 0; i < G.n(); ++i) out.push_back({rho, i, G.times_rho(rho, i)});
  return out;
}

/// Coefficients b_i^rho in {0,1}, stored at column rho * n + i.
struct QuiverRep {
  std::size_t r = 0;
  std::size_t n = 0;
  std::vector<std::uint8_t> b;

  [[nodiscard]] int at(std::size_t rho, std::size_t i) const { return b[rho * n + i]; }
  void set(std::size_t rho, std::size_t i, int v) { b[rho * n + i] = static_cast<std::uint8_t>(v); }

  static QuiverRep ones(std::size_t r, std::size_t n) { return {r, n, std::vector<std::uint8_t>(r * n, 1)}; }
  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

struct Constellation {
  QuiverRep rep;
  RatVec v;        // LP optimum with v_{rho_0} = 0
  RatVec slack;    // w_i + v_rho - v_{rho rho_i}, per column
  Rational value;  // theta . v
};

/// Minimize theta . v over w_i + v_rho - v_{rho rho_i} >= 0 with v_{rho_0} = 0;
/// b_i^rho = 1 exactly when that constraint is tight on the whole optimal
/// face. `row_order` permutes the constraint rows (a permutation of
/// 0..nr-1) and leaves b unchanged.
inline Constellation distinguished_constellation(const CharGroup& G, const ThetaParam& theta,
                                                 const RatVec& w,
                                                 const std::vector<std::size_t>& row_order = {}) {
  const std::size_t r = G.r(), n = G.n();
  if (theta.size() != r) throw std::invalid_argument("theta must have one entry per character");
  if (w.size() != n) throw std::invalid_argument("weight must have one entry per variable");
  for (const auto& x : w)
    if (x < 0) throw std::invalid_argument("weight must be nonnegative");
  std::vector<std::size_t> order = row_order;
  if (order.empty()) {
    order.resize(r * n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != r * n) throw std::invalid_argument("row_order must permute the arrows");

  LinearProgram lp(r);
  for (auto& k : lp.kinds) k = VarKind::Free;
  lp.objective = theta.values();
  RatVec pin(r, Rational(0));
  pin[0] = 1;
  lp.add(pin, Relation::Eq, 0);
  for (auto col : order) {
    const std::size_t rho = col / n, i = col % n;
    RatVec row(r, Rational(0));
    row[rho] += 1;
    row[G.times_rho(rho, i)] -= 1;
    lp.add(std::move(row), Relation::Ge, -w[i]);
  }
  auto res = lp_solve(lp);
  if (res.status == LPStatus::Unbounded)
    throw std::invalid_argument("theta . v is unbounded below on the slice");
  if (res.status != LPStatus::Optimal) throw std::logic_error("slice LP infeasible");

  Constellation c;
  c.v = res.x;
  c.value = res.value;
  c.rep = {r, n, std::vector<std::uint8_t>(r * n, 0)};
  c.slack.resize(r * n);
  // A row tight at this vertex may still be slack elsewhere on the optimal
  // face; maximize its slack over the face to find out.
  LinearProgram face = lp;
  face.add(theta.values(), Relation::Eq, c.value);
  for (std::size_t rho = 0; rho < r; ++rho)
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = w[i] + c.v[rho] - c.v[G.times_rho(rho, i)];
      c.slack[rho * n + i] = s;
      if (s != 0) continue;
      const std::size_t head = G.times_rho(rho, i);
      if (head == rho) {
        c.rep.set(rho, i, w[i] == 0 ? 1 : 0);
        continue;
      }
      face.objective.assign(r, Rational(0));
      face.objective[rho] = -1;
      face.objective[head] = 1;
      auto best = lp_solve(face);
      bool tight = best.status == LPStatus::Optimal && w[i] - best.value == 0;
      c.rep.set(rho, i, tight ? 1 : 0);
    }
  return c;
}

struct RelationViolation : std::runtime_error {
  std::size_t i, j, rho;
  RelationViolation(std::size_t i_, std::size_t j_, std::size_t rho_)
      : std::runtime_error("quiver relation fails for i=" + std::to_string(i_ + 1) +
                           ", j=" + std::to_string(j_ + 1) + ", rho" + std::to_string(rho_)),
        i(i_),
        j(j_),
        rho(rho_) {}
};

struct QuiverRepReport {
  std::size_t relations_checked = 0;
  std::size_t spairs_reduced = 0;
};

/// Check the quiver relations b_j^{rho rho_i} b_i^rho = b_i^{rho rho_j} b_j^rho
/// and reduce every S-pair of the generators x_i e_rho - b_i^rho e_{rho rho_i}
/// of M_b to zero, term by term.
inline QuiverRepReport verify_quiver_rep(const CharGroup& G, const QuiverRep& rep) {
  const std::size_t r = G.r(), n = G.n();
  QuiverRepReport report;
  for (std::size_t rho = 0; rho < r; ++rho)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ++report.relations_checked;
        int lhs = rep.at(G.times_rho(rho, i), j) * rep.at(rho, i);
        int rhs = rep.at(G.times_rho(rho, j), i) * rep.at(rho, j);
        if (lhs != rhs) throw RelationViolation(i, j, rho);
      }

  // module terms: (exponents, vertex) -> coefficient
  using Term = std::pair<std::vector<std::int64_t>, std::size_t>;
  auto reduce = [&](std::map<Term, long> f) {
    for (;;) {
      auto it = std::find_if(f.begin(), f.end(), [](const auto& t) {
        if (t.second == 0) return false;
        for (auto e : t.first.first)
          if (e > 0) return true;
        return false;
      });
      if (it == f.end()) break;
      Term t = it->first;
      long c = it->second;
      f.erase(it);
      std::size_t k = 0;
      while (t.first[k] == 0) ++k;
      // x_k e_v -> b_k^v e_{v rho_k}
      int b = rep.at(t.second, k);
      if (b == 0) continue;
      Term u{t.first, G.times_rho(t.second, k)};
      u.first[k] -= 1;
      f[u] += c * b;
    }
    for (const auto& [t, c] : f)
      if (c != 0) return false;
    return true;
  };
  for (std::size_t rho = 0; rho < r; ++rho)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        // x_j (x_i e_rho - b_i e_{rho rho_i}) - x_i (x_j e_rho - b_j e_{rho rho_j})
        std::map<Term, long> s;
        std::vector<std::int64_t> xj(n, 0), xi(n, 0);
        xj[j] = 1;
        xi[i] = 1;
        s[{xj, G.times_rho(rho, i)}] -= rep.at(rho, i);
        s[{xi, G.times_rho(rho, j)}] += rep.at(rho, j);
        ++report.spairs_reduced;
        if (!reduce(std::move(s))) throw RelationViolation(i, j, rho);
      }
  return report;
}

struct UnexpectedCycle : std::runtime_error {
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (rho, i)
  explicit UnexpectedCycle(std::vector<std::pair<std::size_t, std::size_t>> a)
      : std::runtime_error("support quiver contains a directed cycle"), arrows(std::move(a)) {}
};

struct Arrow {
  std::size_t rho;  // head
  std::size_t i;
  std::size_t tail;  // rho * rho_i
};

struct SupportQuiver {
  std::size_t r = 0;
  std::vector<Arrow> arrows;

  [[nodiscard]] std::vector<std::vector<std::size_t>> successors() const {
    std::vector<std::vector<std::size_t>> s(r);
    for (const auto& a : arrows) s[a.tail].push_back(a.rho);
    return s;
  }

  /// Vertices reachable from `sources` following arrows tail -> head.
  [[nodiscard]] std::vector<bool> reachable(const std::vector<std::size_t>& sources,
                                            bool reversed = false) const {
    std::vector<std::vector<std::size_t>> adj(r);
    for (const auto& a : arrows) {
      if (reversed)
        adj[a.rho].push_back(a.tail);
      else
        adj[a.tail].push_back(a.rho);
    }
    std::vector<bool> seen(r, false);
    std::vector<std::size_t> stack = sources;
    for (auto s : sources) seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    return seen;
  }

  /// Arrows of a directed cycle, if any (depth-first search in vertex order).
  [[nodiscard]] std::optional<std::vector<Arrow>> find_cycle() const {
    std::vector<std::vector<const Arrow*>> out(r);
    for (const auto& a : arrows) out[a.tail].push_back(&a);
    std::vector<int> state(r, 0);
    std::vector<const Arrow*> stack;
    std::optional<std::vector<Arrow>> cycle;
    auto dfs = [&](auto&& self, std::size_t v) -> bool {
      state[v] = 1;
      for (const Arrow* a : out[v]) {
        stack.push_back(a);
        if (state[a->rho] == 1) {
          std::vector<Arrow> c;
          std::size_t k = stack.size();
          while (k-- > 0) {
            c.push_back(*stack[k]);
            if (stack[k]->tail == a->rho) break;
          }
          std::reverse(c.begin(), c.end());
          cycle = std::move(c);
          return true;
        }
        if (state[a->rho] == 0 && self(self, a->rho)) return true;
        stack.pop_back();
      }
      state[v] = 2;
      return false;
    };
    for (std::size_t v = 0; v < r; ++v)
      if (state[v] == 0 && dfs(dfs, v)) return cycle;
    return std::nullopt;
  }
};

inline SupportQuiver support_quiver(const CharGroup& G, const QuiverRep& rep, bool expect_acyclic) {
  SupportQuiver q;
  q.r = rep.r;
  for (std::size_t rho = 0; rho < rep.r; ++rho)
    for (std::size_t i = 0; i < rep.n; ++i)
      if (rep.at(rho, i)) q.arrows.push_back({rho, i, G.times_rho(rho, i)});
  if (expect_acyclic) {
    if (auto c = q.find_cycle()) {
      std::vector<std::pair<std::size_t, std::size_t>> arrows;
      for (const auto& a : *c) arrows.emplace_back(a.rho, a.i);
      throw UnexpectedCycle(std::move(arrows));
    }
  }
  return q;
}

struct PathDecomposition {
  IntVec cycles;             // nonnegative circulation, B . cycles = 0
  std::vector<IntVec> paths; // B . path = e_rho - e_{rho_0}
  std::vector<std::size_t> endpoints;
};

/// Split u in N^{nr} with B u = theta (theta_{rho_0} <= 0, other entries
/// >= 0) into a circulation and paths out of rho_0. Walks leave rho_0 along
/// arrows of positive residual multiplicity and stop at a vertex with
/// positive residual excess; closed loops met on the way go to the
/// circulation.
inline PathDecomposition path_decompose(const IntVec& u, const ThetaParam& theta,
                                        const QuiverMatrices& Q) {
  const std::size_t r = Q.r, n = Q.n, m = r * n;
  if (u.size() != m) throw std::invalid_argument("path_decompose: u has wrong length");
  for (const auto& x : u)
    if (x < 0) throw std::invalid_argument("path_decompose: u must be nonnegative");
  if (theta.size() != r) throw std::invalid_argument("path_decompose: theta has wrong length");
  if (theta[0] > 0) throw std::invalid_argument("path_decompose: theta_{rho_0} must be <= 0");
  for (std::size_t k = 1; k < r; ++k)
    if (theta[k] < 0) throw std::invalid_argument("path_decompose: theta_rho must be >= 0");
  std::vector<Integer> excess(r, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t c = 0; c < m; ++c) excess[a] += Q.B(a, c) * u[c];
  for (std::size_t a = 0; a < r; ++a)
    if (Rational(excess[a]) != theta[a]) throw std::invalid_argument("path_decompose: B u != theta");

  auto tail = [&](std::size_t c) {
    for (std::size_t a = 0; a < r; ++a)
      if (Q.B(a, c) < 0) return a;
    return Q.arrow_of_column(c).first;  // loop
  };
  auto head = [&](std::size_t c) { return Q.arrow_of_column(c).first; };

  IntVec res = u;
  PathDecomposition out;
  out.cycles.assign(m, 0);
  // loops never enter a path
  for (std::size_t c = 0; c < m; ++c)
    if (tail(c) == head(c)) {
      out.cycles[c] = res[c];
      res[c] = 0;
    }
  while (excess[0] < 0) {
    std::vector<std::size_t> walk;  // columns
    std::vector<std::size_t> verts{0};
    std::size_t v = 0;
    while (v == 0 || excess[v] <= 0) {
      std::size_t next = m;
      for (std::size_t c = 0; c < m; ++c)
        if (res[c] > 0 && tail(c) == v) {
          next = c;
          break;
        }
      if (next == m) throw std::logic_error("path_decompose: walk is stuck");
      walk.push_back(next);
      v = head(next);
      auto seen = std::find(verts.begin(), verts.end(), v);
      if (seen != verts.end()) {
        std::size_t from = static_cast<std::size_t>(seen - verts.begin());
        for (std::size_t k = from; k < walk.size(); ++k) {
          res[walk[k]] -= 1;
          out.cycles[walk[k]] += 1;
        }
        walk.resize(from);
        verts.resize(from + 1);
        continue;
      }
      verts.push_back(v);
    }
    IntVec p(m, 0);
    for (auto c : walk) {
      p[c] += 1;
      res[c] -= 1;
    }
    excess[0] += 1;
    excess[v] -= 1;
    out.paths.push_back(std::move(p));
    out.endpoints.push_back(v);
  }
  for (std::size_t c = 0; c < m; ++c) out.cycles[c] += res[c];
  return out;
}

/// Generators of M_b grouped by rho-block: "x_i*e_rho - e_target" when
/// b = 1, "x_i*e_rho" when b = 0.
inline std::string format_module(const CharGroup& G, const QuiverRep& rep,
                                 const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t rho = 0; rho < rep.r; ++rho) {
    os << G.label(rho) << ":";
    for (std::size_t i = 0; i < rep.n; ++i) {
      os << (i ? ", " : " ") << names[i] << "*e_" << G.label(rho);
      if (rep.at(rho, i)) os << " - e_" << G.label(G.times_rho(rho, i));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mckay
