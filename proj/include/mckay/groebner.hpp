#pragma once

// Pure-difference binomials, term orders, Buchberger's algorithm, lattice
// ideals and monomial ideals.

#include "exact.hpp"
#include "group.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

using Exponents = std::vector<std::int64_t>;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

inline std::uint64_t support_mask(const Exponents& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) m |= std::uint64_t{1} << (i % 64);
  return m;
}

}  // namespace detail

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline std::int64_t total_degree(const Exponents& a) {
  std::int64_t s = 0;
  for (auto x : a) s = detail::checked_add(s, x);
  return s;
}

/// Canonical monomial order used for sorting and deduplication: total degree,
/// then the exponent vector compared lexicographically from x1 (larger first).
inline bool canonical_less(const Exponents& a, const Exponents& b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

/// Weight rows (compared in turn) refined by lex with x1 > x2 > ... > xn.
class TermOrder {
 public:
  TermOrder() = default;

  /// Single nonnegative weight vector refined by lex.
  static TermOrder weight(const RatVec& w) { return matrix({w}); }

  static TermOrder lex(std::size_t n) {
    TermOrder t;
    t.n_ = n;
    return t;
  }

  /// Rows compared in order, then lex. Must define a monomial order: for each
  /// variable the first row with a nonzero entry must have it positive.
  static TermOrder matrix(const std::vector<RatVec>& rows) {
    TermOrder t;
    if (rows.empty()) throw std::invalid_argument("TermOrder: no rows");
    t.n_ = rows.front().size();
    for (const auto& r : rows) {
      if (r.size() != t.n_) throw std::invalid_argument("TermOrder: ragged rows");
      t.rational_rows_.push_back(r);
      t.rows_.push_back(to_int64(clear_denominators(r)));
      // clear_denominators makes the row primitive with the same sign pattern
    }
    for (std::size_t i = 0; i < t.n_; ++i) {
      for (const auto& row : t.rows_) {
        if (row[i] == 0) continue;
        if (row[i] < 0)
          throw std::invalid_argument("TermOrder: not a monomial order (variable " +
                                      std::to_string(i + 1) + " is below 1)");
        break;
      }
    }
    return t;
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<RatVec>& rational_rows() const { return rational_rows_; }
  [[nodiscard]] RatVec primary_weight() const {
    return rational_rows_.empty() ? RatVec(n_, Rational(0)) : rational_rows_.front();
  }

  /// <0, 0, >0 as a is smaller, equal, larger than b.
  [[nodiscard]] int compare(const Exponents& a, const Exponents& b) const {
    for (const auto& row : rows_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < n_; ++i)
        s += static_cast<__int128>(row[i]) * (static_cast<__int128>(a[i]) - b[i]);
      if (s != 0) return s > 0 ? 1 : -1;
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  [[nodiscard]] bool greater(const Exponents& a, const Exponents& b) const {
    return compare(a, b) > 0;
  }

 private:
  std::size_t n_ = 0;
  std::vector<RatVec> rational_rows_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// x^lead - x^trail with lead above trail in the order that produced it.
struct Binomial {
  Exponents lead;
  Exponents trail;

  [[nodiscard]] IntVec vector() const {
    IntVec v(lead.size());
    for (std::size_t i = 0; i < lead.size(); ++i) v[i] = static_cast<long>(lead[i] - trail[i]);
    return v;
  }

  /// x^{v+} - x^{v-}, oriented by `order`.
  static Binomial from_vector(const IntVec& v, const TermOrder& order) {
    Exponents p(v.size(), 0), m(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].fits_slong_p()) throw std::overflow_error("exponent overflow");
      long x = v[i].get_si();
      (x > 0 ? p[i] : m[i]) = x > 0 ? x : -x;
    }
    return oriented(std::move(p), std::move(m), order);
  }

  static Binomial oriented(Exponents a, Exponents b, const TermOrder& order) {
    int c = order.compare(a, b);
    if (c == 0) throw std::invalid_argument("Binomial: both terms equal");
    if (c < 0) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline bool canonical_less(const Binomial& a, const Binomial& b) {
  if (a.lead != b.lead) return canonical_less(a.lead, b.lead);
  return canonical_less(a.trail, b.trail);
}

struct ReducedGB {
  TermOrder order;
  std::vector<Binomial> elements;  // sorted by canonical order of leads
  std::size_t n = 0;
};

/// Instrumentation points. `on_intermediate` sees every binomial that enters
/// a basis during Buchberger; `on_result` sees every finished reduced basis.
struct GroebnerHooks {
  std::function<void(const Binomial&, const TermOrder&)> on_intermediate;
  std::function<void(const ReducedGB&)> on_result;
};

inline GroebnerHooks& groebner_hooks() {
  static thread_local GroebnerHooks hooks;
  return hooks;
}

struct BuchbergerOptions {
  std::size_t max_basis_size = std::numeric_limits<std::size_t>::max();
  std::size_t max_pairs = std::numeric_limits<std::size_t>::max();
};

namespace detail {

class BinomialBasis {
 public:
  BinomialBasis(std::size_t n, const TermOrder& order) : n_(n), order_(order) {}

  struct Elem {
    Binomial b;
    std::uint64_t mask;
    bool active;
  };

  /// Rewrite x^m by leading terms of the active elements until irreducible.
  Exponents reduce(Exponents m) const {
    for (;;) {
      std::uint64_t mm = support_mask(m);
      const Elem* hit = nullptr;
      for (const auto& e : elems_) {
        if (!e.active || (e.mask & ~mm) != 0) continue;
        if (divides(e.b.lead, m)) {
          hit = &e;
          break;
        }
      }
      if (!hit) return m;
      for (std::size_t i = 0; i < n_; ++i)
        m[i] = checked_add(m[i] - hit->b.lead[i], hit->b.trail[i]);
    }
  }

  std::vector<Elem> elems_;
  std::size_t n_;
  const TermOrder& order_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by pure-difference
/// binomials. Pairs are chosen by smallest lcm; useless pairs are removed
/// with the Gebauer-Moeller criteria.
inline ReducedGB buchberger(const std::vector<Binomial>& gens, const TermOrder& order,
                            const BuchbergerOptions& opts = {}) {
  const std::size_t n = order.n();
  detail::BinomialBasis basis(n, order);
  auto& elems = basis.elems_;
  auto& hooks = groebner_hooks();

  struct Pair {
    std::size_t i, j;
    Exponents lcm;
  };
  std::vector<Pair> pairs;
  std::size_t processed = 0;

  auto check_closure = [&](const Binomial& b) {
    if (b.lead.size() != n || b.trail.size() != n)
      throw std::logic_error("buchberger: binomial of wrong length");
    if (order.compare(b.lead, b.trail) <= 0)
      throw std::logic_error("buchberger: binomial not in pure-difference form");
    if (hooks.on_intermediate) hooks.on_intermediate(b, order);
  };

  // Gebauer-Moeller update with new element index h.
  auto update = [&](std::size_t h) {
    const Exponents& lh = elems[h].b.lead;
    std::vector<Pair> C, D;
    for (std::size_t g = 0; g < h; ++g)
      if (elems[g].active) C.push_back({g, h, monomial_lcm(elems[g].b.lead, lh)});
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(elems[p.i].b.lead, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides(C[b].lcm, p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!coprime(elems[p.i].b.lead, lh)) E.push_back(std::move(p));
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      bool drop = divides(lh, p.lcm) &&
                  monomial_lcm(elems[p.i].b.lead, lh) != p.lcm &&
                  monomial_lcm(elems[p.j].b.lead, lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (auto& p : E) pairs.push_back(std::move(p));
    for (std::size_t g = 0; g < h; ++g)
      if (elems[g].active && divides(lh, elems[g].b.lead)) elems[g].active = false;
  };

  auto insert = [&](Exponents a, Exponents b) {
    a = basis.reduce(std::move(a));
    b = basis.reduce(std::move(b));
    int c = order.compare(a, b);
    if (c == 0) return;
    if (c < 0) std::swap(a, b);
    Binomial nb{std::move(a), std::move(b)};
    check_closure(nb);
    std::uint64_t mask = detail::support_mask(nb.lead);
    elems.push_back({std::move(nb), mask, true});
    std::size_t active = 0;
    for (const auto& e : elems) active += e.active ? 1 : 0;
    if (active > opts.max_basis_size) throw BudgetExceeded("buchberger: basis size budget exceeded");
    update(elems.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.lead.size() != n || g.trail.size() != n)
      throw std::invalid_argument("buchberger: generator of wrong length");
    insert(g.lead, g.trail);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = order.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::make_pair(pairs[k].j, pairs[k].i) <
                                  std::make_pair(pairs[best].j, pairs[best].i)))
        best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed > opts.max_pairs) throw BudgetExceeded("buchberger: pair budget exceeded");
    const Binomial& f = elems[p.i].b;
    const Binomial& g = elems[p.j].b;
    Exponents s1(n), s2(n);
    for (std::size_t k = 0; k < n; ++k) {
      s1[k] = detail::checked_add(p.lcm[k] - f.lead[k], f.trail[k]);
      s2[k] = detail::checked_add(p.lcm[k] - g.lead[k], g.trail[k]);
    }
    insert(std::move(s1), std::move(s2));
  }

  ReducedGB out;
  out.order = order;
  out.n = n;
  std::vector<Binomial> active;
  for (const auto& e : elems)
    if (e.active) active.push_back(e.b);
  for (auto& b : active) b.trail = basis.reduce(b.trail);
  std::sort(active.begin(), active.end(),
            [](const Binomial& a, const Binomial& b) { return canonical_less(a, b); });
  out.elements = std::move(active);
  if (hooks.on_result) hooks.on_result(out);
  return out;
}

/// Generators given as lattice vectors u, meaning x^{u+} - x^{u-}.
inline ReducedGB buchberger(const std::vector<IntVec>& vectors, const TermOrder& order,
                            const BuchbergerOptions& opts = {}) {
  std::vector<Binomial> gens;
  for (const auto& v : vectors)
    if (!is_zero(v)) gens.push_back(Binomial::from_vector(v, order));
  return buchberger(gens, order, opts);
}

/// The unique standard monomial congruent to x^m.
inline Exponents normal_form(Exponents m, const ReducedGB& gb) {
  if (m.size() != gb.n) throw std::invalid_argument("normal_form: wrong length");
  for (;;) {
    const Binomial* hit = nullptr;
    for (const auto& g : gb.elements)
      if (divides(g.lead, m)) {
        hit = &g;
        break;
      }
    if (!hit) return m;
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = detail::checked_add(m[i] - hit->lead[i], hit->trail[i]);
  }
}

inline bool reduces_to_zero(const Binomial& b, const ReducedGB& gb) {
  return normal_form(b.lead, gb) == normal_form(b.trail, gb);
}

/// Independent check that `gb` is a reduced Groebner basis: every S-pair
/// (no criteria) reduces to zero, no lead divides a term of another element,
/// and every element is oriented by the order.
struct GBVerification {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string failure;
};

inline GBVerification verify_groebner_basis(const ReducedGB& gb) {
  GBVerification v;
  const auto& E = gb.elements;
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (gb.order.compare(E[i].lead, E[i].trail) <= 0) {
      v.ok = false;
      v.failure = "element " + std::to_string(i) + " is not oriented";
      return v;
    }
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (i == j) continue;
      if (divides(E[j].lead, E[i].lead) || divides(E[j].lead, E[i].trail)) {
        v.ok = false;
        v.failure = "element " + std::to_string(i) + " is not reduced";
        return v;
      }
    }
  }
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      ++v.pairs_checked;
      Exponents l = monomial_lcm(E[i].lead, E[j].lead);
      Exponents a(l.size()), b(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) {
        a[k] = l[k] - E[i].lead[k] + E[i].trail[k];
        b[k] = l[k] - E[j].lead[k] + E[j].trail[k];
      }
      if (normal_form(a, gb) != normal_form(b, gb)) {
        v.ok = false;
        v.failure = "S-pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") does not reduce to zero";
        return v;
      }
    }
  return v;
}

// ---------------------------------------------------------------------------
// monomial ideals

struct NotACluster : std::runtime_error {
  std::size_t character;
  std::size_t count;  // number of standard monomials in that degree
  bool infinite;
  NotACluster(std::size_t ch, std::size_t c, bool inf)
      : std::runtime_error("not a G-cluster: character rho" + std::to_string(ch) + " has " +
                           (inf ? std::string("infinitely many") : std::to_string(c)) +
                           " standard monomials"),
        character(ch),
        count(c),
        infinite(inf) {}
};

struct TiedWeight : std::runtime_error {
  Binomial element;
  explicit TiedWeight(Binomial b)
      : std::runtime_error("weight is not generic: a basis element is balanced"),
        element(std::move(b)) {}
};

/// Monomial ideal stored by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t n, std::vector<Exponents> gens) : n_(n) {
    for (const auto& g : gens)
      if (g.size() != n) throw std::invalid_argument("MonomialIdeal: wrong length");
    std::sort(gens.begin(), gens.end(),
              [](const Exponents& a, const Exponents& b) { return canonical_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < gens.size() && minimal; ++j)
        if (j != i && divides(gens[j], gens[i])) minimal = false;
      if (minimal) gens_.push_back(gens[i]);
    }
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::vector<Exponents>& min_gens() const { return gens_; }

  [[nodiscard]] bool contains(const Exponents& m) const {
    for (const auto& g : gens_)
      if (divides(g, m)) return true;
    return false;
  }

  /// True when every variable has a pure power among the generators.
  [[nodiscard]] bool is_artinian() const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool found = false;
      for (const auto& g : gens_) {
        bool pure = g[i] > 0;
        for (std::size_t k = 0; k < n_ && pure; ++k)
          if (k != i && g[k] != 0) pure = false;
        if (pure) found = true;
      }
      if (!found) return false;
    }
    return true;
  }

  /// All standard monomials (requires is_artinian), in canonical order.
  [[nodiscard]] std::vector<Exponents> standard_monomials(
      std::size_t limit = std::numeric_limits<std::size_t>::max()) const {
    if (!is_artinian()) throw std::invalid_argument("monomial ideal has infinitely many standard monomials");
    std::vector<Exponents> out;
    std::set<Exponents> seen;
    std::vector<Exponents> stack{Exponents(n_, 0)};
    if (contains(stack.back())) return out;
    seen.insert(stack.back());
    while (!stack.empty()) {
      Exponents m = std::move(stack.back());
      stack.pop_back();
      out.push_back(m);
      if (out.size() > limit) throw BudgetExceeded("standard monomial budget exceeded");
      for (std::size_t i = 0; i < n_; ++i) {
        Exponents x = m;
        ++x[i];
        if (!contains(x) && seen.insert(x).second) stack.push_back(std::move(x));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Exponents& a, const Exponents& b) { return canonical_less(a, b); });
    return out;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.gens_.size() != b.gens_.size()) return a.gens_.size() < b.gens_.size();
    for (std::size_t i = 0; i < a.gens_.size(); ++i)
      if (a.gens_[i] != b.gens_[i]) return canonical_less(a.gens_[i], b.gens_[i]);
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Exponents> gens_;
};

/// Leading terms of a Groebner basis (the initial ideal of the refined order).
inline MonomialIdeal leading_ideal(const ReducedGB& gb) {
  std::vector<Exponents> leads;
  for (const auto& g : gb.elements) leads.push_back(g.lead);
  return MonomialIdeal(gb.n, std::move(leads));
}

/// in_w of the ideal for the order's first weight row; TiedWeight when some
/// basis element is balanced under that weight.
inline MonomialIdeal initial_ideal(const ReducedGB& gb) {
  RatVec w = gb.order.primary_weight();
  for (const auto& g : gb.elements) {
    Rational s = 0;
    for (std::size_t i = 0; i < gb.n; ++i) s += w[i] * (g.lead[i] - g.trail[i]);
    if (s == 0) throw TiedWeight(g);
  }
  return leading_ideal(gb);
}

/// character index -> its unique standard monomial; NotACluster otherwise.
inline std::vector<Exponents> standard_monomials(const MonomialIdeal& J, const CharGroup& G) {
  if (J.n() != G.n()) throw std::invalid_argument("standard_monomials: dimension mismatch");
  const std::size_t r = G.r();
  if (!J.is_artinian()) {
    // some variable power never enters J, so its degree class is infinite
    for (std::size_t i = 0; i < J.n(); ++i) {
      bool pure = false;
      for (const auto& g : J.min_gens()) {
        bool p = g[i] > 0;
        for (std::size_t k = 0; k < J.n() && p; ++k)
          if (k != i && g[k] != 0) p = false;
        pure = pure || p;
      }
      if (!pure) throw NotACluster(0, 0, true);
    }
  }
  std::vector<Exponents> table(r);
  std::vector<std::size_t> count(r, 0);
  for (auto& m : J.standard_monomials()) {
    std::size_t d = G.degree(m);
    if (count[d]++ == 0) table[d] = std::move(m);
  }
  for (std::size_t rho = 0; rho < r; ++rho)
    if (count[rho] != 1) throw NotACluster(rho, count[rho], false);
  return table;
}

// ---------------------------------------------------------------------------
// lattice ideals

/// Default order for lattice ideals: total degree refined by lex.
inline TermOrder default_order(std::size_t n) {
  return TermOrder::weight(RatVec(n, Rational(1)));
}

/// Smallest k >= 1 with k e_i in the lattice, for every i.
inline std::vector<std::int64_t> unit_orders(const IntMatrix& basis) {
  const std::size_t n = basis.cols();
  Integer index = lattice_index(basis);
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    for (std::int64_t k = 1;; ++k) {
      e[i] = k;
      if (in_lattice(basis, e)) {
        out[i] = k;
        break;
      }
      if (k > index) throw std::logic_error("unit_orders: order exceeds index");
    }
  }
  return out;
}

/// Reduced Groebner basis of the lattice ideal I_M of a full-rank lattice.
/// The binomials x_i^{k_i} - 1 make every variable a unit modulo the
/// generated ideal, so it is already saturated and one Buchberger run gives
/// I_M.
inline ReducedGB lattice_ideal_gb(const IntMatrix& basis, const TermOrder& order,
                                  const BuchbergerOptions& opts = {}) {
  const std::size_t n = basis.cols();
  auto H = lattice_basis(basis);
  if (H.rows() != n) throw std::invalid_argument("lattice_ideal: basis is not of full rank");
  std::vector<IntVec> vecs = H.row_list();
  auto k = unit_orders(H);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = static_cast<long>(k[i]);
    vecs.push_back(std::move(e));
  }
  return buchberger(vecs, order, opts);
}

inline std::vector<Binomial> lattice_ideal(const IntMatrix& basis) {
  return lattice_ideal_gb(basis, default_order(basis.cols())).elements;
}

inline std::vector<Binomial> lattice_ideal(const CharGroup& G) { return lattice_ideal(G.lattice()); }

/// Reorient binomials for a new order (dropping none).
inline std::vector<Binomial> reorient(const std::vector<Binomial>& gens, const TermOrder& order) {
  std::vector<Binomial> out;
  for (const auto& g : gens) out.push_back(Binomial::oriented(g.lead, g.trail, order));
  return out;
}

/// Ideal equality by mutual reduction: each generating set reduces to zero
/// modulo a Groebner basis of the other.
inline bool ideals_equal(const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                         std::size_t n) {
  TermOrder o = default_order(n);
  auto ga = buchberger(reorient(a, o), o);
  auto gb = buchberger(reorient(b, o), o);
  for (const auto& x : b)
    if (!reduces_to_zero(x, ga)) return false;
  for (const auto& x : a)
    if (!reduces_to_zero(x, gb)) return false;
  return true;
}

/// Saturation (I : (x_1 ... x_n)^inf) of a binomial ideal homogeneous for a
/// strictly positive grading, one variable at a time: with order
/// [grading; -e_j; lex] the variable x_j divides a leading term only if it
/// divides the whole binomial.
inline ReducedGB saturate_homogeneous(const std::vector<IntVec>& vectors, const RatVec& grading,
                                      const BuchbergerOptions& opts = {}) {
  const std::size_t n = grading.size();
  for (const auto& g : grading)
    if (g <= 0) throw std::invalid_argument("saturate_homogeneous: grading must be positive");
  for (const auto& v : vectors)
    if (dot(grading, v) != 0) throw std::invalid_argument("saturate_homogeneous: not homogeneous");
  std::vector<Binomial> gens;
  TermOrder base = TermOrder::weight(grading);
  for (const auto& v : vectors)
    if (!is_zero(v)) gens.push_back(Binomial::from_vector(v, base));
  for (std::size_t j = 0; j < n; ++j) {
    RatVec mj(n, Rational(0));
    mj[j] = -1;
    TermOrder o = TermOrder::matrix({grading, mj});
    auto gb = buchberger(reorient(gens, o), o, opts);
    gens.clear();
    for (auto b : gb.elements) {
      std::int64_t c = std::min(b.lead[j], b.trail[j]);
      b.lead[j] -= c;
      b.trail[j] -= c;
      if (b.lead != b.trail) gens.push_back(std::move(b));
    }
  }
  return buchberger(reorient(gens, base), base, opts);
}

}  // namespace mckay
