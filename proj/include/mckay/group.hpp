#pragma once

// Diagonal abelian groups, their character groups, the McKay quiver
// matrices and stability parameters.

#include "exact.hpp"

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t l, std::size_t c, const std::string& what)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + what),
        line(l),
        column(c) {}
};

struct Generator {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> exponents;  // reduced into [0, modulus)
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// g_k = diag(zeta_{m_k}^{a_k1}, ..., zeta_{m_k}^{a_kn}).
struct GroupSpec {
  std::size_t n = 0;
  std::vector<Generator> generators;
  std::vector<std::string> names;  // empty means x1..xn

  [[nodiscard]] std::vector<std::string> variable_names() const {
    if (!names.empty()) return names;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline GroupSpec make_group(std::size_t n,
                            const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>& gens,
                            std::vector<std::string> names = {}) {
  GroupSpec g;
  g.n = n;
  g.names = std::move(names);
  for (const auto& [m, a] : gens) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (a.size() != n) throw std::invalid_argument("exponent row has wrong length");
    Generator gen{m, a};
    for (auto& x : gen.exponents) x = ((x % m) + m) % m;
    g.generators.push_back(std::move(gen));
  }
  return g;
}

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  }
  [[nodiscard]] bool done() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, pos + 1, msg); }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r' &&
           text[pos] != '=' && text[pos] != ':')
      ++pos;
    if (start == pos) fail("expected a word");
    return text.substr(start, pos - start);
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    std::string tok = text.substr(start, pos - start);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
      pos = start;
      fail("expected an integer");
    }
    return v;
  }
};

}  // namespace detail

/// Parse the group-spec document:
///   n = <int>
///   gen <modulus> : <a1> ... <an>     (any number of lines)
///   names = <v1> ... <vn>             (optional)
/// with '#' starting a comment.
inline GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  bool have_n = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    detail::Cursor cur{line, lineno};
    if (cur.done()) continue;
    std::size_t key_pos = cur.pos;
    std::string key = cur.word();
    if (key == "n") {
      if (have_n) cur.fail("duplicate 'n' line");
      cur.expect('=');
      std::int64_t n = cur.integer();
      if (n < 1) cur.fail("n must be >= 1");
      if (!cur.done()) cur.fail("trailing input");
      g.n = static_cast<std::size_t>(n);
      have_n = true;
    } else if (key == "gen") {
      if (!have_n) throw ParseError(lineno, key_pos + 1, "'gen' before 'n'");
      std::size_t mpos = (cur.skip_ws(), cur.pos);
      std::int64_t m = cur.integer();
      if (m < 1) throw ParseError(lineno, mpos + 1, "modulus must be >= 1");
      cur.expect(':');
      Generator gen{m, {}};
      while (!cur.done()) {
        std::int64_t a = cur.integer();
        gen.exponents.push_back(((a % m) + m) % m);
      }
      if (gen.exponents.size() != g.n)
        throw ParseError(lineno, line.size() + 1,
                         "expected " + std::to_string(g.n) + " exponents, got " +
                             std::to_string(gen.exponents.size()));
      g.generators.push_back(std::move(gen));
    } else if (key == "names") {
      if (!have_n) throw ParseError(lineno, key_pos + 1, "'names' before 'n'");
      if (!g.names.empty()) cur.fail("duplicate 'names' line");
      cur.expect('=');
      while (!cur.done()) {
        std::size_t npos = (cur.skip_ws(), cur.pos);
        std::string nm = cur.word();
        bool ok = !nm.empty() && !(nm[0] >= '0' && nm[0] <= '9');
        for (char c : nm)
          ok = ok && ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_');
        if (!ok) throw ParseError(lineno, npos + 1, "invalid variable name '" + nm + "'");
        if (std::find(g.names.begin(), g.names.end(), nm) != g.names.end())
          throw ParseError(lineno, npos + 1, "duplicate variable name '" + nm + "'");
        g.names.push_back(nm);
      }
      if (g.names.size() != g.n)
        throw ParseError(lineno, line.size() + 1,
                         "expected " + std::to_string(g.n) + " names");
    } else {
      throw ParseError(lineno, key_pos + 1, "unknown keyword '" + key + "'");
    }
  }
  if (!have_n) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing 'n = <int>' line");
  return g;
}

inline std::string serialize_group(const GroupSpec& g) {
  std::ostringstream os;
  os << "n = " << g.n << '\n';
  if (!g.names.empty()) {
    os << "names =";
    for (const auto& nm : g.names) os << ' ' << nm;
    os << '\n';
  }
  for (const auto& gen : g.generators) {
    os << "gen " << gen.modulus << " :";
    for (auto a : gen.exponents) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

/// A character is stored as its values on the generators: a residue tuple
/// in (+)_k Z/m_k.
using Character = std::vector<std::int64_t>;

/// The character group G* with a canonical enumeration (residue tuples in
/// lexicographic order, so the trivial character is index 0).
class CharGroup {
 public:
  explicit CharGroup(GroupSpec spec) : spec_(std::move(spec)) {
    const std::size_t n = spec_.n, k = spec_.generators.size();
    for (std::size_t i = 0; i < n; ++i) {
      Character c(k);
      for (std::size_t j = 0; j < k; ++j) c[j] = spec_.generators[j].exponents[i];
      rho_gen_chars_.push_back(std::move(c));
    }
    // closure of {rho_i} under the group law
    std::map<Character, std::size_t> seen;
    std::deque<Character> queue{Character(k, 0)};
    seen.emplace(Character(k, 0), 0);
    std::vector<Character> found;
    while (!queue.empty()) {
      Character c = queue.front();
      queue.pop_front();
      found.push_back(c);
      for (const auto& g : rho_gen_chars_) {
        Character d = add(c, g);
        if (seen.emplace(d, 0).second) queue.push_back(std::move(d));
      }
    }
    std::sort(found.begin(), found.end());
    elements_ = std::move(found);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
    for (const auto& c : rho_gen_chars_) rho_.push_back(index_.at(c));
    mult_.assign(elements_.size() * n, 0);
    for (std::size_t a = 0; a < elements_.size(); ++a)
      for (std::size_t i = 0; i < n; ++i)
        mult_[a * n + i] = index_.at(add(elements_[a], rho_gen_chars_[i]));

    IntMatrix A(k, n);
    IntVec moduli(k);
    for (std::size_t j = 0; j < k; ++j) {
      moduli[j] = static_cast<long>(spec_.generators[j].modulus);
      for (std::size_t i = 0; i < n; ++i)
        A(j, i) = static_cast<long>(spec_.generators[j].exponents[i]);
    }
    lattice_ = kernel_mod(A, moduli);
    if (lattice_index(lattice_) != static_cast<long>(elements_.size()))
      throw std::logic_error("CharGroup: lattice index differs from |G*|");
    relation_matrix_ = A;
  }

  [[nodiscard]] const GroupSpec& spec() const { return spec_; }
  [[nodiscard]] std::size_t n() const { return spec_.n; }
  [[nodiscard]] std::size_t r() const { return elements_.size(); }
  [[nodiscard]] std::size_t trivial() const { return 0; }
  [[nodiscard]] const std::vector<Character>& elements() const { return elements_; }
  [[nodiscard]] const Character& element(std::size_t rho) const { return elements_[rho]; }
  [[nodiscard]] std::size_t index_of(const Character& c) const { return index_.at(c); }

  /// Index of rho_i = deg(e_i).
  [[nodiscard]] std::size_t rho(std::size_t i) const { return rho_[i]; }
  /// Index of rho * rho_i.
  [[nodiscard]] std::size_t times_rho(std::size_t rho, std::size_t i) const {
    return mult_[rho * spec_.n + i];
  }

  [[nodiscard]] std::size_t multiply(std::size_t a, std::size_t b) const {
    return index_.at(add(elements_[a], elements_[b]));
  }
  [[nodiscard]] std::size_t inverse(std::size_t a) const {
    Character c = elements_[a];
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::int64_t m = spec_.generators[j].modulus;
      c[j] = (m - c[j]) % m;
    }
    return index_.at(c);
  }

  /// deg(u) = sum_i u_i rho_i, for any integer vector u.
  template <class Vec>
  [[nodiscard]] std::size_t degree(const Vec& u) const {
    const std::size_t k = spec_.generators.size();
    Character c(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t m = spec_.generators[j].modulus;
      Integer acc = 0;
      for (std::size_t i = 0; i < spec_.n; ++i)
        acc += Integer(static_cast<long>(spec_.generators[j].exponents[i])) * to_integer(u[i]);
      Integer red;
      mpz_fdiv_r_ui(red.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
      c[j] = red.get_si();
    }
    return index_.at(c);
  }

  /// Row HNF basis of M = ker(deg).
  [[nodiscard]] const IntMatrix& lattice() const { return lattice_; }
  [[nodiscard]] bool in_lattice(const IntVec& u) const { return mckay::in_lattice(lattice_, u); }

  /// Invariant factors of G* (Smith form of the relations of Z^n / M).
  [[nodiscard]] IntVec invariant_factors() const {
    IntVec out;
    for (const auto& d : smith_invariants(lattice_))
      if (d > 1) out.push_back(d);
    return out;
  }

  /// Rank of the exponent matrix and whether the generators are independent,
  /// i.e. |G| = prod ord(g_k).
  struct RedundancyReport {
    std::size_t exponent_rank = 0;
    bool independent = true;
  };
  [[nodiscard]] RedundancyReport redundancy() const {
    RedundancyReport rep;
    rep.exponent_rank = rank(relation_matrix_);
    Integer prod = 1;
    for (const auto& gen : spec_.generators) {
      Integer ord = gen.modulus;
      Integer g = static_cast<long>(gen.modulus);
      for (auto a : gen.exponents) g = gcd(g, Integer(static_cast<long>(a)));
      ord /= g;
      prod *= ord;
    }
    rep.independent = prod == static_cast<long>(elements_.size());
    return rep;
  }

  /// Additive order of e_i in Z^n / M (the order of rho_i).
  [[nodiscard]] std::int64_t order_of_rho(std::size_t i) const {
    std::int64_t k = 1;
    std::size_t acc = rho_[i];
    while (acc != 0) {
      acc = multiply(acc, rho_[i]);
      ++k;
    }
    return k;
  }

  [[nodiscard]] std::string label(std::size_t rho) const { return "rho" + std::to_string(rho); }

 private:
  static Integer to_integer(const Integer& x) { return x; }
  template <class T>
  static Integer to_integer(T x) {
    return Integer(static_cast<long>(x));
  }

  [[nodiscard]] Character add(const Character& a, const Character& b) const {
    Character c(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) c[j] = (a[j] + b[j]) % spec_.generators[j].modulus;
    return c;
  }

  GroupSpec spec_;
  std::vector<Character> elements_;
  std::map<Character, std::size_t> index_;
  std::vector<Character> rho_gen_chars_;
  std::vector<std::size_t> rho_;
  std::vector<std::size_t> mult_;
  IntMatrix lattice_;
  IntMatrix relation_matrix_;
};

inline CharGroup character_group(const GroupSpec& g) { return CharGroup(g); }

/// Incidence data of the McKay quiver. Arrow a_i^rho runs from rho*rho_i to
/// rho; its column is rho * n + i (blocks by rho starting at rho_0, then i).
struct QuiverMatrices {
  std::size_t r = 0;
  std::size_t n = 0;
  IntMatrix B;  // r x nr
  IntMatrix C;  // (r+n) x nr

  [[nodiscard]] std::size_t column_index(std::size_t rho, std::size_t i) const {
    return rho * n + i;
  }
  [[nodiscard]] std::pair<std::size_t, std::size_t> arrow_of_column(std::size_t col) const {
    return {col / n, col % n};
  }
};

inline QuiverMatrices quiver_matrices(const CharGroup& G) {
  QuiverMatrices q;
  q.r = G.r();
  q.n = G.n();
  const std::size_t cols = q.r * q.n;
  q.C = IntMatrix(q.r + q.n, cols);
  for (std::size_t rho = 0; rho < q.r; ++rho)
    for (std::size_t i = 0; i < q.n; ++i) {
      std::size_t c = q.column_index(rho, i);
      q.C(rho, c) += 1;
      q.C(G.times_rho(rho, i), c) -= 1;
      q.C(q.r + i, c) += 1;
    }
  q.B = IntMatrix(q.r, cols);
  for (std::size_t a = 0; a < q.r; ++a)
    for (std::size_t c = 0; c < cols; ++c) q.B(a, c) = q.C(a, c);
  return q;
}

/// A stability parameter indexed by the canonical enumeration of G*.
class ThetaParam {
 public:
  explicit ThetaParam(RatVec theta) : theta_(std::move(theta)) {
    Rational s = 0;
    for (const auto& t : theta_) s += t;
    if (s != 0) throw std::invalid_argument("theta must sum to zero");
  }
  [[nodiscard]] const RatVec& values() const { return theta_; }
  [[nodiscard]] std::size_t size() const { return theta_.size(); }
  const Rational& operator[](std::size_t i) const { return theta_[i]; }

  /// (-(r-1), 1, ..., 1)
  static ThetaParam ghilb_default(std::size_t r) {
    RatVec t(r, Rational(1));
    t[0] = -Rational(static_cast<long>(r) - 1);
    return ThetaParam(std::move(t));
  }

 private:
  RatVec theta_;
};

/// theta_{rho_0} < 0 and theta_rho > 0 for every other rho. The degree-one
/// generation hypothesis is not checked.
inline bool validate_theta_ghilb(const ThetaParam& theta) {
  if (theta.size() == 0 || theta[0] >= 0) return false;
  for (std::size_t i = 1; i < theta.size(); ++i)
    if (theta[i] <= 0) return false;
  return true;
}

}  // namespace mckay
