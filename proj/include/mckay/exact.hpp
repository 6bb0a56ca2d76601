#pragma once

// Exact integer/rational linear algebra: integer matrices, Hermite and Smith
// normal forms, integer kernels and congruence kernels.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mckay {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows must all have length `cols`; `cols` is needed for the empty case.
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  template <class T>
  static IntMatrix from_int_rows(const std::vector<std::vector<T>>& rows,
                                 std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("IntMatrix::from_int_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] IntVec row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  [[nodiscard]] std::vector<IntVec> row_list() const {
    std::vector<IntVec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (sgn(a(i, k)) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  /// row(dst) -= q * row(src)
  void sub_row(std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) -= q * (*this)(src, j);
  }

  /// Replace rows (a, b) by (s*a + t*b, u*a + v*b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer x = (*this)(a, j), y = (*this)(b, j);
      (*this)(a, j) = s * x + t * y;
      (*this)(b, j) = u * x + v * y;
    }
  }

  /// Keep only the rows for which `keep` is true.
  [[nodiscard]] IntMatrix select_rows(const std::vector<bool>& keep) const {
    std::vector<IntVec> rs;
    for (std::size_t i = 0; i < rows_; ++i)
      if (keep[i]) rs.push_back(row(i));
    return from_rows(rs, cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------------------
// vector helpers

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVec& a, const IntVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

inline IntVec to_intvec(const std::vector<std::int64_t>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

inline std::vector<std::int64_t> to_int64(const IntVec& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    out[i] = v[i].get_si();
  }
  return out;
}

inline RatVec to_ratvec(const IntVec& v) { return {v.begin(), v.end()}; }

/// Divide by the gcd of the entries (zero vector stays zero).
inline IntVec primitive(IntVec v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Smallest positive integer multiple of a rational vector, made primitive.
inline IntVec clear_denominators(const RatVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(std::move(out));
}

/// Parse "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string x) {
    if (!x.empty() && x[0] == '+') x.erase(0, 1);
    return x;
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw std::invalid_argument("malformed rational: " + t);
    return Rational(Integer(strip_plus(t)));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational: " + t);
  Integer d(strip_plus(den));
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator: " + t);
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Hermite normal form

struct HermiteResult {
  IntMatrix H;  // row Hermite normal form
  IntMatrix U;  // unimodular, U * A == H
};

/// Row-style Hermite normal form: pivots positive, strictly increasing pivot
/// columns, entries above a pivot reduced into [0, pivot), zero rows last.
inline HermiteResult hermite_normal_form(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  const std::size_t m = A.rows();
  std::size_t pr = 0;
  for (std::size_t col = 0; col < A.cols() && pr < m; ++col) {
    for (std::size_t i = pr + 1; i < m; ++i) {
      if (sgn(H(i, col)) == 0) continue;
      Integer a = H(pr, col), b = H(i, col), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      Integer u = -b / g, v = a / g;
      H.combine_rows(pr, i, s, t, u, v);
      U.combine_rows(pr, i, s, t, u, v);
    }
    if (sgn(H(pr, col)) == 0) continue;
    if (sgn(H(pr, col)) < 0) {
      H.negate_row(pr);
      U.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(pr, col).get_mpz_t());
      H.sub_row(i, pr, q);
      U.sub_row(i, pr, q);
    }
    ++pr;
  }
  return {std::move(H), std::move(U)};
}

/// Number of nonzero rows of the HNF, i.e. the rank over Q.
inline std::size_t rank(const IntMatrix& A) {
  auto H = hermite_normal_form(A).H;
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < H.cols() && !nz; ++j) nz = sgn(H(i, j)) != 0;
    if (nz) ++r;
  }
  return r;
}

inline std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols) {
  return rank(IntMatrix::from_rows(rows, cols));
}

/// HNF with the zero rows dropped: the canonical basis of the row lattice.
inline IntMatrix lattice_basis(const IntMatrix& A) {
  auto H = hermite_normal_form(A).H;
  std::vector<bool> keep(H.rows());
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < H.cols() && !nz; ++j) nz = sgn(H(i, j)) != 0;
    keep[i] = nz;
  }
  return H.select_rows(keep);
}

/// Basis (rows, canonical HNF) of {x in Z^cols : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& A) {
  const std::size_t n = A.cols();
  if (A.rows() == 0) return IntMatrix::identity(n);
  auto [H, U] = hermite_normal_form(A.transpose());
  std::vector<IntVec> ker;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < H.cols() && zero; ++j) zero = sgn(H(i, j)) == 0;
    if (zero) ker.push_back(U.row(i));
  }
  if (ker.empty()) return IntMatrix(0, n);
  return lattice_basis(IntMatrix::from_rows(ker, n));
}

/// Basis (rows, canonical HNF) of {u in Z^cols : A u = 0 mod moduli} where
/// row k of A is read modulo moduli[k].
inline IntMatrix kernel_mod(const IntMatrix& A, const IntVec& moduli) {
  if (A.rows() != moduli.size())
    throw std::invalid_argument("kernel_mod: one modulus per row required");
  for (const auto& m : moduli)
    if (m < 1) throw std::invalid_argument("kernel_mod: moduli must be >= 1");
  const std::size_t n = A.cols(), k = A.rows();
  if (k == 0) return IntMatrix::identity(n);
  // Stack A^T over diag(moduli) and take the left integer kernel.
  IntMatrix X(n + k, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) X(i, j) = A(j, i);
  for (std::size_t j = 0; j < k; ++j) X(n + j, j) = moduli[j];
  auto [H, U] = hermite_normal_form(X);
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < k && zero; ++j) zero = sgn(H(i, j)) == 0;
    if (!zero) continue;
    IntVec u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = U(i, j);
    gens.push_back(std::move(u));
  }
  return lattice_basis(IntMatrix::from_rows(gens, n));
}

/// |det| of a full-rank square lattice basis (index of the lattice in Z^n).
inline Integer lattice_index(const IntMatrix& basis) {
  auto H = lattice_basis(basis);
  if (H.rows() != basis.cols())
    throw std::invalid_argument("lattice_index: basis is not of full rank");
  Integer d = 1;
  for (std::size_t i = 0; i < H.rows(); ++i) d *= H(i, i);
  return d;
}

/// Integer coordinates z with sum_k z_k * basis.row(k) == x, or nullopt when x
/// is not in the lattice. `basis` must be in canonical HNF (see lattice_basis).
inline std::optional<IntVec> lattice_coordinates(const IntMatrix& basis, IntVec x) {
  IntVec z(basis.rows());
  std::size_t col = 0;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    while (col < basis.cols() && sgn(basis(k, col)) == 0) {
      if (sgn(x[col]) != 0) return std::nullopt;
      ++col;
    }
    if (col == basis.cols()) break;
    if (!mpz_divisible_p(x[col].get_mpz_t(), basis(k, col).get_mpz_t()))
      return std::nullopt;
    z[k] = x[col] / basis(k, col);
    for (std::size_t j = col; j < basis.cols(); ++j) x[j] -= z[k] * basis(k, j);
    ++col;
  }
  if (!is_zero(x)) return std::nullopt;
  return z;
}

inline bool in_lattice(const IntMatrix& basis, const IntVec& x) {
  return lattice_coordinates(basis, x).has_value();
}

/// Diagonal of the Smith normal form (nonzero invariant factors, each
/// dividing the next).
inline IntVec smith_invariants(const IntMatrix& A) {
  IntMatrix M = A;
  const std::size_t rows = M.rows(), cols = M.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the trailing block as pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(M(i, j)) != 0 && (pi == rows || abs(M(i, j)) < abs(M(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    M.swap_rows(t, pi);
    if (pj != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(M(i, t), M(i, pj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(M(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), M(i, t).get_mpz_t(), M(t, t).get_mpz_t());
        M.sub_row(i, t, q);
        if (sgn(M(i, t)) != 0) {
          M.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(M(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), M(t, j).get_mpz_t(), M(t, t).get_mpz_t());
        for (std::size_t i = 0; i < rows; ++i) M(i, j) -= q * M(i, t);
        if (sgn(M(t, j)) != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(M(i, t), M(i, j));
          clean = false;
        }
      }
    }
    ++t;
  }
  IntVec d;
  for (std::size_t i = 0; i < t; ++i) d.push_back(abs(M(i, i)));
  // enforce the divisibility chain
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]), l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace mckay
