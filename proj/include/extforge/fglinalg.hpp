#pragma once

/* Exact linear algebra over prime fields and the integers.
 *
 * FpMatrix: dense matrices over F_p with deterministic row reduction
 * (leftmost nonzero column, smallest row index). IntMatrix: arbitrary-
 * precision integer matrices with Smith normal form. FgAbGroup: finitely
 * generated abelian groups in invariant-factor form.
 */

#include "extforge/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace extforge::fglinalg {

inline bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
  // extended Euclid on (a, p), a != 0 mod p
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return uint32_t(t < 0 ? t + p : t);
}

class FpMatrix {
public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(uint32_t p, size_t rows, size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(p)) throw Error(errc::shape_mismatch, "modulus must be prime");
  }
  static FpMatrix identity(uint32_t p, size_t n) {
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static FpMatrix from_rows(uint32_t p, const std::vector<std::vector<uint32_t>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    FpMatrix m(p, rows.size(), nc);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) throw Error(errc::shape_mismatch, "ragged rows");
      for (size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j] % p;
    }
    return m;
  }

  uint32_t prime() const { return p_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
  }

  FpMatrix operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw Error(errc::shape_mismatch, "matrix product");
    FpMatrix r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        uint64_t v = (*this)(i, k);
        if (!v) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r(i, j) = uint32_t((r(i, j) + v * o(k, j)) % p_);
      }
    return r;
  }
  FpMatrix operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
      throw Error(errc::shape_mismatch, "matrix sum");
    FpMatrix r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
    return r;
  }
  FpMatrix scaled(uint32_t c) const {
    FpMatrix r(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = uint32_t((uint64_t(a_[i]) * c) % p_);
    return r;
  }
  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const {
    if (v.size() != cols_) throw Error(errc::shape_mismatch, "apply: vector length");
    std::vector<uint32_t> r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
      uint64_t acc = 0;
      for (size_t j = 0; j < cols_; ++j) acc += uint64_t((*this)(i, j)) * v[j];
      r[i] = uint32_t(acc % p_);
    }
    return r;
  }

private:
  uint32_t p_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

struct RrefResult {
  FpMatrix reduced;
  std::vector<size_t> pivots; // pivot column per pivot row
  size_t rank = 0;
};

inline RrefResult rref(FpMatrix m) {
  const uint32_t p = m.prime();
  size_t rank = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t sel = rank;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != rank)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(rank, j));
    uint32_t inv = fp_inv(m(rank, col), p);
    for (size_t j = col; j < m.cols(); ++j)
      m(rank, j) = uint32_t((uint64_t(m(rank, j)) * inv) % p);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == 0) continue;
      uint64_t f = p - m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m(i, j) = uint32_t((m(i, j) + f * m(rank, j)) % p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots), rank};
}

inline size_t rank(const FpMatrix& m) { return rref(m).rank; }

/* Rows of the result form a deterministic basis of the null space
 * {v : m v = 0}, one row per free column, ordered by free column. */
inline FpMatrix kernel_basis(const FpMatrix& m) {
  auto r = rref(m);
  const uint32_t p = m.prime();
  std::vector<size_t> free_cols;
  {
    size_t k = 0;
    for (size_t c = 0; c < m.cols(); ++c) {
      if (k < r.pivots.size() && r.pivots[k] == c) ++k;
      else free_cols.push_back(c);
    }
  }
  FpMatrix ker(p, free_cols.size(), m.cols());
  for (size_t i = 0; i < free_cols.size(); ++i) {
    size_t f = free_cols[i];
    ker(i, f) = 1;
    for (size_t k = 0; k < r.pivots.size(); ++k) {
      uint32_t v = r.reduced(k, f);
      if (v) ker(i, r.pivots[k]) = p - v;
    }
  }
  return ker;
}

/* One solution of m x = b with free variables set to zero, or nullopt. */
inline std::optional<std::vector<uint32_t>> solve(const FpMatrix& m,
                                                  const std::vector<uint32_t>& b) {
  if (b.size() != m.rows()) throw Error(errc::shape_mismatch, "solve: rhs length");
  const uint32_t p = m.prime();
  FpMatrix aug(p, m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i] % p;
  }
  auto r = rref(std::move(aug));
  std::vector<uint32_t> x(m.cols(), 0);
  for (size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == m.cols()) return std::nullopt; // pivot in rhs column
    x[r.pivots[k]] = r.reduced(k, m.cols());
  }
  return x;
}

/* Incremental accumulator for a row space over F_p: rows are inserted one at
 * a time and kept in reduced echelon form. Used for span/membership tests. */
class FpRowSpan {
public:
  explicit FpRowSpan(uint32_t p, size_t width) : p_(p), width_(width) {}
  size_t rank() const { return rows_.size(); }
  size_t width() const { return width_; }

  /* Reduce v against the accumulated rows; returns the residual. */
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      uint32_t c = v[pivot_[k]];
      if (!c) continue;
      uint64_t f = p_ - c;
      const auto& row = rows_[k];
      for (size_t j = pivot_[k]; j < width_; ++j)
        v[j] = uint32_t((v[j] + f * row[j]) % p_);
    }
    return v;
  }
  bool contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
  }
  /* Returns true if the row increased the rank. */
  bool insert(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    uint32_t inv = fp_inv(v[piv], p_);
    for (size_t j = piv; j < width_; ++j) v[j] = uint32_t((uint64_t(v[j]) * inv) % p_);
    // back-substitute into existing rows to keep full reduction
    for (size_t k = 0; k < rows_.size(); ++k) {
      uint32_t c = rows_[k][piv];
      if (!c) continue;
      uint64_t f = p_ - c;
      for (size_t j = piv; j < width_; ++j)
        rows_[k][j] = uint32_t((rows_[k][j] + f * v[j]) % p_);
    }
    size_t pos = std::lower_bound(pivot_.begin(), pivot_.end(), piv) - pivot_.begin();
    pivot_.insert(pivot_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivot_; }

private:
  uint32_t p_;
  size_t width_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<size_t> pivot_;
};

// ----------------------------------------------------------------------------
// Integer matrices and Smith normal form

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != nc) throw Error(errc::shape_mismatch, "ragged rows");
      for (size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  mpz_class& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& v) { return v == 0; });
  }
  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw Error(errc::shape_mismatch, "matrix product");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }
  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

private:
  size_t rows_, cols_;
  std::vector<mpz_class> a_;
};

struct SnfResult {
  IntMatrix u, d, v; // u * m * v == d, u and v unimodular
  size_t rank = 0;
  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> out;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i)
      if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
  }
};

inline SnfResult smith_normal_form(IntMatrix m) {
  const size_t nr = m.rows(), nc = m.cols();
  IntMatrix u = IntMatrix::identity(nr), v = IntMatrix::identity(nc);
  auto row_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < nc; ++j) std::swap(m(a, j), m(b, j));
    for (size_t j = 0; j < nr; ++j) std::swap(u(a, j), u(b, j));
  };
  auto col_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < nr; ++i) std::swap(m(i, a), m(i, b));
    for (size_t i = 0; i < nc; ++i) std::swap(v(i, a), v(i, b));
  };
  auto row_axpy = [&](size_t dst, size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (size_t j = 0; j < nc; ++j) m(dst, j) -= q * m(src, j);
    for (size_t j = 0; j < nr; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_axpy = [&](size_t dst, size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (size_t i = 0; i < nr; ++i) m(i, dst) -= q * m(i, src);
    for (size_t i = 0; i < nc; ++i) v(i, dst) -= q * v(i, src);
  };
  auto row_negate = [&](size_t i) {
    for (size_t j = 0; j < nc; ++j) m(i, j) = -m(i, j);
    for (size_t j = 0; j < nr; ++j) u(i, j) = -u(i, j);
  };

  size_t t = 0;
  const size_t tmax = std::min(nr, nc);
  for (; t < tmax; ++t) {
    // pick the nonzero entry of minimal absolute value in the trailing block
    size_t pi = nr, pj = nc;
    mpz_class best;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j) {
        if (m(i, j) == 0) continue;
        mpz_class a = abs(m(i, j));
        if (pi == nr || a < best) { best = a; pi = i; pj = j; }
      }
    if (pi == nr) break;
    row_swap(t, pi);
    col_swap(t, pj);
    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < nr; ++i) {
        if (m(i, t) == 0) continue;
        mpz_class q = m(i, t) / m(t, t); // C++ division truncates toward zero
        row_axpy(i, t, q);
        if (m(i, t) != 0) { row_swap(t, i); clean = false; }
      }
      for (size_t j = t + 1; j < nc; ++j) {
        if (m(t, j) == 0) continue;
        mpz_class q = m(t, j) / m(t, t);
        col_axpy(j, t, q);
        if (m(t, j) != 0) { col_swap(t, j); clean = false; }
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block by the pivot
      bool divides_all = true;
      for (size_t i = t + 1; i < nr && divides_all; ++i)
        for (size_t j = t + 1; j < nc; ++j)
          if (m(i, j) % m(t, t) != 0) {
            row_axpy(t, i, -1); // add row i to pivot row
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (m(t, t) < 0) row_negate(t);
  }
  SnfResult res{std::move(u), std::move(m), std::move(v), t};
  return res;
}

// ----------------------------------------------------------------------------
// Finitely generated abelian groups in invariant-factor form

struct FgAbGroup {
  size_t free_rank = 0;
  std::vector<mpz_class> torsion; // ascending divisibility chain, entries >= 2

  bool operator==(const FgAbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  size_t generator_count() const { return free_rank + torsion.size(); }

  static FgAbGroup zero() { return {}; }
  static FgAbGroup free_of_rank(size_t r) { return {r, {}}; }
  static FgAbGroup cyclic(const mpz_class& n) {
    if (n == 0) return free_of_rank(1);
    FgAbGroup g;
    if (abs(n) > 1) g.torsion.push_back(abs(n));
    return g;
  }

  /* Canonical form of a direct sum given by an arbitrary list of cyclic
   * orders (0 meaning Z). Unique invariant-factor chain via prime powers. */
  static FgAbGroup from_orders(size_t free_rank, std::vector<mpz_class> orders) {
    FgAbGroup g;
    g.free_rank = free_rank;
    std::map<mpz_class, std::vector<unsigned>> by_prime;
    for (auto& n : orders) {
      n = abs(n);
      if (n == 0) { ++g.free_rank; continue; }
      if (n == 1) continue;
      mpz_class rem = n;
      for (mpz_class f = 2; f * f <= rem; ++f) {
        if (rem % f != 0) continue;
        unsigned e = 0;
        while (rem % f == 0) { rem /= f; ++e; }
        by_prime[f].push_back(e);
      }
      if (rem > 1) by_prime[rem].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [p, es] : by_prime) {
      std::sort(es.begin(), es.end(), std::greater<unsigned>());
      chain_len = std::max(chain_len, es.size());
    }
    std::vector<mpz_class> chain(chain_len, 1); // chain[0] = largest factor
    for (auto& [p, es] : by_prime)
      for (size_t i = 0; i < es.size(); ++i) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[i]);
        chain[i] *= pe;
      }
    std::reverse(chain.begin(), chain.end());
    g.torsion = std::move(chain);
    return g;
  }

  FgAbGroup direct_sum(const FgAbGroup& o) const {
    std::vector<mpz_class> orders = torsion;
    orders.insert(orders.end(), o.torsion.begin(), o.torsion.end());
    return from_orders(free_rank + o.free_rank, std::move(orders));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    auto app = [&s](const std::string& t) {
      if (!s.empty()) s += " + ";
      s += t;
    };
    if (free_rank == 1) app("Z");
    else if (free_rank > 1) app("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) app("Z/" + d.get_str());
    return s;
  }
};

/* Cokernel Z^rows / im(m). */
inline FgAbGroup coker(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  std::vector<mpz_class> orders = s.diagonal();
  size_t free_rank = m.rows() - orders.size();
  return FgAbGroup::from_orders(free_rank, std::move(orders));
}

/* Basis of {x : m x = 0} as columns, from the SNF change-of-basis matrix. */
inline IntMatrix kernel_columns(const IntMatrix& m) {
  auto s = smith_normal_form(m);
  size_t n = m.cols(), k = n - s.rank;
  IntMatrix ker(n, k);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) ker(i, j) = s.v(i, s.rank + j);
  return ker;
}

/* One integer solution of m x = b, or nullopt. */
inline std::optional<std::vector<mpz_class>> solve(const IntMatrix& m,
                                                   const std::vector<mpz_class>& b) {
  if (b.size() != m.rows()) throw Error(errc::shape_mismatch, "solve: rhs length");
  auto s = smith_normal_form(m);
  std::vector<mpz_class> ub(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.rows(); ++j) ub[i] += s.u(i, j) * b[j];
  std::vector<mpz_class> y(m.cols(), 0);
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      if (i < m.cols()) y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(m.cols(), 0);
  for (size_t i = 0; i < m.cols(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) x[i] += s.v(i, j) * y[j];
  return x;
}

/* Homology ker(d_out) / im(d_in) of a chain of free groups
 *   source --d_in--> middle --d_out--> target.  */
inline FgAbGroup homology(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    throw Error(errc::shape_mismatch, "homology: middle dimensions disagree");
  if (!(d_out * d_in).is_zero())
    throw Error(errc::composition_nonzero, "d_out * d_in != 0");
  IntMatrix ker = kernel_columns(d_out);
  // express the columns of d_in in the kernel basis; exact since im <= ker
  IntMatrix coeff(ker.cols(), d_in.cols());
  for (size_t c = 0; c < d_in.cols(); ++c) {
    std::vector<mpz_class> b(d_in.rows());
    for (size_t i = 0; i < d_in.rows(); ++i) b[i] = d_in(i, c);
    auto sol = solve(ker, b);
    if (!sol) throw Error(errc::composition_nonzero, "image not contained in kernel");
    for (size_t i = 0; i < ker.cols(); ++i) coeff(i, c) = (*sol)[i];
  }
  return coker(coeff);
}

} // namespace extforge::fglinalg
