#include "stackycovers/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "stackycovers/errors.hpp"

namespace stacky {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw DomainError("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("IntMatrix: shape mismatch in product");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

Int IntMatrix::max_abs_entry() const {
  Int m = 0;
  for (const Int& v : e_) {
    Int a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const Int& d : diagonal)
    if (d != 0) ++r;
  return r;
}

Int SmithForm::diagonal_product() const {
  Int p = 1;
  for (const Int& d : diagonal)
    if (d != 0) p *= d;
  return p;
}

IntMatrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
  return d;
}

namespace {

// Locates the entry of least nonzero absolute value in the trailing
// submatrix starting at (t, t). Returns false when that block is zero.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int a = abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  if (a.empty()) throw DomainError("smith_normal_form: matrix must be nonempty");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix w = a;
  SmithForm f;
  f.left = IntMatrix::identity(m);
  f.right = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(w, t, pi, pj)) break;
    w.swap_rows(t, pi);
    f.left.swap_rows(t, pi);
    w.swap_cols(t, pj);
    f.right.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot; remainders shrink the pivot.
      bool touched = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = w.at(i, t) / w.at(t, t);  // truncated quotient
        if (q != 0) {
          w.add_row_multiple(i, t, -q);
          f.left.add_row_multiple(i, t, -q);
        }
        if (w.at(i, t) != 0) {
          w.swap_rows(t, i);
          f.left.swap_rows(t, i);
          touched = true;
        }
      }
      if (touched) continue;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = w.at(t, j) / w.at(t, t);
        if (q != 0) {
          w.add_col_multiple(j, t, -q);
          f.right.add_col_multiple(j, t, -q);
        }
        if (w.at(t, j) != 0) {
          w.swap_cols(t, j);
          f.right.swap_cols(t, j);
          touched = true;
        }
      }
      if (touched) continue;

      // Pivot now divides its row and column. Enforce divisibility over
      // the whole trailing block before moving on.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!divides(w.at(t, t), w.at(i, j))) {
            w.add_row_multiple(t, i, 1);
            f.left.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (w.at(t, t) < 0) {
      w.negate_row(t);
      f.left.negate_row(t);
    }
  }

  f.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) f.diagonal[t] = w.at(t, t);
  return f;
}

Int det_bareiss(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("det_bareiss: square matrix required");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix w = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && w.at(s, k) == 0) ++s;
      if (s == n) return 0;
      w.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const std::size_t r = f.rank(), n = a.cols();
  IntMatrix k(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k.at(i, j - r) = f.right.at(i, j);
  return k;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b,
                                                 const std::vector<Int>& v) {
  if (v.size() != b.rows()) throw DomainError("solve_in_lattice: dimension mismatch");
  SmithForm f = smith_normal_form(b);
  if (f.rank() != b.cols())
    throw DomainError("solve_in_lattice: columns are not a lattice basis");
  // With L b R = D, solve D y = L v then x = R y.
  std::vector<Int> c(b.rows(), Int(0));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) c[i] += f.left.at(i, j) * v[j];
  std::vector<Int> y(b.cols(), Int(0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (i < b.cols() && f.diagonal[i] != 0) {
      if (!divides(f.diagonal[i], c[i])) return std::nullopt;
      y[i] = exact_div(c[i], f.diagonal[i]);
    } else if (c[i] != 0) {
      return std::nullopt;  // outside the rational span
    }
  }
  std::vector<Int> x(b.cols(), Int(0));
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x[i] += f.right.at(i, j) * y[j];
  return x;
}

std::optional<Int> lattice_index(const IntMatrix& sub, const IntMatrix& ambient) {
  if (sub.rows() != ambient.rows())
    throw DomainError("lattice_index: dimension mismatch");
  // Express every sub column in the ambient basis.
  IntMatrix x(ambient.cols(), sub.cols());
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    std::vector<Int> v(sub.rows());
    for (std::size_t i = 0; i < sub.rows(); ++i) v[i] = sub.at(i, j);
    auto sol = solve_in_lattice(ambient, v);
    if (!sol)
      throw MembershipError(
          "lattice_index: sub column is not an integer combination of the ambient basis");
    for (std::size_t i = 0; i < ambient.cols(); ++i) x.at(i, j) = (*sol)[i];
  }
  if (x.cols() == 0) return std::nullopt;
  SmithForm f = smith_normal_form(x);
  if (f.rank() < ambient.cols()) return std::nullopt;  // infinite index
  return f.diagonal_product();
}

IntMatrix hnf2_columns(const IntMatrix& gens) {
  if (gens.rows() != 2) throw DomainError("hnf2_columns: two rows required");
  // Fold columns with nonzero x into a single (g, yg) via extended gcd,
  // pushing the eliminated y-parts into a pool for the second generator.
  Int gx = 0, gy = 0;
  std::vector<Int> ypool;
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    Int x = gens.at(0, j), y = gens.at(1, j);
    if (x == 0) {
      if (y != 0) ypool.push_back(abs(y));
      continue;
    }
    if (gx == 0) {
      gx = x;
      gy = y;
      continue;
    }
    Int d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), gx.get_mpz_t(),
               x.get_mpz_t());
    Int comb_y = s * gy + t * y;
    ypool.push_back(abs(exact_div(x, d) * gy - exact_div(gx, d) * y));
    gx = d;
    gy = comb_y;
  }
  Int h11 = 0;
  for (const Int& y : ypool) h11 = gcd(h11, y);

  if (gx == 0) {
    if (h11 == 0) return IntMatrix(2, 0);
    IntMatrix h(2, 1);
    h.at(1, 0) = h11;
    return h;
  }
  if (gx < 0) {
    gx = -gx;
    gy = -gy;
  }
  if (h11 == 0) {
    IntMatrix h(2, 1);
    h.at(0, 0) = gx;
    h.at(1, 0) = gy;
    return h;
  }
  gy = mod_floor(gy, h11);
  IntMatrix h(2, 2);
  h.at(0, 0) = gx;
  h.at(1, 0) = gy;
  h.at(1, 1) = h11;
  return h;
}

}  // namespace stacky
