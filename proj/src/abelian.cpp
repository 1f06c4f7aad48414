#include "horocox/abelian.hpp"

#include <algorithm>
#include <utility>

namespace horocox {

namespace {

using Index = Eigen::Index;

void swap_rows(IntMatrix& s, IntMatrix& u, Index a, Index b) {
  if (a == b) return;
  s.row(a).swap(s.row(b));
  u.row(a).swap(u.row(b));
}

void swap_cols(IntMatrix& s, IntMatrix& v, Index a, Index b) {
  if (a == b) return;
  s.col(a).swap(s.col(b));
  v.col(a).swap(v.col(b));
}

void add_row_multiple(IntMatrix& s, IntMatrix& u, Index dst, Index src, const Integer& q) {
  if (q == 0) return;
  s.row(dst) -= q * s.row(src);
  u.row(dst) -= q * u.row(src);
}

void add_col_multiple(IntMatrix& s, IntMatrix& v, Index dst, Index src, const Integer& q) {
  if (q == 0) return;
  s.col(dst) -= q * s.col(src);
  v.col(dst) -= q * v.col(src);
}

// Smallest-|entry| pivot in the trailing block, row-major on ties.
bool find_pivot(const IntMatrix& s, Index t, Index& pi, Index& pj) {
  bool found = false;
  Integer best;
  for (Index i = t; i < s.rows(); ++i) {
    for (Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer a = abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  SNFResult r{IntMatrix::Identity(rows, rows), m, IntMatrix::Identity(cols, cols)};
  IntMatrix& s = r.S;

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    Index pi = t, pj = t;
    if (!find_pivot(s, t, pi, pj)) break;
    swap_rows(s, r.U, t, pi);
    swap_cols(s, r.V, t, pj);

    for (;;) {
      bool clean = true;
      // Clear column t with row operations, moving a smaller remainder into
      // the pivot whenever truncated division leaves one.
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        add_row_multiple(s, r.U, i, t, q);
        if (s(i, t) != 0) {
          swap_rows(s, r.U, t, i);
          clean = false;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        add_col_multiple(s, r.V, j, t, q);
        if (s(t, j) != 0) {
          swap_cols(s, r.V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Divisibility: fold any entry the pivot misses into row t and rerun.
      bool divisible = true;
      for (Index i = t + 1; i < rows && divisible; ++i) {
        for (Index j = t + 1; j < cols && divisible; ++j) {
          if (s(i, j) % s(t, t) != 0) {
            add_row_multiple(s, r.U, t, i, Integer(-1));
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
  }

  for (Index t = 0; t < steps; ++t) {
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      r.U.row(t) = -r.U.row(t);
    }
  }
  return r;
}

HNFResult row_hermite_normal_form(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  HNFResult r{IntMatrix::Identity(rows, rows), m, 0};
  IntMatrix& h = r.H;

  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    // Reduce the column below `row` to a single nonzero entry.
    for (;;) {
      Index best = -1;
      for (Index i = row; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        if (best < 0 || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best < 0) break;
      swap_rows(h, r.U, row, best);
      bool clean = true;
      for (Index i = row + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(row, col);
        add_row_multiple(h, r.U, i, row, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      r.U.row(row) = -r.U.row(row);
    }
    for (Index i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      add_row_multiple(h, r.U, i, row, q);
    }
    ++row;
  }
  r.rank = static_cast<int>(row);
  return r;
}

std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& m) {
  const Index cols = m.cols();
  if (cols == 0) return {};
  IntMatrix at = m.transpose();
  HNFResult first = row_hermite_normal_form(at);

  std::vector<Index> zero_rows;
  for (Index i = 0; i < at.rows(); ++i) {
    if (first.H.row(i).isZero()) zero_rows.push_back(i);
  }
  if (zero_rows.empty()) return {};

  IntMatrix kernel(static_cast<Index>(zero_rows.size()), cols);
  for (Index k = 0; k < kernel.rows(); ++k) kernel.row(k) = first.U.row(zero_rows[k]);

  HNFResult canonical = row_hermite_normal_form(kernel);
  std::vector<LatticeVector> basis;
  basis.reserve(static_cast<size_t>(canonical.rank));
  for (int k = 0; k < canonical.rank; ++k) {
    basis.push_back(canonical.H.row(k).transpose());
  }
  return basis;
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

Integer mu(const RationalVector& v) {
  Integer d = 1;
  for (Index i = 0; i < v.size(); ++i) d = lcm(d, v(i).get_den());
  return d;
}

LatticeVector primitive_generator(const RationalVector& v) {
  if (v.isZero()) throw std::invalid_argument("no primitive generator of the zero ray");
  const Integer d = mu(v);
  LatticeVector w(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    Rational scaled = v(i) * Rational(d);
    w(i) = scaled.get_num();
  }
  const Integer c = content(w);
  for (Index i = 0; i < w.size(); ++i) w(i) = exact_div(w(i), c);
  return w;
}

LatticeVector primitive_generator(const LatticeVector& v) {
  return primitive_generator(to_rational(v));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  Integer sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index pivot = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace horocox
