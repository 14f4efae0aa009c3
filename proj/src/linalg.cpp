#include "twistkit/linalg.hpp"

#include <algorithm>

#include "twistkit/error.hpp"

namespace tk {

QMat q_identity(int n) {
  QMat m(n, QRow(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat q_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  QMat out(n, QRow(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

QRow q_apply(const QMat& a, const QRow& v) {
  QRow out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

QMat q_transpose(const QMat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  QMat out(m, QRow(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

ZMat z_identity(int n) {
  ZMat m(n, ZRow(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  ZMat out(n, ZRow(p, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

ZRow z_apply(const ZMat& a, const ZRow& v) {
  ZRow out(a.size(), Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

ZMat z_transpose(const ZMat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  ZMat out(m, ZRow(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

QMat z_to_q(const ZMat& a) {
  QMat out;
  for (auto& row : a) {
    QRow r;
    for (auto& x : row) r.push_back(Rat(x));
    out.push_back(r);
  }
  return out;
}

/* Row echelon over the rationals; returns pivot columns, leaves a reduced. */
static std::vector<int> rref(QMat& a) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int q_rank(QMat a) { return static_cast<int>(rref(a).size()); }

Rat q_det(QMat a) {
  size_t n = a.size();
  Rat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[k], a[p]);
      det = -det;
    }
    det *= a[k][k];
    Rat inv = Rat(1) / a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] * inv;
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

int z_rank_bareiss(ZMat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Int z_det_bareiss(ZMat a) {
  size_t n = a.size();
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : (sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1]);
}

ZMat z_inverse_unimodular(const ZMat& a) {
  size_t n = a.size();
  QMat aug = z_to_q(a);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  auto pivots = rref(aug);
  // a pivot landing in the identity block means the left block was singular
  if (pivots.size() != n || (n > 0 && pivots.back() >= static_cast<int>(n)))
    fail(ErrKind::InvalidConfig, "matrix is singular, no inverse");
  ZMat out(n, ZRow(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat v = aug[i][n + j];
      if (den(v) != 1)
        fail(ErrKind::InvalidConfig, "matrix inverse is not integral, determinant is not a unit");
      out[i][j] = num(v);
    }
  return out;
}

std::optional<QRow> q_solve(QMat a, QRow b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // a pivot in the appended column marks an inconsistent system
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  QRow x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::vector<QRow> q_nullspace(QMat a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QRow> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QRow v(cols, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(v);
  }
  return basis;
}

/* Column-style Hermite reduction: column operations preserve the lattice
   A * Z^n, so A x = b has an integer solution iff the echelon system does. */
std::optional<ZRow> z_solve(const ZMat& a, const ZRow& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  ZMat m = a;
  ZMat u = z_identity(static_cast<int>(cols));
  size_t c = 0;
  std::vector<long> pivot_col(rows, -1);
  for (size_t i = 0; i < rows && c < cols; ++i) {
    while (true) {
      size_t best = cols;
      for (size_t j = c; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (best == cols || abs(m[i][j]) < abs(m[i][best])) best = j;
      }
      if (best == cols) break;
      if (best != c) {
        for (size_t t = 0; t < rows; ++t) std::swap(m[t][c], m[t][best]);
        for (size_t t = 0; t < cols; ++t) std::swap(u[t][c], u[t][best]);
      }
      bool reduced = true;
      for (size_t j = c + 1; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int q = m[i][j] / m[i][c];
        for (size_t t = 0; t < rows; ++t) m[t][j] -= q * m[t][c];
        for (size_t t = 0; t < cols; ++t) u[t][j] -= q * u[t][c];
        if (m[i][j] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (m[i][c] != 0) {
      pivot_col[i] = static_cast<long>(c);
      ++c;
    }
  }
  ZRow y(cols, Int(0));
  for (size_t i = 0; i < rows; ++i) {
    Int val = b[i];
    for (size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0 && (pivot_col[i] < 0 || j != static_cast<size_t>(pivot_col[i])))
        val -= m[i][j] * y[j];
    if (pivot_col[i] < 0) {
      if (val != 0) return std::nullopt;
      continue;
    }
    Int p = m[i][pivot_col[i]];
    if (val % p != 0) return std::nullopt;
    y[pivot_col[i]] = val / p;
  }
  ZRow x = z_apply(u, y);
  return x;
}

} // namespace tk
