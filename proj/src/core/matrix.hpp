#pragma once

#include <optional>
#include <vector>

#include "core/gaussian.hpp"
#include "core/rational.hpp"

namespace lsp {

// Dense matrix over an exact field (Rat or GRat).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return e_[i * cols_ + j]; }
  const T& at(int i, int j) const { return e_[i * cols_ + j]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T{}) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
    return c;
  }
  Mat operator-() const {
    Mat c(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = -e_[k];
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  // Deterministic total order (shape first, then entries); map-key use only.
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.e_ < b.e_;
  }

 private:
  int rows_, cols_;
  std::vector<T> e_;
};

using QMat = Mat<Rat>;
using CMat = Mat<GRat>;
using QVec = std::vector<Rat>;

inline CMat conj_transpose(const CMat& m) {
  CMat t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j).conj();
  return t;
}

inline bool is_hermitian(const CMat& m) {
  return m.rows() == m.cols() && conj_transpose(m) == m;
}

template <class T>
bool is_symmetric(const Mat<T>& m) {
  return m.rows() == m.cols() && m.transpose() == m;
}

// In-place reduced row echelon form; returns the pivot columns in order.
// Deterministic: the pivot is always the first nonzero entry in the column.
template <class T>
std::vector<int> rref_in_place(Mat<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!(m.at(i, col) == T{})) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    T inv = T(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == T{}) continue;
      T f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Mat<T> m) {
  return static_cast<int>(rref_in_place(m).size());
}

template <class T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) fail(errc::domain, "determinant of non-square matrix");
  int n = m.rows();
  T result(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!(m.at(i, col) == T{})) { p = i; break; }
    if (p < 0) return T{};
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      result = -result;
    }
    result *= m.at(col, col);
    T inv = T(1) / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == T{}) continue;
      T f = inv * m.at(i, col);
      for (int j = col; j < n; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return result;
}

// Solves A x = b exactly; nullopt when inconsistent.  Underdetermined
// systems get the canonical solution with free variables set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& a, const std::vector<T>& b) {
  Mat<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]
  std::vector<T> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

// Basis of the right kernel, one vector per free column, deterministic.
template <class T>
std::vector<std::vector<T>> kernel(Mat<T> m) {
  int n = m.cols();
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<T> v(n);
    v[col] = T(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) fail(errc::domain, "inverse of non-square matrix");
  int n = a.rows();
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = T(1);
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    return std::nullopt;
  Mat<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
  std::vector<T> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    T s{};
    for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    out[i] = std::move(s);
  }
  return out;
}

// QVec arithmetic used throughout the weight computations.
inline QVec vadd(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline QVec vsub(const QVec& a, const QVec& b) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline QVec vneg(const QVec& a) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}
inline QVec vscale(const Rat& s, const QVec& a) {
  QVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}
inline bool vzero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}
// u^T G v for a symmetric Gram matrix G.
inline Rat dot(const QMat& gram, const QVec& u, const QVec& v) {
  Rat s;
  for (int i = 0; i < gram.rows(); ++i) {
    if (u[i].is_zero()) continue;
    Rat row;
    for (int j = 0; j < gram.cols(); ++j) row += gram.at(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

}  // namespace lsp
