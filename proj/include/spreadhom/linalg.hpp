#pragma once

#include <Eigen/Core>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "spreadhom/field.hpp"

namespace spreadhom {

using Mat = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

struct Echelon {
  Mat mat;                    // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
Echelon rref(const Eigen::MatrixBase<Derived>& a_in) {
  Echelon e;
  e.mat = a_in;
  Mat& a = e.mat;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = -1;
    for (Index i = row; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(row).swap(a.row(piv));
    Fp inv = a(row, col).inverse();
    a.row(row) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Fp f = a(i, col);
      a.row(i) -= f * a.row(row);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<Index>(rref(a).pivots.size());
}

// Columns span the null space {x | a x = 0}; count = cols - rank.
template <typename Derived>
Mat kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  Echelon e = rref(a);
  Index n = a.cols();
  Index r = static_cast<Index>(e.pivots.size());
  std::vector<char> is_piv(static_cast<size_t>(n), 0);
  for (Index c : e.pivots) is_piv[static_cast<size_t>(c)] = 1;
  Mat k = Mat::Zero(n, n - r);
  Index j = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_piv[static_cast<size_t>(f)]) continue;
    k(f, j) = Fp(1);
    for (Index i = 0; i < r; ++i) k(e.pivots[static_cast<size_t>(i)], j) = -e.mat(i, f);
    ++j;
  }
  return k;
}

// Pivot columns of a itself: an independent spanning set of the column space.
template <typename Derived>
Mat image_basis(const Eigen::MatrixBase<Derived>& a_in) {
  Mat a = a_in;
  Echelon e = rref(a);
  Mat b(a.rows(), static_cast<Index>(e.pivots.size()));
  for (size_t i = 0; i < e.pivots.size(); ++i)
    b.col(static_cast<Index>(i)) = a.col(e.pivots[i]);
  return b;
}

// Any particular solution of a X = b (free variables set to zero), one column
// per right-hand side; nullopt when inconsistent.
template <typename D1, typename D2>
std::optional<Mat> solve(const Eigen::MatrixBase<D1>& a,
                         const Eigen::MatrixBase<D2>& b) {
  Mat aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  Echelon e = rref(aug);
  for (Index c : e.pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat x = Mat::Zero(a.cols(), b.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i)
    x.row(e.pivots[i]) = e.mat.row(static_cast<Index>(i)).tail(b.cols());
  return x;
}

inline Mat hcat(const Mat& a, const Mat& b) {
  Mat m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}

inline Mat vcat(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols());
  m.topRows(a.rows()) = a;
  m.bottomRows(b.rows()) = b;
  return m;
}

inline bool is_zero_mat(const Mat& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

// Canonical projection onto the cokernel of b (viewed as a map into K^rows).
// proj depends only on the column space of b: rows of the inverse of
// [reduced column basis | complement standard vectors].
struct Cokernel {
  Mat proj;                       // (rows - rank) x rows
  std::vector<Index> complement;  // standard basis indices sectioning proj
};

inline Cokernel cokernel_projection(const Mat& b) {
  Index n = b.rows();
  Echelon e = rref(Mat(b.transpose()));
  Index r = static_cast<Index>(e.pivots.size());
  std::vector<char> is_piv(static_cast<size_t>(n), 0);
  for (Index c : e.pivots) is_piv[static_cast<size_t>(c)] = 1;
  Cokernel ck;
  for (Index i = 0; i < n; ++i)
    if (!is_piv[static_cast<size_t>(i)]) ck.complement.push_back(i);
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < r; ++i) m.col(i) = e.mat.row(i).transpose();
  for (Index j = 0; j < n - r; ++j) m(ck.complement[static_cast<size_t>(j)], r + j) = Fp(1);
  auto inv = solve(m, Mat(Mat::Identity(n, n)));
  ck.proj = inv->bottomRows(n - r);
  return ck;
}

// Grow-only span of row vectors in reduced form; add() reports whether the
// vector enlarged the span.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Index ambient) : ambient_(ambient) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index ambient() const { return ambient_; }

  bool add(Vec v) {
    reduce(v);
    Index p = leading(v);
    if (p < 0) return false;
    Fp inv = v(p).inverse();
    v *= inv;
    for (auto& [q, w] : rows_) {
      if (w(p).is_zero()) continue;
      Fp f = w(p);
      w -= f * v;
    }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  bool contains(Vec v) const {
    reduce(v);
    return leading(v) < 0;
  }

 private:
  void reduce(Vec& v) const {
    for (const auto& [p, w] : rows_) {
      if (v(p).is_zero()) continue;
      Fp f = v(p);
      v -= f * w;
    }
  }

  static Index leading(const Vec& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return i;
    return -1;
  }

  Index ambient_;
  std::vector<std::pair<Index, Vec>> rows_;
};

inline Mat random_mat(Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, Fp::modulus() - 1);
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Fp(d(rng));
  return m;
}

}  // namespace spreadhom
