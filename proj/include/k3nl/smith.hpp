#pragma once

// Integer matrix normal forms: Smith normal form with unimodular transforms,
// and the fraction-free (Bareiss) determinant. Templated on the scalar so the
// same code runs over Integer and over machine integers in tests.

#include <algorithm>
#include <utility>

#include "k3nl/arith.hpp"

namespace k3nl {

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> d;  // diagonal, d(i,i) >= 0, d(i,i) | d(i+1,i+1)
  Matrix<Scalar> u;  // unimodular, u * m * v == d
  Matrix<Scalar> v;  // unimodular

  /// Number of nonzero diagonal entries.
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < std::min(d.rows(), d.cols()); ++i) {
      if (d(i, i) != 0) ++r;
    }
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

}  // namespace detail

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  Matrix<Scalar> a = m;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(rows, rows);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(cols, cols);

  const Eigen::Index steps = std::min(rows, cols);
  bool exhausted = false;
  for (Eigen::Index t = 0; t < steps && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pr = -1, pc = -1;
      Scalar best = 0;
      for (Eigen::Index j = t; j < cols; ++j) {
        for (Eigen::Index i = t; i < rows; ++i) {
          if (a(i, j) == 0) continue;
          Scalar mag = abs_value<Scalar>(a(i, j));
          if (pr < 0 || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) {
        exhausted = true;  // trailing block is zero
        break;
      }
      if (pr != t) {
        a.row(pr).swap(a.row(t));
        u.row(pr).swap(u.row(t));
      }
      if (pc != t) {
        a.col(pc).swap(a.col(t));
        v.col(pc).swap(v.col(t));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Scalar q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Scalar q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row >= 0) {
        a.row(t) += a.row(bad_row);
        u.row(t) += u.row(bad_row);
        continue;
      }
      break;
    }
    if (!exhausted && a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return SmithForm<Scalar>{std::move(a), std::move(u), std::move(v)};
}

/// Exact determinant by Bareiss fraction-free elimination.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace k3nl
