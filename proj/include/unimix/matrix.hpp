// Copyright 2026 The unimix developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <vector>

#include "unimix/errors.hpp"
#include "unimix/tolerances.hpp"

namespace unimix {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Tensor factorization of a square matrix space: left factor of dimension
/// dim_left (the output space) times right factor of dimension dim_right
/// (the input space). Composite basis index = left * dim_right + right.
struct BipartiteShape {
  Index dim_left = 0;
  Index dim_right = 0;
  [[nodiscard]] Index total() const { return dim_left * dim_right; }
};

/// Which tensor factor a partial trace removes.
enum class Factor { Left, Right };

inline bool finite_entries(const CMatrix& m) {
  return m.allFinite();
}

/// Row-major flattening: the matrix unit |i><j| maps to basis vector
/// e_i (x) e_j, so vec(A)(i * cols + j) = A(i, j).
inline CVector vec(const CMatrix& a) {
  CVector v(a.rows() * a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      v(i * a.cols() + j) = a(i, j);
  return v;
}

/// Inverse of vec. The vector length must equal rows * cols.
inline CMatrix unvec(const CVector& v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw DimensionError("unvec: vector length " + std::to_string(v.size()) +
                         " does not equal " + std::to_string(rows) + " x " +
                         std::to_string(cols));
  CMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      a(i, j) = v(i * cols + j);
  return a;
}

/// Hilbert-Schmidt inner product Tr(X^dag Y), conjugate-linear in X.
inline Complex hs_inner(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionError("hs_inner: shape mismatch");
  return (x.adjoint() * y).trace();
}

/// Kronecker product, first factor major: (A(x)B)(i*Br+k, j*Bc+l) = A(i,j)B(k,l).
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace over one tensor factor of a square matrix on left (x) right.
inline CMatrix partial_trace(const CMatrix& m, BipartiteShape shape,
                             Factor traced) {
  const Index dl = shape.dim_left;
  const Index dr = shape.dim_right;
  if (dl < 1 || dr < 1 || m.rows() != m.cols() || m.rows() != dl * dr)
    throw DimensionError("partial_trace: matrix side does not match shape");
  if (traced == Factor::Left) {
    CMatrix out = CMatrix::Zero(dr, dr);
    for (Index a = 0; a < dl; ++a)
      out += m.block(a * dr, a * dr, dr, dr);
    return out;
  }
  CMatrix out(dl, dl);
  for (Index a = 0; a < dl; ++a)
    for (Index b = 0; b < dl; ++b)
      out(a, b) = m.block(a * dr, b * dr, dr, dr).trace();
  return out;
}

/// Swap operator W = sum_ij |i><j| (x) |j><i| on a d (x) d space.
/// W vec(A) = vec(A^T) and W^2 = I.
inline CMatrix swap_operator(Index d) {
  if (d < 1) throw DimensionError("swap_operator: d must be positive");
  CMatrix w = CMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      w(i * d + j, j * d + i) = 1.0;
  return w;
}

struct ProjectorPair {
  CMatrix antisymmetric; // R = (I - W)/2, rank d(d-1)/2
  CMatrix symmetric;     // S = (I + W)/2, rank d(d+1)/2
};

inline ProjectorPair sym_antisym_projectors(Index d) {
  const CMatrix w = swap_operator(d);
  const CMatrix id = CMatrix::Identity(d * d, d * d);
  return {0.5 * (id - w), 0.5 * (id + w)};
}

struct OperatorNorms {
  double spectral = 0;  // largest singular value
  double frobenius = 0; // sqrt of sum of squared magnitudes
};

inline OperatorNorms operator_norms(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("operator_norms: matrix must be square");
  if (m.rows() == 0) return {0.0, 0.0};
  Eigen::JacobiSVD<CMatrix> svd(m);
  return {svd.singularValues()(0), m.norm()};
}

inline double spectral_norm(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return m.size() == 0 ? 0.0 : svd.singularValues()(0);
}

inline CMatrix hermitian_part(const CMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

/// Smallest eigenvalue of the Hermitian part of m.
inline double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline bool is_hermitian(const CMatrix& m, double tolerance = tol::hermitian) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

/// Hermitian within tolerance and min eigenvalue >= -tolerance.
/// Non-Hermitian inputs report false rather than erroring.
inline bool is_psd(const CMatrix& m, double tolerance = tol::psd) {
  if (!is_hermitian(m, tolerance)) return false;
  return min_eigenvalue(m) >= -tolerance;
}

/// Reorders the tensor factors of a square matrix. dims lists the factor
/// dimensions in the input order; output slot i carries input factor perm[i].
inline CMatrix permute_factors(const CMatrix& m,
                               const std::vector<Index>& dims,
                               const std::vector<int>& perm) {
  if (dims.size() != perm.size())
    throw DimensionError("permute_factors: dims/perm size mismatch");
  Index total = 1;
  for (Index d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw DimensionError("permute_factors: matrix side does not match dims");

  const int k = static_cast<int>(dims.size());
  std::vector<Index> map(static_cast<std::size_t>(total));
  std::vector<Index> digits(static_cast<std::size_t>(k));
  for (Index r = 0; r < total; ++r) {
    Index x = r;
    for (int f = k - 1; f >= 0; --f) {
      digits[static_cast<std::size_t>(f)] = x % dims[static_cast<std::size_t>(f)];
      x /= dims[static_cast<std::size_t>(f)];
    }
    Index out = 0;
    for (int i = 0; i < k; ++i) {
      const int src = perm[static_cast<std::size_t>(i)];
      out = out * dims[static_cast<std::size_t>(src)] +
            digits[static_cast<std::size_t>(src)];
    }
    map[static_cast<std::size_t>(r)] = out;
  }

  CMatrix out(total, total);
  for (Index r = 0; r < total; ++r)
    for (Index c = 0; c < total; ++c)
      out(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) =
          m(r, c);
  return out;
}

} // namespace unimix
