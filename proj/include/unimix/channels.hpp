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

#include <string>
#include <vector>

#include "unimix/matrix.hpp"

namespace unimix {

/// Choi matrix of a super-operator on d-dimensional spaces: the d^2 x d^2
/// matrix sum_ij Phi(|i><j|) (x) |i><j|, output factor first. This is the
/// canonical channel representation; every other form converts into it.
struct ChoiMatrix {
  Index d = 0;
  CMatrix matrix;

  ChoiMatrix() = default;
  ChoiMatrix(Index dim, CMatrix m) : d(dim), matrix(std::move(m)) {
    if (d < 1 || matrix.rows() != d * d || matrix.cols() != d * d)
      throw DimensionError("ChoiMatrix: matrix side must be d^2");
    if (!finite_entries(matrix))
      throw std::invalid_argument("ChoiMatrix: non-finite entries");
  }
};

struct KrausSet {
  Index d = 0;
  std::vector<CMatrix> operators;
};

/// Weighted list of unitaries (p_i, U_i) representing the channel
/// X -> sum_i p_i U_i X U_i^dag.
struct UnitaryEnsemble {
  struct Term {
    double weight = 0;
    CMatrix unitary;
  };
  Index d = 0;
  std::vector<Term> terms;
};

/// CP/TP/unital residuals and verdicts for a candidate Choi matrix. Always
/// reports; never rejects, so near-channels can be analyzed too.
struct ValidityReport {
  double cp_residual = 0;     // Hermiticity defect or negative-eigenvalue magnitude
  double tp_residual = 0;     // ||Tr_Y J - I||_inf
  double unital_residual = 0; // ||Tr_X J - I||_inf
  double tolerance = 0;
  bool cp = false;
  bool tp = false;
  bool unital = false;
  bool doubly_stochastic = false;
};

inline void check_ensemble(const UnitaryEnsemble& e,
                           double weight_tol = tol::ensemble_weight,
                           double unitary_tol = 1e-10) {
  if (e.d < 1 || e.terms.empty())
    throw std::invalid_argument("ensemble: empty or bad dimension");
  double sum = 0;
  const CMatrix id = CMatrix::Identity(e.d, e.d);
  for (const auto& term : e.terms) {
    if (term.unitary.rows() != e.d || term.unitary.cols() != e.d)
      throw DimensionError("ensemble: unitary has wrong shape");
    if (term.weight < -weight_tol)
      throw std::invalid_argument("ensemble: negative weight");
    if ((term.unitary.adjoint() * term.unitary - id).cwiseAbs().maxCoeff() >
        unitary_tol)
      throw std::invalid_argument("ensemble: element is not unitary");
    sum += term.weight;
  }
  if (std::abs(sum - 1.0) > weight_tol)
    throw std::invalid_argument("ensemble: weights sum to " +
                                std::to_string(sum) + ", expected 1");
}

/// J(Phi) for Phi(X) = sum_i A_i X A_i^dag, i.e. sum_i vec(A_i) vec(A_i)^dag.
inline ChoiMatrix choi_from_kraus(const KrausSet& k) {
  if (k.d < 1 || k.operators.empty())
    throw std::invalid_argument("choi_from_kraus: empty Kraus set");
  CMatrix j = CMatrix::Zero(k.d * k.d, k.d * k.d);
  for (const auto& a : k.operators) {
    if (a.rows() != k.d || a.cols() != k.d)
      throw DimensionError("choi_from_kraus: mixed operator dimensions");
    const CVector v = vec(a);
    j += v * v.adjoint();
  }
  return {k.d, std::move(j)};
}

/// J of the rank-one-form map X -> <A, X> B, which equals B (x) conj(A).
inline ChoiMatrix choi_from_rank_one_form(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionError("choi_from_rank_one_form: need equal square shapes");
  return {a.rows(), kron(b, a.conjugate())};
}

/// Applies the channel with Choi matrix J to X: Phi(X) = Tr_X[J (I (x) X^T)].
inline CMatrix apply_channel(const ChoiMatrix& j, const CMatrix& x) {
  if (x.rows() != j.d || x.cols() != j.d)
    throw DimensionError("apply_channel: input must be d x d");
  const CMatrix id = CMatrix::Identity(j.d, j.d);
  return partial_trace(j.matrix * kron(id, x.transpose()), {j.d, j.d},
                       Factor::Right);
}

inline ValidityReport validate(const ChoiMatrix& j,
                               double tolerance = tol::validity) {
  ValidityReport r;
  r.tolerance = tolerance;
  const CMatrix id = CMatrix::Identity(j.d, j.d);
  const double herm = 0.5 * (j.matrix - j.matrix.adjoint()).cwiseAbs().maxCoeff();
  const double neg = std::max(0.0, -min_eigenvalue(j.matrix));
  r.cp_residual = std::max(herm, neg);
  r.tp_residual =
      spectral_norm(partial_trace(j.matrix, {j.d, j.d}, Factor::Left) - id);
  r.unital_residual =
      spectral_norm(partial_trace(j.matrix, {j.d, j.d}, Factor::Right) - id);
  r.cp = r.cp_residual <= tolerance;
  r.tp = r.tp_residual <= tolerance;
  r.unital = r.unital_residual <= tolerance;
  r.doubly_stochastic = r.cp && r.tp && r.unital;
  return r;
}

/// Completely depolarizing channel X -> Tr(X) I / d, whose Choi is I / d.
inline ChoiMatrix depolarizing_choi(Index d) {
  if (d < 1) throw DimensionError("depolarizing_choi: d must be positive");
  return {d, CMatrix::Identity(d * d, d * d) / static_cast<double>(d)};
}

/// Identity channel, J = vec(I) vec(I)^dag.
inline ChoiMatrix identity_choi(Index d) {
  if (d < 1) throw DimensionError("identity_choi: d must be positive");
  const CVector v = vec(CMatrix::Identity(d, d));
  return {d, v * v.adjoint()};
}

/// Convex combination of Choi matrices.
inline ChoiMatrix mix(const std::vector<ChoiMatrix>& channels,
                      const std::vector<double>& probs) {
  if (channels.empty() || channels.size() != probs.size())
    throw std::invalid_argument("mix: need matching nonempty lists");
  const Index d = channels[0].d;
  double sum = 0;
  for (double p : probs) {
    if (p < -tol::ensemble_weight)
      throw std::invalid_argument("mix: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::ensemble_weight)
    throw std::invalid_argument("mix: probabilities sum to " +
                                std::to_string(sum));
  CMatrix out = CMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].d != d) throw DimensionError("mix: mixed dimensions");
    out += probs[i] * channels[i].matrix;
  }
  return {d, std::move(out)};
}

/// Choi of a mixed-unitary ensemble: sum_i p_i vec(U_i) vec(U_i)^dag.
/// Always doubly stochastic (up to roundoff) because each term is a
/// unitary conjugation.
inline ChoiMatrix ensemble_to_choi(const UnitaryEnsemble& e) {
  check_ensemble(e);
  CMatrix j = CMatrix::Zero(e.d * e.d, e.d * e.d);
  for (const auto& term : e.terms) {
    const CVector v = vec(term.unitary);
    j += term.weight * (v * v.adjoint());
  }
  return {e.d, std::move(j)};
}

} // namespace unimix
