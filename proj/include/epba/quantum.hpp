// Copyright 2026 The epba Authors
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

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "epba/algebra.hpp"
#include "epba/graph.hpp"
#include "epba/states.hpp"

namespace epba {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Hermitian idempotent matrix (Frobenius tolerance 1e-9 on both).
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix, double tolerance = 1e-9);

  /// |v><v| / <v|v>.
  static Projector onto(const ComplexVector& v);
  static Projector zero(std::size_t dim);
  static Projector identity(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  /// Trace, which is the rank for a projector.
  double trace() const { return matrix_.trace().real(); }

 private:
  ComplexMatrix matrix_;
};

struct QuantumOptions {
  std::size_t cap = 4096;
  double compat_tolerance = 1e-8;  // ||PQ - QP||_F
  double dedup_tolerance = 1e-8;   // ||P - Q||_F
};

struct QuantumSystem {
  std::vector<Projector> projectors;  // indexed by the algebra's ElementId
  PartialBooleanAlgebra algebra;
  std::vector<ElementId> generator_ids;
};

/// Closes the generators under ~P = I - P and, for commuting pairs,
/// P & Q = PQ and P | Q = P + Q - PQ, deduplicating by Frobenius distance.
/// Element 0 is the zero projector, element 1 the identity. Generators are
/// labelled by `names` (default P0, P1, ...). Throws CapExceeded.
QuantumSystem generate_system(std::span<const Projector> generators,
                              std::span<const std::string> names = {},
                              const QuantumOptions& options = {});

/// Vertices are the projectors; edges join orthogonal pairs (|tr PQ| <= 1e-8).
/// Throws NotRankOne unless every trace is 1 within 1e-9.
AtomGraph orthogonality_graph(std::span<const Projector> projectors,
                              std::span<const std::string> names = {});

/// Pairs of elements whose Frobenius distance lies in [1e-9, 1e-6]: distinct
/// projectors close enough that tolerance-based merging may be unreliable.
std::vector<std::pair<ElementId, ElementId>> near_collisions(
    const QuantumSystem& q);

class DensityMatrix {
 public:
  /// Hermitian, PSD (eigenvalues >= -1e-9) and unit trace within tolerance.
  explicit DensityMatrix(ComplexMatrix matrix, double tolerance = 1e-9);

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(const ComplexVector& v);
  /// Ginibre ensemble: G G^dagger / tr.
  static DensityMatrix random(std::size_t dim, std::mt19937_64& rng);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

/// p(P) = Re tr(rho P), clamped to [0, 1]. Throws DimensionMismatch.
AlgebraState density_to_state(const DensityMatrix& rho, const QuantumSystem& q);

/// Five rank-1 projectors in dimension 3 with P_i orthogonal to P_{i+1 mod 5}.
std::vector<Projector> kcbs_generators();
QuantumSystem scenario_kcbs();

/// Two-qubit CHSH system generated by the 16 joint eigenprojectors of
/// (a, b), (a, b'), (a', b), (a', b') with a = Z⊗I, a' = X⊗I,
/// b = I⊗(Z+X)/√2, b' = I⊗(Z-X)/√2.
QuantumSystem scenario_chsh();

/// CHSH system with a = Z⊗I, a' = (cos α Z + sin α X)⊗I,
/// b = I⊗(cos β Z + sin β X), b' = I⊗(cos β Z - sin β X).
/// scenario_chsh() is chsh_system(π/2, π/4).
QuantumSystem chsh_system(double alice_angle, double bob_angle);

/// Projectors onto the product eigenvectors of one measurement pair, as
/// element ids of scenario_chsh(). `alice` 0 = a, 1 = a'; `bob` 0 = b, 1 = b'.
std::vector<ElementId> chsh_context_atoms(const QuantumSystem& chsh, int alice,
                                          int bob);

/// c = e3, a1 = e1, b1 = e2, a2 and b2 rotated by pi/5 in the e1-e2 plane.
std::vector<Projector> fig2_generators();
QuantumSystem scenario_fig2();

}  // namespace epba
