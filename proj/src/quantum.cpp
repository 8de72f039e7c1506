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

#include "epba/quantum.hpp"

#include <cmath>
#include <numbers>

#include "epba/error.hpp"

namespace epba {

namespace {

using Complex = std::complex<double>;

double frobenius(const ComplexMatrix& m) { return m.norm(); }

}  // namespace

Projector::Projector(ComplexMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw NotAProjector("projector must be a nonempty square matrix");
  if (frobenius(matrix_ - matrix_.adjoint()) > tolerance)
    throw NotAProjector("matrix is not Hermitian");
  if (frobenius(matrix_ * matrix_ - matrix_) > tolerance)
    throw NotAProjector("matrix is not idempotent");
}

Projector Projector::onto(const ComplexVector& v) {
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw NotAProjector("cannot project onto the zero vector");
  return Projector(v * v.adjoint() / norm2);
}

Projector Projector::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Projector(ComplexMatrix::Zero(d, d));
}

Projector Projector::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Projector(ComplexMatrix::Identity(d, d));
}

namespace {

std::string negate_name(const std::string& name) {
  if (name.rfind("~", 0) == 0) return name.substr(1);
  if (name.find_first_of("&|") != std::string::npos && name.front() != '(')
    return "~(" + name + ")";
  return "~" + name;
}

class Closure {
 public:
  Closure(std::size_t dim, const QuantumOptions& options)
      : dim_(dim), options_(options) {}

  // Index of an existing projector within the dedup tolerance, else -1.
  int find(const ComplexMatrix& m) const {
    for (std::size_t i = 0; i < mats_.size(); ++i)
      if (frobenius(mats_[i] - m) <= options_.dedup_tolerance)
        return static_cast<int>(i);
    return -1;
  }

  int add(ComplexMatrix m, const std::string& name) {
    if (int i = find(m); i >= 0) return i;
    if (mats_.size() >= options_.cap)
      throw CapExceeded("quantum closure exceeds " +
                        std::to_string(options_.cap) + " projectors");
    // Re-symmetrise so rounding does not accumulate across products.
    m = 0.5 * (m + m.adjoint()).eval();
    mats_.push_back(std::move(m));
    names_.push_back(name);
    return static_cast<int>(mats_.size() - 1);
  }

  bool commute(std::size_t i, std::size_t j) const {
    return frobenius(mats_[i] * mats_[j] - mats_[j] * mats_[i]) <=
           options_.compat_tolerance;
  }

  void close() {
    const auto d = static_cast<Eigen::Index>(dim_);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (std::size_t k = 0; k < mats_.size(); ++k) {
      add(id - mats_[k], negate_name(names_[k]));
      for (std::size_t j = 0; j <= k; ++j) {
        if (!commute(j, k)) continue;
        const ComplexMatrix prod = mats_[j] * mats_[k];
        const std::string a = names_[j], b = names_[k];
        add(prod, "(" + a + "&" + b + ")");
        add(mats_[j] + mats_[k] - prod, "(" + a + "|" + b + ")");
      }
    }
  }

  std::size_t size() const { return mats_.size(); }
  const ComplexMatrix& matrix(std::size_t i) const { return mats_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }

 private:
  std::size_t dim_;
  QuantumOptions options_;
  std::vector<ComplexMatrix> mats_;
  std::vector<std::string> names_;
};

int require(const Closure& c, const ComplexMatrix& m) {
  const int i = c.find(m);
  if (i < 0) throw Error("quantum closure is not closed under the operations");
  return i;
}

}  // namespace

QuantumSystem generate_system(std::span<const Projector> generators,
                              std::span<const std::string> names,
                              const QuantumOptions& options) {
  if (generators.empty()) throw InvalidInput("no generating projectors");
  if (!names.empty() && names.size() != generators.size())
    throw InvalidInput("generator names do not match generators");
  const std::size_t dim = generators.front().dim();
  for (const auto& p : generators)
    if (p.dim() != dim) throw DimensionMismatch("generators differ in dimension");

  Closure closure(dim, options);
  closure.add(Projector::zero(dim).matrix(), "0");
  closure.add(Projector::identity(dim).matrix(), "1");
  std::vector<ElementId> gen_ids;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const std::string name = names.empty() ? "P" + std::to_string(i) : names[i];
    gen_ids.push_back(closure.add(generators[i].matrix(), name));
  }
  closure.close();

  const std::size_t n = closure.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(closure.name(i));
  PartialBooleanAlgebra b(std::move(labels), 0, 1);
  const auto d = static_cast<Eigen::Index>(dim);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<ElementId>(i);
    b.set_neg(x, require(closure, id - closure.matrix(i)));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!closure.commute(i, j)) continue;
      const auto y = static_cast<ElementId>(j);
      const ComplexMatrix prod = closure.matrix(i) * closure.matrix(j);
      b.set_compatible(x, y);
      b.set_meet(x, y, require(closure, prod));
      b.set_join(x, y,
                 require(closure, closure.matrix(i) + closure.matrix(j) - prod));
    }
  }

  QuantumSystem q;
  for (std::size_t i = 0; i < n; ++i)
    q.projectors.emplace_back(closure.matrix(i), 1e-7);
  q.algebra = std::move(b);
  q.generator_ids = std::move(gen_ids);
  return q;
}

AtomGraph orthogonality_graph(std::span<const Projector> projectors,
                              std::span<const std::string> names) {
  if (!names.empty() && names.size() != projectors.size())
    throw InvalidInput("projector names do not match projectors");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    if (std::abs(projectors[i].trace() - 1.0) > 1e-9)
      throw NotRankOne("projector " + std::to_string(i) + " has trace " +
                       std::to_string(projectors[i].trace()));
    if (i > 0 && projectors[i].dim() != projectors[0].dim())
      throw DimensionMismatch("projectors differ in dimension");
    labels.push_back(names.empty() ? "P" + std::to_string(i) : names[i]);
  }
  AtomGraph g(std::move(labels));
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j)
      if (std::abs((projectors[i].matrix() * projectors[j].matrix()).trace()) <=
          1e-8)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

std::vector<std::pair<ElementId, ElementId>> near_collisions(
    const QuantumSystem& q) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t i = 0; i < q.projectors.size(); ++i) {
    for (std::size_t j = i + 1; j < q.projectors.size(); ++j) {
      const double d =
          frobenius(q.projectors[i].matrix() - q.projectors[j].matrix());
      if (d >= 1e-9 && d <= 1e-6)
        out.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
    }
  }
  return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw InvalidInput("density matrix must be a nonempty square matrix");
  if (frobenius(matrix_ - matrix_.adjoint()) > tolerance)
    throw InvalidInput("density matrix is not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > tolerance)
    throw InvalidInput("density matrix does not have unit trace");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(matrix_);
  if (eig.eigenvalues().minCoeff() < -tolerance)
    throw InvalidInput("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& v) {
  return DensityMatrix(v * v.adjoint() / v.squaredNorm());
}

DensityMatrix DensityMatrix::random(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

AlgebraState density_to_state(const DensityMatrix& rho, const QuantumSystem& q) {
  AlgebraState p;
  for (const auto& proj : q.projectors) {
    if (proj.dim() != rho.dim())
      throw DimensionMismatch("density matrix dimension " +
                              std::to_string(rho.dim()) + " vs system " +
                              std::to_string(proj.dim()));
    double v = (rho.matrix() * proj.matrix()).trace().real();
    if (v < 0.0 && v >= -1e-9) v = 0.0;
    if (v > 1.0 && v <= 1.0 + 1e-9) v = 1.0;
    p.values.push_back(v);
  }
  return p;
}

std::vector<Projector> kcbs_generators() {
  const double pi = std::numbers::pi;
  const double c = std::cos(pi / 5.0);
  const double cos_t = std::sqrt(c / (1.0 + c));
  const double sin_t = std::sqrt(1.0 - cos_t * cos_t);
  std::vector<Projector> out;
  for (int i = 0; i < 5; ++i) {
    const double phi = 4.0 * pi * i / 5.0;
    ComplexVector v(3);
    v << cos_t, sin_t * std::cos(phi), sin_t * std::sin(phi);
    out.push_back(Projector::onto(v));
  }
  return out;
}

QuantumSystem scenario_kcbs() {
  const auto gens = kcbs_generators();
  return generate_system(gens);
}

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Spectral projectors (+1 first) of a one-qubit observable with eigenvalues ±1.
std::pair<ComplexMatrix, ComplexMatrix> spectral(const ComplexMatrix& obs) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {(id + obs) / 2.0, (id - obs) / 2.0};
}

struct ChshObservables {
  std::pair<ComplexMatrix, ComplexMatrix> alice[2];
  std::pair<ComplexMatrix, ComplexMatrix> bob[2];
};

ChshObservables chsh_observables(double alpha, double beta) {
  ComplexMatrix z(2, 2), x(2, 2);
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  auto axis = [&](double t) -> ComplexMatrix {
    return std::cos(t) * z + std::sin(t) * x;
  };
  return {{spectral(z), spectral(axis(alpha))},
          {spectral(axis(beta)), spectral(axis(-beta))}};
}

std::vector<ComplexMatrix> chsh_joint(const ChshObservables& o, int alice,
                                      int bob) {
  const auto& [ap, am] = o.alice[alice];
  const auto& [bp, bm] = o.bob[bob];
  return {kron(ap, bp), kron(ap, bm), kron(am, bp), kron(am, bm)};
}

}  // namespace

QuantumSystem scenario_chsh() {
  return chsh_system(std::numbers::pi / 2.0, std::numbers::pi / 4.0);
}

QuantumSystem chsh_system(double alice_angle, double bob_angle) {
  const auto obs = chsh_observables(alice_angle, bob_angle);
  const char* alice_names[] = {"a", "a'"};
  const char* bob_names[] = {"b", "b'"};
  const char* signs[][2] = {{"+", "+"}, {"+", "-"}, {"-", "+"}, {"-", "-"}};
  std::vector<Projector> gens;
  std::vector<std::string> names;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto joint = chsh_joint(obs, a, b);
      for (int k = 0; k < 4; ++k) {
        gens.emplace_back(joint[k]);
        names.push_back(std::string(alice_names[a]) + signs[k][0] +
                        bob_names[b] + signs[k][1]);
      }
    }
  }
  return generate_system(gens, names);
}

std::vector<ElementId> chsh_context_atoms(const QuantumSystem& chsh, int alice,
                                          int bob) {
  if (alice < 0 || alice > 1 || bob < 0 || bob > 1)
    throw InvalidInput("CHSH measurement index must be 0 or 1");
  const auto start = static_cast<std::size_t>(4 * (2 * alice + bob));
  if (chsh.generator_ids.size() != 16) throw InvalidInput("not the CHSH system");
  return {chsh.generator_ids.begin() + start,
          chsh.generator_ids.begin() + start + 4};
}

std::vector<Projector> fig2_generators() {
  const double phi = std::numbers::pi / 5.0;
  auto vec = [](double x, double y, double z) {
    ComplexVector v(3);
    v << x, y, z;
    return Projector::onto(v);
  };
  return {vec(0, 0, 1), vec(1, 0, 0), vec(0, 1, 0),
          vec(std::cos(phi), std::sin(phi), 0),
          vec(-std::sin(phi), std::cos(phi), 0)};
}

QuantumSystem scenario_fig2() {
  const auto gens = fig2_generators();
  const std::vector<std::string> names{"c", "a1", "b1", "a2", "b2"};
  return generate_system(gens, names);
}

}  // namespace epba
