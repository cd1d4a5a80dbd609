#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvco/matrix.hpp"
#include "solvco/rational.hpp"

namespace solvco {

/// Finite-dimensional Lie algebra given by structure constants on the basis
/// e_0..e_{n-1} (printed 1-based): [e_i, e_j] = sum_k c(k, i, j) e_k.
///
/// The CE sign convention used throughout is d e^k = -sum_{i<j} c(k,i,j) e^{ij}.
class LieAlgebra {
 public:
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim);

  /// Raw tensor, index (k * dim + i) * dim + j. Not checked; see validate().
  static LieAlgebra from_tensor(std::size_t dim, std::vector<Rational> tensor);

  std::size_t dim() const noexcept { return dim_; }

  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const {
    return tensor_[(k * dim_ + i) * dim_ + j];
  }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Structure constants in the basis f_j = sum_i p(i, j) e_i.
  LieAlgebra change_basis(const Matrix& p) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
  }

 private:
  Rational& at(std::size_t k, std::size_t i, std::size_t j) { return tensor_[(k * dim_ + i) * dim_ + j]; }

  std::size_t dim_;
  std::vector<Rational> tensor_;
};

Vector unit_vector(std::size_t dim, std::size_t i);

/// Linear subspace of Q^n with a linearly independent basis.
class Subspace {
 public:
  Subspace() = default;
  /// Keeps `basis` as given; throws DimensionMismatch if it is dependent.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  /// Echelon basis of the span of arbitrary vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace whole(std::size_t ambient_dim);
  /// span{e_i : i in indices}, 0-based.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return basis_.empty(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  /// Same span (basis order ignored).
  friend bool operator==(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

/// Human-readable linear combination like `e2 - 1/2*e3`.
std::string format_vector(const Vector& v);

}  // namespace solvco
