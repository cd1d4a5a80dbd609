#include "solvco/lie_algebra.hpp"

#include <sstream>

#include "solvco/errors.hpp"
#include "solvco/linalg.hpp"

namespace solvco {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), tensor_(dim * dim * dim) {
  if (dim == 0) throw DimensionMismatch("Lie algebra dimension must be positive");
}

LieAlgebra LieAlgebra::from_tensor(std::size_t dim, std::vector<Rational> tensor) {
  LieAlgebra g(dim);
  if (tensor.size() != dim * dim * dim) throw DimensionMismatch("structure tensor has wrong size");
  g.tensor_ = std::move(tensor);
  return g;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) throw DimensionMismatch("bracket index out of range");
  if (i == j) {
    if (!solvco::is_zero(value)) throw AntisymmetryViolation("[e_i, e_i] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    at(k, i, j) = value[k];
    at(k, j, i) = -value[k];
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(k, i, j);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket argument has wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(k, i, j) != 0) out[k] += xy * c(k, i, j);
    }
  }
  return out;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  if (p.rows() != dim_ || p.cols() != dim_) throw DimensionMismatch("change of basis has wrong shape");
  const Matrix pinv = inverse(p);
  LieAlgebra out(dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b)
      out.set_bracket(a, b, pinv * bracket(p.column(a), p.column(b)));
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : tensor_)
    if (x != 0) return false;
  return true;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != ambient_) throw DimensionMismatch("subspace basis vector has wrong length");
  if (!basis_.empty() && rank(Matrix::from_columns(ambient_, basis_)) != basis_.size())
    throw DimensionMismatch("subspace basis is linearly dependent");
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(ambient_dim);
  Matrix rows(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw DimensionMismatch("spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient_dim; ++c) rows(r, c) = vectors[r][c];
  }
  RowEchelon e = row_echelon(std::move(rows));
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> basis;
  for (auto i : indices) {
    if (i >= ambient_dim) throw DimensionMismatch("coordinate index out of range");
    basis.push_back(unit_vector(ambient_dim, i));
  }
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length");
  if (solvco::is_zero(v)) return true;
  if (basis_.empty()) return false;
  std::vector<Vector> cols = basis_;
  cols.push_back(v);
  return rank(Matrix::from_columns(ambient_, cols)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
}

std::string Subspace::to_string() const {
  if (basis_.empty()) return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + format_vector(basis_[i]);
  return s + "}";
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Rational mag = abs(v[i]);
    if (first)
      os << (v[i] < 0 ? "-" : "");
    else
      os << (v[i] < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << solvco::to_string(mag) << "*";
    os << "e" << (i + 1);
  }
  return first ? "0" : os.str();
}

}  // namespace solvco
