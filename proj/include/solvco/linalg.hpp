#pragma once

#include <cstddef>
#include <vector>

#include "solvco/matrix.hpp"
#include "solvco/polynomial.hpp"

namespace solvco {

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(Matrix m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;
};

/// Rank and a basis of the null space. The basis is the standard one read off
/// the reduced echelon form: one vector per free column, with a 1 there.
RankKernel rank_and_kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Throws SingularMatrix when m is not invertible.
Matrix inverse(const Matrix& m);

Rational determinant(const Matrix& m);

/// Faddeev-LeVerrier; monic of degree n.
Polynomial characteristic_polynomial(const Matrix& m);

/// Least common multiple of the per-basis-vector Krylov annihilators.
Polynomial minimal_polynomial(const Matrix& m);

/// p(m) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);

bool is_nilpotent(const Matrix& m);

struct JordanDecomposition {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Additive Jordan-Chevalley decomposition by Newton iteration on the
/// squarefree part of the minimal polynomial.
JordanDecomposition jordan_chevalley(const Matrix& m);

/// A rational primary component of a semisimple matrix. `real_part` is the
/// rational value a of the eigenvalues a +- ib on a complex component, or
/// unset on the totally real component.
struct PrimaryComponent {
  Polynomial factor;
  Matrix projector;
  bool compact = false;
  Rational real_part;
};

struct SplitCompactParts {
  Matrix split;
  Matrix compact;
  /// Component 0 gathers every real eigenvalue (it may be absent); the rest
  /// are the irreducible quadratics x^2 - 2ax + c with a^2 < c.
  std::vector<PrimaryComponent> components;
};

/// Real/imaginary split of a semisimple matrix, both parts polynomials in s.
/// Throws NotSemisimple or NotRationallySplittable.
SplitCompactParts split_compact_parts(const Matrix& s);

/// sum_{k>=1} (-1)^{k+1} (m - I)^k / k. Throws NotUnipotent.
Matrix log_unipotent(const Matrix& m);

/// Finite exponential series of a nilpotent matrix. Throws NotUnipotent if the
/// input is not nilpotent.
Matrix exp_nilpotent(const Matrix& n);

}  // namespace solvco
