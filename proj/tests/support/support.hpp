#pragma once

// Shared helpers for the unit and acceptance tests: small algebra builders and
// seeded random generators.

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "solvco/lie_algebra.hpp"
#include "solvco/lie_core.hpp"
#include "solvco/linalg.hpp"
#include "solvco/matrix.hpp"

namespace solvco::testing {

/// One term coef * e^{ij} of d e^k, all indices 1-based.
struct DTerm {
  std::size_t k;
  long num;
  std::size_t i, j;
  long den = 1;
};

/// Builds the algebra from its structure equations d e^k = sum coef e^{ij},
/// i.e. c(k, i, j) = -coef.
inline LieAlgebra from_equations(std::size_t dim, const std::vector<DTerm>& terms) {
  std::vector<Rational> t(dim * dim * dim);
  for (const auto& d : terms) {
    Rational c(-d.num, d.den);
    c.canonicalize();
    const std::size_t k = d.k - 1, i = d.i - 1, j = d.j - 1;
    t[(k * dim + i) * dim + j] = c;
    t[(k * dim + j) * dim + i] = -c;
  }
  return LieAlgebra::from_tensor(dim, std::move(t));
}

inline LieAlgebra heisenberg3() { return from_equations(3, {{3, -1, 1, 2}}); }

inline LieAlgebra sol3() { return from_equations(3, {{2, 1, 1, 2}, {3, -1, 1, 3}}); }

inline LieAlgebra rot3() { return from_equations(3, {{2, 1, 1, 3}, {3, -1, 1, 2}}); }

inline LieAlgebra hyperelliptic4() { return from_equations(4, {{1, 1, 2, 4}, {2, -1, 1, 4}}); }

inline LieAlgebra nakamura() {
  return from_equations(6, {{3, -1, 1, 3}, {3, 1, 2, 4}, {4, -1, 1, 4}, {4, -1, 2, 3},
                            {5, 1, 1, 5}, {5, -1, 2, 6}, {6, 1, 1, 6}, {6, 1, 2, 5}});
}

inline LieAlgebra nakamura_tilde() {
  return from_equations(6, {{3, -1, 1, 3}, {4, -1, 1, 4}, {5, 1, 1, 5}, {6, 1, 1, 6}});
}

/// [x, y] = y
inline LieAlgebra affine2() { return from_equations(2, {{2, -1, 1, 2}}); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Small rational with numerator in [-range, range] and denominator in [1, 3].
  Rational rational(long range = 3) {
    Rational r(integer(-range, range), integer(1, 3));
    r.canonicalize();
    return r;
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long range = 3, double density = 0.7) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (coin(density)) m(i, j) = rational(range);
    return m;
  }

  Matrix invertible(std::size_t n) {
    while (true) {
      Matrix m = matrix(n, n, 2, 0.8);
      if (rank(m) == n) return m;
    }
  }

  /// Matrix with a prescribed structure: conjugate of a block matrix mixing
  /// rational eigenvalues, Jordan blocks and rotation-type blocks, so that the
  /// Jordan-Chevalley and split/compact paths are exercised.
  Matrix structured(std::size_t n, bool allow_complex = true) {
    Matrix block(n, n);
    std::size_t i = 0;
    while (i < n) {
      const long kind = integer(0, allow_complex ? 2 : 1);
      if (kind == 2 && i + 2 <= n) {
        const Rational a = rational(2), b = Rational(integer(1, 3));
        block(i, i) = a;
        block(i + 1, i + 1) = a;
        block(i, i + 1) = b;
        block(i + 1, i) = -b;
        i += 2;
      } else {
        block(i, i) = rational(2);
        if (kind == 1 && i + 1 < n) {
          block(i + 1, i + 1) = block(i, i);
          block(i, i + 1) = 1;
          i += 2;
        } else {
          i += 1;
        }
      }
    }
    const Matrix p = invertible(n);
    return p * block * inverse(p);
  }

  Vector vector(std::size_t n, long range = 3) {
    Vector v(n);
    for (auto& x : v) x = rational(range);
    return v;
  }

  /// Random solvable Lie algebra: a semidirect product R^k x| R^m, optionally
  /// twisted by a random basis change. Untwisted, V = span{e_1..e_k} and
  /// n = span{e_{k+1}..e_dim} is a valid splitting; k is reported via k_out.
  LieAlgebra solvable(std::size_t dim, std::size_t* k_out = nullptr, bool twist = true) {
    return semidirect(dim, k_out, twist, true);
  }

  /// As solvable(), but every V-adjoint has real rational spectrum.
  LieAlgebra completely_solvable(std::size_t dim, std::size_t* k_out = nullptr, bool twist = true) {
    return semidirect(dim, k_out, twist, false);
  }

  LieAlgebra semidirect(std::size_t dim, std::size_t* k_out, bool twist, bool allow_complex) {
    LieAlgebra g(dim);
    const std::size_t k = static_cast<std::size_t>(integer(1, static_cast<long>(dim) - 1));
    if (k_out) *k_out = k;
    const std::size_t m = dim - k;
    // One derivation D of the abelian ideal spanned by the last m vectors; the
    // remaining V vectors act by polynomials in D so that everything commutes.
    const Matrix d = structured(m, allow_complex);
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < k; ++a) {
      const Rational s1 = rational(2), s2 = rational(2);
      acts.push_back(a == 0 ? d : s1 * d + s2 * (d * d));
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < m; ++j) {
        Vector v(dim);
        for (std::size_t i = 0; i < m; ++i) v[k + i] = acts[a](i, j);
        g.set_bracket(a, k + j, v);
      }
    if (twist && coin()) g = g.change_basis(invertible(dim));
    return g;
  }

  /// R x| heis: e1 acts on span{e2, e3} by a random M and on e4 = [e2, e3]
  /// by tr M, a derivation of the Heisenberg ideal. V = span{e1}.
  LieAlgebra heisenberg_extension(bool allow_complex = true) {
    LieAlgebra g(4);
    const Matrix m = structured(2, allow_complex);
    g.set_bracket(0, 1, Vector{0, m(0, 0), m(1, 0), 0});
    g.set_bracket(0, 2, Vector{0, m(0, 1), m(1, 1), 0});
    g.set_bracket(0, 3, Vector{0, 0, 0, m.trace()});
    g.set_bracket(1, 2, unit_vector(4, 3));
    return g;
  }

  /// Random nilpotent algebra of filiform type, optionally with a Heisenberg
  /// bracket, possibly in a random basis.
  LieAlgebra nilpotent(std::size_t dim) {
    // [e1, e_j] = e_{j+1}; a Heisenberg pair only when nothing else is set.
    LieAlgebra g(dim);
    for (std::size_t j = 1; j + 1 < dim; ++j)
      if (coin(0.8)) g.set_bracket(0, j, unit_vector(dim, j + 1));
    if (coin() && dim >= 4 && g.is_abelian()) g.set_bracket(1, 2, unit_vector(dim, dim - 1));
    if (coin()) g = g.change_basis(invertible(dim));
    return g;
  }

  /// Either a valid algebra or a random perturbation of one that keeps
  /// antisymmetry.
  LieAlgebra maybe_broken(std::size_t dim) {
    LieAlgebra g = coin() ? solvable(dim) : nilpotent(dim);
    if (coin()) return g;
    const std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(dim) - 2));
    const std::size_t j = static_cast<std::size_t>(integer(static_cast<long>(i) + 1, static_cast<long>(dim) - 1));
    Vector v = g.bracket_basis(i, j);
    v[static_cast<std::size_t>(integer(0, static_cast<long>(dim) - 1))] += rational(2);
    g.set_bracket(i, j, v);
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Left-invariant forms of R^k x|_phi R^m with phi(x) = exp(sum x_a D_a) for
/// commuting D_a: theta = phi(x)^{-1} dw, so d theta = -sum_a dx_a ^ D_a theta.
/// Basis: e1..ek are dx_a, then the components of theta.
inline LieAlgebra maurer_cartan_semidirect(const std::vector<Matrix>& d) {
  const std::size_t k = d.size(), m = d.front().rows(), n = k + m;
  std::vector<Rational> t(n * n * n);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        // d e^{k+r} gets -(D_a)_{rc} e^a ^ e^{k+c}; c(K, a, J) = +(D_a)_{rc}
        const std::size_t kk = k + r, j = k + c;
        t[(kk * n + a) * n + j] += d[a](r, c);
        t[(kk * n + j) * n + a] -= d[a](r, c);
      }
  return LieAlgebra::from_tensor(n, std::move(t));
}

}  // namespace solvco::testing
