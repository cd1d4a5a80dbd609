#include "solvco/linalg.hpp"

#include <utility>

#include "solvco/errors.hpp"

namespace solvco {

RowEchelon row_echelon(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = c; j < cols; ++j) swap(m(sel, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(pivot_row, j) != 0) m(r, j) -= factor * m(pivot_row, j);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

RankKernel rank_and_kernel(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Rational determinant(const Matrix& input) {
  if (!input.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = c; j < n; ++j) swap(m(sel, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::zero(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + c[n - k + 1] * id;
    c[n - k] = -(a * mk).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Polynomial result = Polynomial::constant(1);
  struct Reduced {
    Vector vec;
    Vector comb;  // coefficients over the Krylov vectors k_0..k_j
    std::size_t pivot;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Reduced> basis;
    Vector k(n);
    k[i] = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      Vector v = k;
      Vector comb(j + 1);
      comb[j] = 1;
      for (const auto& b : basis) {
        if (v[b.pivot] == 0) continue;
        const Rational f = v[b.pivot] / b.vec[b.pivot];
        for (std::size_t t = 0; t < n; ++t) v[t] -= f * b.vec[t];
        for (std::size_t t = 0; t < b.comb.size(); ++t) comb[t] -= f * b.comb[t];
      }
      if (is_zero(v)) {
        result = lcm(result, Polynomial(comb));
        break;
      }
      std::size_t pivot = 0;
      while (v[pivot] == 0) ++pivot;
      basis.push_back({std::move(v), std::move(comb), pivot});
      k = m * k;
    }
  }
  return result;
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc = Matrix::zero(n, n);
  const Matrix id = Matrix::identity(n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

JordanDecomposition jordan_chevalley(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("Jordan-Chevalley of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {m, m};
  const Polynomial f = squarefree_part(minimal_polynomial(m));
  const Polynomial df = f.derivative();
  Matrix s = m;
  // Quadratic convergence: ceil(log2(index)) + 1 steps suffice, index <= n.
  std::size_t bound = 1;
  while ((std::size_t{1} << (bound - 1)) < n) ++bound;
  for (std::size_t step = 0;; ++step) {
    Matrix fs = evaluate(f, s);
    if (fs.is_zero()) break;
    if (step > bound) throw VerificationFailed("Jordan-Chevalley iteration did not converge");
    s = s - fs * inverse(evaluate(df, s));
  }
  return {s, m - s};
}

SplitCompactParts split_compact_parts(const Matrix& s) {
  if (!s.is_square()) throw DimensionMismatch("split/compact parts of a non-square matrix");
  const std::size_t n = s.rows();
  const Polynomial p = minimal_polynomial(s);
  if (!is_squarefree(p)) throw NotSemisimple("minimal polynomial " + p.to_string() + " is not squarefree");

  LowDegreeFactorization lf = low_degree_factors(p);
  Polynomial real_factor = lf.rest;
  if (real_factor.degree() > 0 && !is_totally_real(real_factor))
    throw NotRationallySplittable("irreducible factor(s) " + real_factor.to_string() +
                                  " of degree >= 3 have non-real roots");
  for (const auto& r : lf.roots) real_factor = real_factor * Polynomial::linear_root(r);

  struct Target {
    Polynomial factor;
    Polynomial value;  // the polynomial the split part equals on this component
    bool compact;
    Rational a;
  };
  std::vector<Target> targets;
  std::vector<Target> complex_targets;
  for (const auto& q : lf.quadratics) {
    // q = x^2 + b x + c ; discriminant b^2 - 4c
    const Rational b = q.coefficient(1), c = q.coefficient(0);
    if (b * b - 4 * c >= 0) {
      real_factor = real_factor * q;
    } else {
      Rational a = -b / 2;
      complex_targets.push_back({q, Polynomial::constant(a), true, a});
    }
  }
  if (real_factor.degree() > 0)
    targets.push_back({real_factor.monic(), Polynomial::monomial(1), false, Rational(0)});
  for (auto& t : complex_targets) targets.push_back(std::move(t));

  // Chinese remainder: idempotent e_j = 1 mod f_j, 0 mod f_k (k != j).
  SplitCompactParts out;
  Polynomial split_poly;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    Polynomial others = Polynomial::constant(1);
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (k != j) others = others * targets[k].factor;
    Bezout bz = extended_gcd(others, targets[j].factor);
    Polynomial idem = (bz.s * others) % p;
    split_poly = split_poly + (targets[j].value * idem) % p;
    PrimaryComponent comp;
    comp.factor = targets[j].factor;
    comp.projector = evaluate(idem, s);
    comp.compact = targets[j].compact;
    comp.real_part = targets[j].a;
    out.components.push_back(std::move(comp));
  }
  out.split = n ? evaluate(split_poly % p, s) : s;
  out.compact = s - out.split;
  return out;
}

Matrix log_unipotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("logarithm of a non-square matrix");
  const std::size_t n = m.rows();
  const Matrix nil = m - Matrix::identity(n);
  if (!is_nilpotent(nil)) throw NotUnipotent("matrix minus identity is not nilpotent");
  Matrix result = Matrix::zero(n, n);
  Matrix power = nil;
  for (long k = 1; !power.is_zero(); ++k) {
    Rational coef(k % 2 == 1 ? 1 : -1, k);
    coef.canonicalize();
    result += coef * power;
    power = power * nil;
  }
  return result;
}

Matrix exp_nilpotent(const Matrix& nil) {
  if (!nil.is_square()) throw DimensionMismatch("exponential of a non-square matrix");
  if (!is_nilpotent(nil)) throw NotUnipotent("exponential series needs a nilpotent matrix");
  const std::size_t n = nil.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (long k = 1;; ++k) {
    term = Rational(1, k) * (term * nil);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

}  // namespace solvco
