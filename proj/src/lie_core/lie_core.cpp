#include "solvco/lie_core.hpp"

#include <functional>

#include "solvco/errors.hpp"

namespace solvco {

std::string Violation::describe() const {
  if (kind == Kind::Antisymmetry)
    return "antisymmetry fails for c[" + std::to_string(k + 1) + "][" + std::to_string(i + 1) + "][" +
           std::to_string(j + 1) + "] (residual " + solvco::to_string(residual) + ")";
  return "Jacobi identity fails on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
         std::to_string(k + 1) + "), component e" + std::to_string(l + 1) + ": residual " +
         solvco::to_string(residual);
}

std::optional<Violation> validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational r = g.c(k, i, j) + g.c(k, j, i);
        if (i == j) r = g.c(k, i, i);
        if (r != 0) return Violation{Violation::Kind::Antisymmetry, i, j, k, 0, r};
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational r = 0;
          for (std::size_t m = 0; m < n; ++m)
            r += g.c(m, i, j) * g.c(l, m, k) + g.c(m, j, k) * g.c(l, m, i) + g.c(m, k, i) * g.c(l, m, j);
          if (r != 0) return Violation{Violation::Kind::Jacobi, i, j, k, l, r};
        }
  return std::nullopt;
}

void require_valid(const LieAlgebra& g) {
  if (auto v = validate(g)) {
    if (v->kind == Violation::Kind::Antisymmetry) throw AntisymmetryViolation(v->describe());
    throw JacobiViolation(v->describe());
  }
}

Matrix ad_matrix(const LieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw DimensionMismatch("ad argument has wrong length");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = g.bracket(x, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix ad_matrix(const LieAlgebra& g, std::size_t basis_index) {
  return ad_matrix(g, unit_vector(g.dim(), basis_index));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w) {
  std::vector<Vector> vs;
  for (const auto& a : u.basis())
    for (const auto& b : w.basis()) {
      Vector v = g.bracket(a, b);
      if (!is_zero(v)) vs.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), vs);
}

namespace {

std::vector<Subspace> descending_series(const LieAlgebra& g,
                                        const std::function<Subspace(const Subspace&)>& next_of) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (!series.back().is_zero()) {
    Subspace next = next_of(series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  return descending_series(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  return descending_series(g, [&](const Subspace& s) { return bracket_span(g, whole, s); });
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s) {
  Subspace term = s;
  while (!term.is_zero()) {
    Subspace next = bracket_span(g, s, term);
    if (next.dim() >= term.dim()) return false;
    term = std::move(next);
  }
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& b : s.basis())
      if (!s.contains(g.bracket(unit_vector(g.dim(), i), b))) return false;
  return true;
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (ad_matrix(g, i).trace() != 0) return false;
  return true;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// Columns of w spanning a subspace of Q^q; returns the columns of the
// intersection with ker(a - lambda).
Matrix intersect_eigenspace(const Matrix& w, const Matrix& a, const Rational& lambda) {
  const std::size_t q = a.rows();
  Matrix shifted = a - lambda * Matrix::identity(q);
  RankKernel rk = rank_and_kernel(shifted * w);
  if (rk.kernel_basis.empty()) return Matrix(q, 0);
  return w * Matrix::from_columns(w.cols(), rk.kernel_basis);
}

std::optional<Vector> common_eigenvector(const std::vector<Matrix>& ops,
                                         const std::vector<std::vector<Rational>>& eigenvalues,
                                         const Matrix& w, std::size_t idx) {
  if (w.cols() == 0) return std::nullopt;
  if (idx == ops.size()) return w.column(0);
  if (ops[idx].is_zero()) return common_eigenvector(ops, eigenvalues, w, idx + 1);
  for (const auto& lambda : eigenvalues[idx]) {
    Matrix next = intersect_eigenspace(w, ops[idx], lambda);
    if (auto v = common_eigenvector(ops, eigenvalues, next, idx + 1)) return v;
  }
  return std::nullopt;
}

std::optional<FlagWitness> non_real_witness(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Polynomial sf = squarefree_part(minimal_polynomial(ad_matrix(g, i)));
    if (is_totally_real(sf)) continue;
    LowDegreeFactorization lf = low_degree_factors(sf);
    for (const auto& q : lf.quadratics) {
      const Rational b = q.coefficient(1), c = q.coefficient(0);
      if (b * b - 4 * c < 0) return FlagWitness{i, q};
    }
    return FlagWitness{i, lf.rest};
  }
  return std::nullopt;
}

}  // namespace

FlagCertificate completely_solvable_flag(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvable("completely-solvable test needs a solvable algebra");
  const std::size_t n = g.dim();
  FlagCertificate cert;
  cert.chain.push_back(Subspace::zero(n));

  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, i));

  bool complete = true;
  while (cert.chain.back().dim() < n) {
    const Subspace& ideal = cert.chain.back();
    // Complement of the ideal by standard basis vectors outside its pivots.
    std::vector<Vector> basis = ideal.basis();
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
      basis.push_back(unit_vector(n, i));
      if (rank(Matrix::from_columns(n, basis)) == basis.size())
        complement.push_back(i);
      else
        basis.pop_back();
    }
    const std::size_t d = ideal.dim(), q = n - d;
    const Matrix to_coords = inverse(Matrix::from_columns(n, basis));

    std::vector<Matrix> ops;
    std::vector<std::vector<Rational>> eigenvalues;
    for (const auto& ad : ads) {
      Matrix induced(q, q);
      for (std::size_t c = 0; c < q; ++c) {
        Vector coords = to_coords * (ad * unit_vector(n, complement[c]));
        for (std::size_t r = 0; r < q; ++r) induced(r, c) = coords[d + r];
      }
      eigenvalues.push_back(rational_roots(minimal_polynomial(induced)));
      ops.push_back(std::move(induced));
    }
    auto v = common_eigenvector(ops, eigenvalues, Matrix::identity(q), 0);
    if (!v) {
      complete = false;
      break;
    }
    Vector lifted(n);
    for (std::size_t c = 0; c < q; ++c)
      if ((*v)[c] != 0) lifted[complement[c]] += (*v)[c];
    std::vector<Vector> next = ideal.basis();
    next.push_back(lifted);
    cert.chain.push_back(Subspace::span(n, next));
  }

  if (complete) {
    cert.status = Tristate::Yes;
    cert.reason = "full flag of ideals with rational weights";
    return cert;
  }
  cert.chain.clear();
  if (auto w = non_real_witness(g)) {
    cert.status = Tristate::No;
    cert.reason = "ad(e" + std::to_string(w->basis_index + 1) + ") has the non-real factor " + w->factor.to_string();
    cert.witness = std::move(w);
    return cert;
  }
  cert.status = Tristate::Undetermined;
  cert.reason = "no rational common eigenvector and every basis adjoint has real spectrum";
  return cert;
}

std::optional<ComplementViolation> verify_nilpotent_complement(const LieAlgebra& g, const Subspace& v,
                                                               const Subspace& n) {
  const std::size_t dim = g.dim();
  if (v.ambient_dim() != dim || n.ambient_dim() != dim)
    return ComplementViolation{'a', "subspaces live in the wrong ambient dimension"};
  if (v.dim() + n.dim() != dim || (v + n).dim() != dim)
    return ComplementViolation{'a', "V and n do not form a direct sum equal to g"};
  if (!is_ideal(g, n)) return ComplementViolation{'b', "n is not an ideal"};
  if (!is_nilpotent_subalgebra(g, n)) return ComplementViolation{'c', "n is not nilpotent"};
  const Subspace whole = Subspace::whole(dim);
  if (!n.contains(bracket_span(g, whole, whole))) return ComplementViolation{'d', "n does not contain [g,g]"};
  for (const auto& a : v.basis()) {
    const Matrix s = jordan_chevalley(ad_matrix(g, a)).semisimple;
    for (const auto& b : v.basis())
      if (!is_zero(s * b))
        return ComplementViolation{'e', "ad(" + format_vector(a) + ")_s does not annihilate " + format_vector(b)};
  }
  return std::nullopt;
}

std::optional<std::size_t> nilradical_extension_hint(const LieAlgebra& g, const Subspace& n) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vector e = unit_vector(g.dim(), i);
    if (n.contains(e)) continue;
    std::vector<Vector> b = n.basis();
    b.push_back(e);
    Subspace ext = Subspace::span(g.dim(), b);
    if (is_ideal(g, ext) && is_nilpotent_subalgebra(g, ext)) return i;
  }
  return std::nullopt;
}

}  // namespace solvco
