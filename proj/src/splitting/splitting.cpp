#include "solvco/splitting.hpp"

#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"

namespace solvco {

SplittingInput make_splitting_input(const LieAlgebra& g, const Subspace& v, const Subspace& n) {
  require_valid(g);
  if (auto bad = verify_nilpotent_complement(g, v, n)) throw DecompositionInvalid(bad->clause, bad->message);
  return SplittingInput{g, v, n};
}

SplittingInput splitting_input_from_complement(const LieAlgebra& g, const std::vector<std::size_t>& complement) {
  std::vector<bool> in_v(g.dim(), false);
  for (auto i : complement) {
    if (i >= g.dim()) throw DimensionMismatch("complement index " + std::to_string(i + 1) + " out of range");
    if (in_v[i]) throw DimensionMismatch("complement index " + std::to_string(i + 1) + " repeated");
    in_v[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!in_v[i]) rest.push_back(i);
  return make_splitting_input(g, Subspace::coordinate(g.dim(), complement), Subspace::coordinate(g.dim(), rest));
}

std::string to_string(KillMode mode) {
  switch (mode) {
    case KillMode::Full: return "full";
    case KillMode::CompactOnly: return "compact";
    case KillMode::Selected: return "selected";
  }
  return "full";
}

Matrix KillMap::at(const Vector& x) const {
  const std::size_t n = v_coordinates.cols();
  Matrix k(n, n);
  const Vector coords = v_coordinates * x;
  for (std::size_t a = 0; a < operators.size(); ++a)
    if (coords[a] != 0) k += coords[a] * operators[a];
  return k;
}

bool KillMap::is_zero() const {
  for (const auto& k : operators)
    if (!k.is_zero()) return false;
  return true;
}

namespace {

Matrix v_coordinate_rows(const SplittingInput& input) {
  const std::size_t dim = input.g.dim(), k = input.v.dim();
  std::vector<Vector> cols = input.v.basis();
  cols.insert(cols.end(), input.n.basis().begin(), input.n.basis().end());
  const Matrix to_coords = inverse(Matrix::from_columns(dim, cols));
  Matrix rows(k, dim);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < dim; ++j) rows(a, j) = to_coords(a, j);
  return rows;
}

std::vector<Matrix> semisimple_parts(const SplittingInput& input) {
  std::vector<Matrix> out;
  for (const auto& a : input.v.basis()) out.push_back(jordan_chevalley(ad_matrix(input.g, a)).semisimple);
  return out;
}

void require_commuting(const std::vector<Matrix>& ops, const std::vector<Matrix>& semisimple,
                       const SplittingInput& input) {
  auto name = [](std::size_t i) { return "K_" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < semisimple.size(); ++i)
    for (std::size_t j = i + 1; j < semisimple.size(); ++j)
      if (!commutator(semisimple[i], semisimple[j]).is_zero())
        throw NonCommutingTorus("ad(A_" + std::to_string(i + 1) + ")_s and ad(A_" + std::to_string(j + 1) +
                                ")_s do not commute");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j)
      if (!commutator(ops[i], ops[j]).is_zero())
        throw NonCommutingTorus(name(i) + " and " + name(j) + " do not commute");
    for (std::size_t j = 0; j < semisimple.size(); ++j)
      if (!commutator(ops[i], semisimple[j]).is_zero())
        throw NonCommutingTorus(name(i) + " does not commute with ad(A_" + std::to_string(j + 1) + ")_s");
    for (std::size_t j = 0; j < input.v.dim(); ++j)
      if (!is_zero(ops[i] * input.v.basis()[j]))
        throw NonCommutingTorus(name(i) + " does not annihilate A_" + std::to_string(j + 1));
  }
}

std::vector<PrimaryComponent> compact_only(const SplitCompactParts& parts) {
  std::vector<PrimaryComponent> out;
  for (const auto& c : parts.components)
    if (c.compact) out.push_back(c);
  return out;
}

}  // namespace

std::vector<std::vector<PrimaryComponent>> compact_components(const SplittingInput& input) {
  std::vector<std::vector<PrimaryComponent>> out;
  for (const auto& s : semisimple_parts(input)) out.push_back(compact_only(split_compact_parts(s)));
  return out;
}

KillMap kill_map(const SplittingInput& input, KillMode mode, const std::vector<std::vector<std::size_t>>& selection) {
  KillMap km;
  km.mode = mode;
  km.semisimple = semisimple_parts(input);
  km.v_coordinates = v_coordinate_rows(input);
  const std::size_t dim = input.g.dim();
  if (mode == KillMode::Selected && selection.size() != km.semisimple.size())
    throw DimensionMismatch("selection needs one component list per complement vector");

  for (std::size_t i = 0; i < km.semisimple.size(); ++i) {
    const Matrix& s = km.semisimple[i];
    switch (mode) {
      case KillMode::Full:
        km.operators.push_back(s);
        break;
      case KillMode::CompactOnly:
        km.operators.push_back(split_compact_parts(s).compact);
        break;
      case KillMode::Selected: {
        const auto comps = compact_only(split_compact_parts(s));
        Matrix k(dim, dim);
        for (auto j : selection[i]) {
          if (j >= comps.size())
            throw DimensionMismatch("selected component " + std::to_string(j) + " does not exist for A_" +
                                    std::to_string(i + 1));
          k += comps[j].projector * (s - comps[j].real_part * Matrix::identity(dim));
        }
        km.operators.push_back(std::move(k));
        break;
      }
    }
  }
  require_commuting(km.operators, km.semisimple, input);
  return km;
}

namespace {

LieAlgebra modified_algebra(const LieAlgebra& g, const KillMap& kill) {
  const std::size_t n = g.dim();
  std::vector<Matrix> k_of;
  for (std::size_t i = 0; i < n; ++i) k_of.push_back(kill.at(unit_vector(n, i)));
  LieAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = g.bracket_basis(i, j);
      for (std::size_t r = 0; r < n; ++r) v[r] += k_of[j](r, i) - k_of[i](r, j);
      out.set_bracket(i, j, v);
    }
  return out;
}

}  // namespace

SplittingResult modified_bracket(const SplittingInput& input, const KillMap& kill) {
  const std::size_t n = input.g.dim();
  LieAlgebra out = modified_algebra(input.g, kill);
  if (auto v = validate(out))
    throw JacobiViolation("modified bracket is not a Lie algebra (invalid kill map): " + v->describe());
  if (kill.mode == KillMode::Full && !is_nilpotent(out))
    throw NotNilpotent("full kill did not produce a nilpotent algebra; check the V + n decomposition");
  if (kill.mode == KillMode::CompactOnly)
    for (const auto& a : input.v.basis()) {
      const Polynomial mp = minimal_polynomial(ad_matrix(out, a));
      if (!is_totally_real(mp))
        throw VerificationFailed("ad(" + format_vector(a) + ") keeps non-real spectrum after the compact kill: " +
                                 mp.to_string());
    }
  return SplittingResult{std::move(out), kill, Matrix::identity(n), std::nullopt};
}

SplittingResult malcev_splitting(const SplittingInput& input) {
  const KillMap kill = kill_map(input, KillMode::Full);
  const std::size_t n = input.g.dim(), k = kill.rank(), total = k + n;

  LieAlgebra m(total);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(total);
      for (std::size_t r = 0; r < n; ++r) v[k + r] = kill.operators[a](r, j);
      m.set_bracket(a, k + j, v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(total);
      const Vector b = input.g.bracket_basis(i, j);
      for (std::size_t r = 0; r < n; ++r) v[k + r] = b[r];
      m.set_bracket(k + i, k + j, v);
    }
  if (auto v = validate(m)) throw JacobiViolation("Malcev splitting is not a Lie algebra: " + v->describe());

  // phi(X) = (-X_V, X)
  Matrix phi(total, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < k; ++a) phi(a, j) = -kill.v_coordinates(a, j);
    phi(k + j, j) = 1;
  }
  std::vector<Vector> u_basis;
  for (std::size_t j = 0; j < n; ++j) u_basis.push_back(phi.column(j));
  const Subspace u(total, u_basis);
  for (std::size_t b = 0; b < total; ++b)
    for (const auto& x : u_basis)
      if (!u.contains(m.bracket(unit_vector(total, b), x)))
        throw VerificationFailed("embedded copy of g is not an ideal of the splitting");

  const LieAlgebra shadow = modified_bracket(input, kill).output;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.bracket(u_basis[i], u_basis[j]) != phi * shadow.bracket_basis(i, j))
        throw VerificationFailed("induced bracket on the embedded copy differs from the nilshadow");
  return SplittingResult{std::move(m), kill, std::move(phi), shadow};
}

}  // namespace solvco
