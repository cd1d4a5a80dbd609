#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvco/lie_algebra.hpp"
#include "solvco/linalg.hpp"

namespace solvco {

/// g = V (+) n with n a nilpotent ideal containing [g,g] and ad(A)_s(B) = 0 on V.
struct SplittingInput {
  LieAlgebra g{1};
  Subspace v;  // basis A_1..A_k
  Subspace n;
};

/// Verifies the decomposition; throws DecompositionInvalid with the failing clause.
SplittingInput make_splitting_input(const LieAlgebra& g, const Subspace& v, const Subspace& n);

/// V = span of the listed basis vectors (0-based), n = span of the others.
SplittingInput splitting_input_from_complement(const LieAlgebra& g, const std::vector<std::size_t>& complement);

enum class KillMode { Full, CompactOnly, Selected };
std::string to_string(KillMode mode);

struct KillMap {
  KillMode mode = KillMode::Full;
  std::vector<Matrix> operators;   // K_i, one per basis vector A_i of V
  std::vector<Matrix> semisimple;  // ad(A_i)_s
  /// Row a gives the A_a-coordinate of a vector of g in the splitting g = V (+) n.
  Matrix v_coordinates;

  std::size_t rank() const { return operators.size(); }
  /// K(x) = sum_a x_a K_a with x_a the V-coordinates of x.
  Matrix at(const Vector& x) const;
  bool is_zero() const;
};

/// Compact primary components of ad(A_i)_s, in the order used by Selected mode.
/// Throws NotRationallySplittable.
std::vector<std::vector<PrimaryComponent>> compact_components(const SplittingInput& input);

/// Builds K for the chosen mode. For Selected, `selection[i]` lists indices
/// into compact_components(input)[i]; for other modes it is ignored.
/// Throws NotRationallySplittable, NonCommutingTorus.
KillMap kill_map(const SplittingInput& input, KillMode mode,
                 const std::vector<std::vector<std::size_t>>& selection = {});

struct SplittingResult {
  LieAlgebra output{1};
  KillMap kill;
  /// Columns are the images of e_1..e_n in the output's coordinates: the
  /// identity for modified brackets, X -> (-X_V, X) for the Malcev splitting.
  Matrix identification;
  /// Induced bracket on the embedded copy of g (Malcev splitting only).
  std::optional<LieAlgebra> nilshadow;
};

/// [X,Y]_new = [X,Y] - K(X)Y + K(Y)X on the vector space of g. Full mode gives
/// the nilshadow (checked nilpotent, else NotNilpotent); CompactOnly gives the
/// algebra with the compact torus action removed (checked to have real
/// V-adjoint spectra, else VerificationFailed). Throws JacobiViolation if the
/// kill map does not produce a Lie algebra.
SplittingResult modified_bracket(const SplittingInput& input, const KillMap& kill);

/// The algebra on V (+) g with [(A,X),(B,Y)] = (0, [X,Y] + K(A)Y - K(B)X),
/// K from the Full kill map. Verifies that {(-X_V, X)} is an ideal whose
/// induced bracket is the nilshadow, and that the nilshadow is nilpotent.
SplittingResult malcev_splitting(const SplittingInput& input);

}  // namespace solvco
