#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvco/lie_algebra.hpp"
#include "solvco/linalg.hpp"
#include "solvco/polynomial.hpp"

namespace solvco {

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  // 0-based indices; for Antisymmetry (k, i, j) with l unused.
  std::size_t i = 0, j = 0, k = 0, l = 0;
  Rational residual;
  std::string describe() const;
};

/// First antisymmetry or Jacobi violation, or nullopt when g is a Lie algebra.
std::optional<Violation> validate(const LieAlgebra& g);

/// Throws AntisymmetryViolation / JacobiViolation.
void require_valid(const LieAlgebra& g);

/// Matrix of y -> [x, y].
Matrix ad_matrix(const LieAlgebra& g, const Vector& x);
Matrix ad_matrix(const LieAlgebra& g, std::size_t basis_index);

/// span{[u, w] : u in U, w in W}
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w);

/// g, [g,g], [[g,g],[g,g]], ... until the term repeats or reaches 0.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g, [g,g], [g,[g,g]], ... until the term repeats or reaches 0.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// Lower central series of the subalgebra s reaches 0.
bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

bool is_unimodular(const LieAlgebra& g);

enum class Tristate { Yes, No, Undetermined };
std::string to_string(Tristate t);

struct FlagWitness {
  std::size_t basis_index;
  Polynomial factor;
};

struct FlagCertificate {
  Tristate status = Tristate::Undetermined;
  /// For Yes: ideals of dimension 0, 1, ..., n.
  std::vector<Subspace> chain;
  std::optional<FlagWitness> witness;
  std::string reason;
};

/// Tries to build a full flag of ideals with rational weights. Throws
/// NotSolvable.
FlagCertificate completely_solvable_flag(const LieAlgebra& g);

struct ComplementViolation {
  char clause;  // 'a'..'e'
  std::string message;
};

/// Checks g = V (+) n, n a nilpotent ideal containing [g,g], and
/// ad(A)_s(B) = 0 for A, B in the basis of V.
std::optional<ComplementViolation> verify_nilpotent_complement(const LieAlgebra& g, const Subspace& v,
                                                               const Subspace& n);

/// Heuristic only: returns a basis index i such that n + span{e_i} is still a
/// nilpotent ideal, proving n is not the nilradical. nullopt does not prove
/// maximality.
std::optional<std::size_t> nilradical_extension_hint(const LieAlgebra& g, const Subspace& n);

}  // namespace solvco
