#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvco/lie_algebra.hpp"
#include "solvco/matrix.hpp"

namespace solvco {

/// Interpretation of a derivation matrix Z: the one-parameter group is
/// exp(tZ) (One) or exp(t*pi*Z) (Pi).
enum class ZScale { One, Pi };

/// Lattice Z x| Z^n in R x|_phi R^n. B = phi(1) is the holonomy; Z the
/// derivation generating phi. Consistency of B and Z is the caller's claim.
struct HolonomyInput {
  std::size_t n = 0;
  std::optional<Matrix> b;
  std::optional<Matrix> z;
  ZScale scale = ZScale::One;
};

/// Throws InvalidHolonomy (B not an integer matrix of determinant +-1, shape
/// mismatch, or neither matrix given).
HolonomyInput make_holonomy_input(std::optional<Matrix> b, std::optional<Matrix> z = std::nullopt,
                                  ZScale scale = ZScale::One);

/// n + 1 - rank(B - I). Throws InvalidHolonomy without B.
std::size_t b1_lattice(const HolonomyInput& input);

enum class MostowStatus { Holds, Fails, Undetermined };
std::string to_string(MostowStatus s);

struct MostowResult {
  MostowStatus status = MostowStatus::Undetermined;
  std::string reason;
  /// For Fails: the exact certificate, e.g. the cyclotomic factor or the
  /// combination of eigenvalues equal to i.
  std::string witness;
};

MostowResult mostow_status(const HolonomyInput& input);

enum class CoverType { Torus, Nilmanifold, CompletelySolvable, Other };
std::string to_string(CoverType t);

struct TorusCover {
  unsigned m = 1;
  CoverType type = CoverType::Torus;
  LieAlgebra algebra{1};
};

/// Least m with B^m unipotent and the algebra of the m-fold cover. Throws
/// NotQuasiUnipotent when some eigenvalue of B is not a root of unity.
TorusCover torus_cover(const HolonomyInput& input);

/// Matrix of Lambda^k(m) on the wedge basis: entries are k x k minors.
Matrix exterior_power(const Matrix& m, std::size_t k);

/// dim of the fixed space of Lambda^k(1 (+) B^T) for k = 0..n+1. Throws
/// NotFiniteOrder unless B^m = I.
std::vector<std::size_t> invariant_betti(const HolonomyInput& input, unsigned m);

/// R x|_Z R^n: e1 = t and [e1, e_{1+j}] = sum_i Z(i, j) e_{1+i}.
LieAlgebra almost_abelian_algebra(const Matrix& z);

struct AlmostAbelianReport {
  std::optional<std::size_t> b1;
  MostowResult mostow;
  std::vector<std::pair<unsigned, unsigned>> cyclotomic;
  std::optional<unsigned> order_m;
  std::optional<CoverType> cover_type;
  std::optional<std::vector<std::size_t>> invariant_betti;
  /// Lie algebra of G when it is rational (from Z, or log B for unipotent B),
  /// with its CE Betti numbers.
  std::optional<LieAlgebra> algebra;
  std::optional<std::vector<std::size_t>> ce_betti;
  /// The CE numbers are the de Rham numbers of G/Gamma: exactly when Mostow holds.
  bool de_rham_valid = false;
};

AlmostAbelianReport analyze_almost_abelian(const HolonomyInput& input);

}  // namespace solvco
