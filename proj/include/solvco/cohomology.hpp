#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solvco/lie_algebra.hpp"
#include "solvco/matrix.hpp"

namespace solvco {

/// Strictly increasing set of generator indices, stored as a bit mask.
/// Bit i stands for e^{i+1}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  static MultiIndex from_indices(const std::vector<std::size_t>& zero_based);

  std::uint32_t mask() const noexcept { return mask_; }
  std::size_t degree() const noexcept;
  bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  std::vector<std::size_t> indices() const;

  /// `e13`, `e245`; with ambient dimension >= 10 the form `e{1,10}` is used.
  std::string to_string(std::size_t ambient_dim) const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator<(MultiIndex a, MultiIndex b);

 private:
  std::uint32_t mask_ = 0;
};

/// Basis of Lambda^k in canonical (lexicographic) order.
std::vector<MultiIndex> wedge_basis(std::size_t dim, std::size_t degree);

struct ComplexOptions {
  std::size_t max_dim = 12;
  /// Build d[0..max_degree] only; Betti numbers up to max_degree are exact.
  std::optional<std::size_t> max_degree;
  /// Skip the Jacobi check; d o d is still verified.
  bool skip_validation = false;
};

struct CEComplex {
  LieAlgebra algebra{1};
  std::vector<std::vector<MultiIndex>> bases;  // bases[k] spans Lambda^k
  std::vector<Matrix> d;                       // d[k] : Lambda^k -> Lambda^{k+1}
  std::size_t top_degree() const { return d.size() - 1; }
  bool truncated() const { return d.size() < algebra.dim() + 1; }
};

/// Differential matrices d[0..max_degree] without any checks.
std::vector<Matrix> raw_differentials(const LieAlgebra& g, std::size_t max_degree);

/// Throws DimensionTooLarge, AntisymmetryViolation, JacobiViolation.
CEComplex build_complex(const LieAlgebra& g, const ComplexOptions& options = {});

/// True when d[k+1] d[k] = 0 for every consecutive pair.
bool differential_squares_to_zero(const std::vector<Matrix>& d);

struct CohomologyResult {
  std::size_t dim = 0;
  std::vector<std::size_t> betti;  // b_0..b_top
  std::vector<std::vector<Vector>> representatives;
  bool truncated = false;
};

CohomologyResult betti_numbers(const CEComplex& cx, bool with_representatives = true);

/// Cocycle in the `a*e13 + b*e24` syntax.
std::string format_cochain(const Vector& coords, const std::vector<MultiIndex>& basis, std::size_t ambient_dim);

struct StructuralReport {
  bool complete = true;  // false when the Betti vector is truncated
  bool unimodular = false;
  bool duality_holds = false;
  bool duality_consistent = false;  // duality holds exactly when unimodular
  long euler_characteristic = 0;
  bool euler_zero = false;
  std::size_t b1 = 0;
  std::size_t derived_dim = 0;
  bool b1_matches = false;  // b1 = n - dim [g,g]
  bool solvable = false;
  bool nilpotent = false;
  std::size_t b1_lower_bound = 0;  // 1 for solvable, 2 for nilpotent
  bool b1_bound_ok = true;
  std::vector<std::string> notes;
  bool all_ok() const;
};

StructuralReport structural_checks(const CohomologyResult& res, const LieAlgebra& g);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace solvco
