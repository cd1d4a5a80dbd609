#pragma once

#include <string>
#include <vector>

#include "solvco/lie_algebra.hpp"

namespace solvco {

enum class Classification { Nilpotent, CompletelySolvable, Solvable };
std::string to_string(Classification c);

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra{1};
  /// Nilpotent wins over CompletelySolvable; Solvable means neither.
  Classification classification = Classification::Solvable;
  /// Suggested V: 0-based basis indices; n is spanned by the rest.
  std::vector<std::size_t> complement;
  std::string notes;
};

/// abelian1..abelian12, then the named examples alphabetically.
std::vector<std::string> catalog_names();

/// Throws UnknownName. The classification and decomposition are recomputed
/// on every call; a mismatch throws VerificationFailed.
CatalogEntry catalog_get(const std::string& name);

/// Recomputes the classification from the series and the rational flag.
Classification classify(const LieAlgebra& g);

}  // namespace solvco
