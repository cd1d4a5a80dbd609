#include "solvco/catalog.hpp"

#include <algorithm>
#include <map>

#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"
#include "solvco/splitting.hpp"
#include "solvco/structure_file.hpp"

namespace solvco {

namespace {

struct Source {
  const char* text;
  Classification classification;
  std::vector<std::size_t> complement;
  const char* notes;
};

const std::map<std::string, Source>& named_sources() {
  static const std::map<std::string, Source> sources{
      {"heisenberg3",
       {"dim 3\n"
        "d e3 = -e1^e2\n",
        Classification::Nilpotent,
        {},
        "[e1, e2] = e3"}},
      {"nakamura",
       {"dim 6\n"
        "d e3 = -e1^e3 + e2^e4\n"
        "d e4 = -e1^e4 - e2^e3\n"
        "d e5 = e1^e5 - e2^e6\n"
        "d e6 = e1^e6 + e2^e5\n",
        Classification::Solvable,
        {0, 1},
        "complex parallelizable; e1, e2 act on e3..e6 through exp(z) and exp(-z) with z = x1 + i x2"}},
      {"nakamura_tilde",
       {"dim 6\n"
        "d e3 = -e1^e3\n"
        "d e4 = -e1^e4\n"
        "d e5 = e1^e5\n"
        "d e6 = e1^e6\n",
        Classification::CompletelySolvable,
        {0, 1},
        "nakamura with the rotation by x2 removed (compact kill on V = span{e1, e2}); "
        "cross-checked against the left-invariant forms of the group with diagonal "
        "action exp(-x1), exp(-x1), exp(x1), exp(x1)"}},
      {"hyperelliptic4",
       {"dim 4\n"
        "d e1 = e2^e4\n"
        "d e2 = -e1^e4\n",
        Classification::Solvable,
        {3},
        "e4 rotates span{e1, e2}; H^1 is spanned by e3, e4"}},
      {"rot3",
       {"dim 3\n"
        "d e2 = e1^e3\n"
        "d e3 = -e1^e2\n",
        Classification::Solvable,
        {0},
        "rotation of the plane; the angular speed 2*pi is absorbed into e1 "
        "(rescaling a basis vector leaves Betti numbers unchanged)"}},
      {"sol3",
       {"dim 3\n"
        "d e2 = e1^e2\n"
        "d e3 = -e1^e3\n",
        Classification::CompletelySolvable,
        {0},
        "from the holonomy [[2,1],[1,1]] with eigenvalues l, 1/l; its logarithm "
        "diag(log l, -log l) is rescaled to diag(1, -1)"}},
  };
  return sources;
}

constexpr std::size_t kMaxAbelian = 12;

bool parse_abelian(const std::string& name, std::size_t& n) {
  if (name.rfind("abelian", 0) != 0) return false;
  const std::string digits = name.substr(7);
  if (digits.empty() || digits.size() > 2 || digits.front() == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  n = std::stoul(digits);
  return n >= 1 && n <= kMaxAbelian;
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Nilpotent: return "nilpotent";
    case Classification::CompletelySolvable: return "completely-solvable";
    case Classification::Solvable: return "solvable";
  }
  return "solvable";
}

Classification classify(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvable("algebra is not solvable");
  if (is_nilpotent(g)) return Classification::Nilpotent;
  if (completely_solvable_flag(g).status == Tristate::Yes) return Classification::CompletelySolvable;
  return Classification::Solvable;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= kMaxAbelian; ++n) names.push_back("abelian" + std::to_string(n));
  for (const auto& [name, src] : named_sources()) names.push_back(name);  // std::map: sorted
  return names;
}

CatalogEntry catalog_get(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  std::size_t n = 0;
  if (parse_abelian(name, n)) {
    e.algebra = LieAlgebra(n);
    e.classification = Classification::Nilpotent;
    e.notes = "abelian R^" + std::to_string(n);
  } else {
    const auto& sources = named_sources();
    const auto it = sources.find(name);
    if (it == sources.end()) throw UnknownName("no catalog entry named '" + name + "'");
    e.algebra = parse_structure_file(it->second.text);
    e.classification = it->second.classification;
    e.complement = it->second.complement;
    e.notes = it->second.notes;
  }

  const Classification actual = classify(e.algebra);
  if (actual != e.classification)
    throw VerificationFailed("catalog entry " + name + " is declared " + to_string(e.classification) +
                             " but computes as " + to_string(actual));
  try {
    splitting_input_from_complement(e.algebra, e.complement);
  } catch (const DecompositionInvalid& ex) {
    throw VerificationFailed("catalog entry " + name + ": suggested decomposition fails: " + ex.what());
  }
  return e;
}

}  // namespace solvco
