#include "solvco/cohomology.hpp"

#include <bit>
#include <future>
#include <sstream>

#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"
#include "solvco/linalg.hpp"

namespace solvco {

MultiIndex MultiIndex::from_indices(const std::vector<std::size_t>& zero_based) {
  std::uint32_t mask = 0;
  for (auto i : zero_based) {
    if (i >= 32) throw DimensionTooLarge("multi-index entry out of range");
    if (mask & (1u << i)) throw DimensionMismatch("multi-index entries must be distinct");
    mask |= 1u << i;
  }
  return MultiIndex(mask);
}

std::size_t MultiIndex::degree() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> MultiIndex::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MultiIndex::to_string(std::size_t ambient_dim) const {
  auto idx = indices();
  if (idx.empty()) return "1";
  std::string s = "e";
  if (ambient_dim >= 10) {
    s += "{";
    for (std::size_t t = 0; t < idx.size(); ++t) s += (t ? "," : "") + std::to_string(idx[t] + 1);
    return s + "}";
  }
  for (auto i : idx) s += std::to_string(i + 1);
  return s;
}

bool operator<(MultiIndex a, MultiIndex b) { return a.indices() < b.indices(); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<MultiIndex> wedge_basis(std::size_t dim, std::size_t degree) {
  std::vector<MultiIndex> out;
  if (degree > dim) return out;
  std::vector<std::size_t> idx(degree);
  for (std::size_t i = 0; i < degree; ++i) idx[i] = i;
  while (true) {
    out.push_back(MultiIndex::from_indices(idx));
    // next combination in lexicographic order
    std::size_t pos = degree;
    while (pos > 0 && idx[pos - 1] == dim - degree + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t t = pos; t < degree; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

namespace {

int count_below(std::uint32_t mask, std::size_t i) {
  return std::popcount(mask & ((1u << i) - 1u));
}

std::vector<std::uint32_t> position_table(const std::vector<MultiIndex>& basis, std::size_t dim) {
  std::vector<std::uint32_t> pos(std::size_t{1} << dim, 0);
  for (std::size_t t = 0; t < basis.size(); ++t) pos[basis[t].mask()] = static_cast<std::uint32_t>(t);
  return pos;
}

Matrix differential(const LieAlgebra& g, std::size_t k, const std::vector<MultiIndex>& src,
                    const std::vector<MultiIndex>& dst) {
  const std::size_t n = g.dim();
  Matrix d(dst.size(), src.size());
  if (dst.empty()) return d;
  const auto pos = position_table(dst, n);
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto idx = src[col].indices();
    for (std::size_t p = 0; p < k; ++p) {
      const std::size_t gen = idx[p];
      const std::uint32_t rest = src[col].mask() & ~(1u << gen);
      // d e^gen = -sum_{a<b} c(gen, a, b) e^{ab}; the 2-form commutes past
      // everything, so only the sorting signs of a and b into rest remain.
      for (std::size_t a = 0; a < n; ++a) {
        if (rest & (1u << a)) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (rest & (1u << b)) continue;
          const Rational& c = g.c(gen, a, b);
          if (c == 0) continue;
          const int parity = static_cast<int>(p) + count_below(rest, a) + count_below(rest, b);
          const std::uint32_t target = rest | (1u << a) | (1u << b);
          Rational& entry = d(pos[target], col);
          if (parity % 2 == 0)
            entry -= c;
          else
            entry += c;
        }
      }
    }
  }
  return d;
}

}  // namespace

std::vector<Matrix> raw_differentials(const LieAlgebra& g, std::size_t max_degree) {
  const std::size_t n = g.dim();
  if (n > 24) throw DimensionTooLarge("dimension " + std::to_string(n) + " exceeds the hard limit 24");
  std::vector<Matrix> d;
  for (std::size_t k = 0; k <= std::min(max_degree, n); ++k)
    d.push_back(differential(g, k, wedge_basis(n, k), wedge_basis(n, k + 1)));
  return d;
}

bool differential_squares_to_zero(const std::vector<Matrix>& d) {
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (!(d[k + 1] * d[k]).is_zero()) return false;
  return true;
}

CEComplex build_complex(const LieAlgebra& g, const ComplexOptions& options) {
  const std::size_t n = g.dim();
  if (n > options.max_dim)
    throw DimensionTooLarge("dimension " + std::to_string(n) + " exceeds the configured bound " +
                            std::to_string(options.max_dim));
  if (!options.skip_validation) require_valid(g);
  const std::size_t top = options.max_degree ? std::min(*options.max_degree, n) : n;
  CEComplex cx;
  cx.algebra = g;
  for (std::size_t k = 0; k <= top + 1 && k <= n; ++k) cx.bases.push_back(wedge_basis(n, k));
  cx.d = raw_differentials(g, top);
  if (!differential_squares_to_zero(cx.d)) throw JacobiViolation("d o d != 0: structure constants violate Jacobi");
  return cx;
}

namespace {

struct DegreeData {
  std::size_t rank = 0;
  std::vector<Vector> kernel;
};

// Normal form of v against an echelon set (rows with distinct pivots).
struct EchelonSet {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  Vector reduce(Vector v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& x = v[pivots[r]];
      if (x == 0) continue;
      const Rational f = x / rows[r][pivots[r]];
      for (std::size_t t = 0; t < v.size(); ++t)
        if (rows[r][t] != 0) v[t] -= f * rows[r][t];
    }
    return v;
  }

  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

CohomologyResult betti_numbers(const CEComplex& cx, bool with_representatives) {
  const std::size_t n = cx.algebra.dim();
  const std::size_t top = cx.top_degree();
  CohomologyResult res;
  res.dim = n;
  res.truncated = cx.truncated();

  // Per-degree eliminations are independent.
  std::vector<std::future<DegreeData>> jobs;
  for (std::size_t k = 0; k <= top; ++k) {
    jobs.push_back(std::async(std::launch::async, [&cx, k, with_representatives] {
      DegreeData dd;
      if (with_representatives) {
        RankKernel rk = rank_and_kernel(cx.d[k]);
        dd.rank = rk.rank;
        dd.kernel = std::move(rk.kernel_basis);
      } else {
        dd.rank = rank(cx.d[k]);
      }
      return dd;
    }));
  }
  std::vector<DegreeData> data;
  for (auto& j : jobs) data.push_back(j.get());

  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t cochains = binomial(n, k);
    const std::size_t boundary_rank = k ? data[k - 1].rank : 0;
    res.betti.push_back(cochains - data[k].rank - boundary_rank);
    if (!with_representatives) continue;

    EchelonSet boundaries;
    if (k > 0) {
      RowEchelon img = row_echelon(cx.d[k - 1].transpose());
      for (std::size_t r = 0; r < img.pivots.size(); ++r) {
        boundaries.rows.push_back(img.reduced.row(r));
        boundaries.pivots.push_back(img.pivots[r]);
      }
    }
    EchelonSet combined = boundaries;
    std::vector<Vector> reps;
    for (const auto& z : data[k].kernel) {
      if (!combined.insert(z)) continue;
      reps.push_back(boundaries.reduce(z));
    }
    if (reps.size() != res.betti.back())
      throw VerificationFailed("representative count disagrees with the Betti number in degree " +
                               std::to_string(k));
    res.representatives.push_back(std::move(reps));
  }
  return res;
}

std::string format_cochain(const Vector& coords, const std::vector<MultiIndex>& basis, std::size_t ambient_dim) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (coords[t] == 0) continue;
    const Rational mag = abs(coords[t]);
    if (first)
      os << (coords[t] < 0 ? "-" : "");
    else
      os << (coords[t] < 0 ? " - " : " + ");
    first = false;
    const std::string mono = basis[t].to_string(ambient_dim);
    if (mag != 1)
      os << to_string(mag) << "*" << mono;
    else
      os << mono;
  }
  return first ? "0" : os.str();
}

bool StructuralReport::all_ok() const {
  return duality_consistent && euler_zero && b1_matches && b1_bound_ok;
}

StructuralReport structural_checks(const CohomologyResult& res, const LieAlgebra& g) {
  StructuralReport r;
  const std::size_t n = g.dim();
  r.complete = !res.truncated && res.betti.size() == n + 1;
  r.unimodular = is_unimodular(g);
  r.solvable = is_solvable(g);
  r.nilpotent = is_nilpotent(g);
  const Subspace whole = Subspace::whole(n);
  r.derived_dim = bracket_span(g, whole, whole).dim();
  r.b1 = res.betti.size() > 1 ? res.betti[1] : 0;
  r.b1_matches = res.betti.size() < 2 || r.b1 == n - r.derived_dim;
  if (r.nilpotent)
    r.b1_lower_bound = n >= 2 ? 2 : 1;
  else if (r.solvable)
    r.b1_lower_bound = 1;
  r.b1_bound_ok = res.betti.size() < 2 || r.b1 >= r.b1_lower_bound;

  if (!r.complete) {
    r.duality_holds = r.duality_consistent = r.euler_zero = true;
    r.notes.push_back("truncated complex: duality and Euler characteristic not checked");
    return r;
  }
  r.duality_holds = true;
  for (std::size_t k = 0; k <= n; ++k)
    if (res.betti[k] != res.betti[n - k]) r.duality_holds = false;
  r.duality_consistent = (r.duality_holds == r.unimodular);
  long chi = 0;
  for (std::size_t k = 0; k <= n; ++k) chi += (k % 2 ? -1L : 1L) * static_cast<long>(res.betti[k]);
  r.euler_characteristic = chi;
  r.euler_zero = (chi == 0);
  if (!r.unimodular) r.notes.push_back("not unimodular: duality is not expected and the algebra admits no lattice");
  if (!r.duality_consistent) r.notes.push_back("duality flag disagrees with unimodularity");
  return r;
}

}  // namespace solvco
