#include "solvco/almost_abelian.hpp"

#include <numeric>

#include "solvco/cohomology.hpp"
#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"
#include "solvco/linalg.hpp"
#include "solvco/polynomial.hpp"

namespace solvco {

HolonomyInput make_holonomy_input(std::optional<Matrix> b, std::optional<Matrix> z, ZScale scale) {
  if (!b && !z) throw InvalidHolonomy("need a holonomy matrix or a derivation");
  HolonomyInput in;
  if (b) {
    if (!b->is_square() || b->rows() == 0) throw InvalidHolonomy("holonomy must be a non-empty square matrix");
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j)
        if (!is_integer((*b)(i, j))) throw InvalidHolonomy("holonomy entries must be integers");
    const Rational det = determinant(*b);
    if (det != 1 && det != -1) throw InvalidHolonomy("holonomy determinant is " + to_string(det) + ", not +-1");
    in.n = b->rows();
  }
  if (z) {
    if (!z->is_square() || z->rows() == 0) throw InvalidHolonomy("derivation must be a non-empty square matrix");
    if (b && z->rows() != in.n) throw InvalidHolonomy("holonomy and derivation sizes differ");
    in.n = z->rows();
  }
  in.b = std::move(b);
  in.z = std::move(z);
  in.scale = scale;
  return in;
}

namespace {

const Matrix& require_b(const HolonomyInput& in) {
  if (!in.b) throw InvalidHolonomy("this operation needs the holonomy matrix B");
  return *in.b;
}

bool is_rational_square(const Rational& r, Rational& root) {
  if (r < 0) return false;
  const Integer num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  const Integer sn = sqrt(num), sd = sqrt(den);
  root = Rational(sn, sd);
  root.canonicalize();
  return true;
}

std::string cyclotomic_list(const std::vector<std::pair<unsigned, unsigned>>& f) {
  std::string s;
  for (const auto& [d, mult] : f) {
    if (!s.empty()) s += ", ";
    s += "Phi_" + std::to_string(d);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s.empty() ? "none" : s;
}

// Layer 2: decide i in Q-span of the eigenvalues of the rational matrix Z.
MostowResult decide_pi_scaled(const Matrix& z) {
  const Polynomial cp = squarefree_part(characteristic_polynomial(z));
  const LowDegreeFactorization lf = low_degree_factors(cp);
  for (const auto& q : lf.quadratics) {
    const Rational b = q.coefficient(1), c = q.coefficient(0);
    const Rational disc = b * b - 4 * c;
    Rational root;
    if (disc < 0 && is_rational_square(-disc, root)) {
      // nu = -b/2 + i*root/2, so nu - conj(nu) = i*root
      const Rational re = -b / 2, im = root / 2;
      std::string nu = re == 0 ? "" : to_string(re) + " + ";
      nu += (im == 1 ? std::string() : to_string(im) + "*") + "i";
      const std::string combo =
          re == 0 ? (im == 1 ? "nu" : "nu/" + to_string(im)) : "(nu - conj(nu))/" + to_string(root);
      MostowResult r;
      r.status = MostowStatus::Fails;
      r.witness = "nu = " + nu + " (root of " + q.to_string() + "), i = " + combo;
      r.reason = "i*pi is a rational combination of eigenvalues of pi*Z: " + r.witness;
      return r;
    }
  }
  if (lf.rest.degree() > 0)
    return {MostowStatus::Undetermined,
            "derivation has an irreducible factor of degree >= 3 (" + lf.rest.to_string() + ")", ""};
  return {MostowStatus::Holds,
          "every eigenvalue of Z is rational or quadratic with -disc not a square; i is not in their span", ""};
}

// Layer 3: holonomy only.
MostowResult decide_from_holonomy(const Matrix& b) {
  const Polynomial cp = characteristic_polynomial(b);
  for (const auto& [d, mult] : cyclotomic_factors(cp))
    if (d >= 2) {
      MostowResult r;
      r.status = MostowStatus::Fails;
      r.witness = "Phi_" + std::to_string(d) + " = " + cyclotomic_polynomial(d).to_string();
      r.reason = d == 2 ? "holonomy has eigenvalue -1 (cyclotomic factor " + r.witness + ")"
                        : "holonomy has a non-real root of unity (cyclotomic factor " + r.witness + ")";
      return r;
    }
  const Polynomial sf = squarefree_part(cp);
  if (sturm_real_root_count(sf, Interval::negative()) > 0) {
    MostowResult r;
    r.status = MostowStatus::Fails;
    r.witness = "negative real root of " + cp.to_string();
    r.reason = "holonomy has a negative real eigenvalue: " + r.witness;
    return r;
  }
  if (is_totally_real(sf))
    return {MostowStatus::Holds, "holonomy spectrum is real and positive (" + cp.to_string() + ")", ""};
  return {MostowStatus::Undetermined,
          "holonomy has non-real eigenvalues that are not roots of unity; multiplicative relations not decided", ""};
}

Matrix one_plus_transpose(const Matrix& b) {
  return Matrix::direct_sum(Matrix::identity(1), b.transpose());
}

}  // namespace

std::size_t b1_lattice(const HolonomyInput& input) {
  const Matrix& b = require_b(input);
  return input.n + 1 - rank(b - Matrix::identity(input.n));
}

std::string to_string(MostowStatus s) {
  switch (s) {
    case MostowStatus::Holds: return "holds";
    case MostowStatus::Fails: return "fails";
    case MostowStatus::Undetermined: return "undetermined";
  }
  return "undetermined";
}

MostowResult mostow_status(const HolonomyInput& input) {
  if (input.z && input.scale == ZScale::One)
    return {MostowStatus::Holds,
            "rational Z has algebraic eigenvalues; no rational combination of them is the transcendental i*pi", ""};
  if (input.z) {
    MostowResult r = decide_pi_scaled(*input.z);
    if (r.status != MostowStatus::Undetermined || !input.b) return r;
    MostowResult fallback = decide_from_holonomy(*input.b);
    fallback.reason += "; derivation test: " + r.reason;
    return fallback;
  }
  return decide_from_holonomy(require_b(input));
}

std::string to_string(CoverType t) {
  switch (t) {
    case CoverType::Torus: return "torus";
    case CoverType::Nilmanifold: return "nilmanifold";
    case CoverType::CompletelySolvable: return "completely-solvable";
    case CoverType::Other: return "other";
  }
  return "other";
}

TorusCover torus_cover(const HolonomyInput& input) {
  const Matrix& b = require_b(input);
  const auto factors = cyclotomic_factors(characteristic_polynomial(b));
  unsigned covered = 0, m = 1;
  for (const auto& [d, mult] : factors) {
    covered += euler_totient(d) * mult;
    m = std::lcm(m, d);
  }
  if (covered != input.n)
    throw NotQuasiUnipotent("holonomy eigenvalues are not all roots of unity (cyclotomic part " +
                            cyclotomic_list(factors) + ")");
  const Matrix bm = b.pow(m);
  const Matrix id = Matrix::identity(input.n);
  if (!is_nilpotent(bm - id)) throw VerificationFailed("B^" + std::to_string(m) + " is not unipotent");
  if (bm == id) return TorusCover{m, CoverType::Torus, LieAlgebra(input.n + 1)};
  return TorusCover{m, CoverType::Nilmanifold, almost_abelian_algebra(log_unipotent(bm))};
}

Matrix exterior_power(const Matrix& m, std::size_t k) {
  if (!m.is_square()) throw DimensionMismatch("exterior power of a non-square matrix");
  const std::size_t n = m.rows();
  const auto basis = wedge_basis(n, k);
  Matrix out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto rows = basis[r].indices();
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto cols = basis[c].indices();
      Matrix minor(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rows[a], cols[b]);
      out(r, c) = k == 0 ? Rational(1) : determinant(minor);
    }
  }
  return out;
}

std::vector<std::size_t> invariant_betti(const HolonomyInput& input, unsigned m) {
  const Matrix& b = require_b(input);
  if (m == 0 || b.pow(m) != Matrix::identity(input.n))
    throw NotFiniteOrder("B^" + std::to_string(m) + " is not the identity");
  const Matrix act = one_plus_transpose(b);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= input.n + 1; ++k) {
    const Matrix lk = exterior_power(act, k);
    out.push_back(lk.rows() - rank(lk - Matrix::identity(lk.rows())));
  }
  return out;
}

LieAlgebra almost_abelian_algebra(const Matrix& z) {
  if (!z.is_square()) throw DimensionMismatch("derivation must be square");
  const std::size_t n = z.rows();
  LieAlgebra g(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    Vector v(n + 1);
    for (std::size_t i = 0; i < n; ++i) v[1 + i] = z(i, j);
    g.set_bracket(0, 1 + j, v);
  }
  return g;
}

AlmostAbelianReport analyze_almost_abelian(const HolonomyInput& input) {
  AlmostAbelianReport rep;
  rep.mostow = mostow_status(input);
  if (input.b) {
    const Matrix& b = *input.b;
    rep.b1 = b1_lattice(input);
    const Polynomial cp = characteristic_polynomial(b);
    rep.cyclotomic = cyclotomic_factors(cp);
    try {
      const TorusCover cover = torus_cover(input);
      rep.order_m = cover.m;
      rep.cover_type = cover.type;
      if (cover.type == CoverType::Torus) rep.invariant_betti = invariant_betti(input, cover.m);
    } catch (const NotQuasiUnipotent&) {
      const Polynomial sf = squarefree_part(cp);
      const bool real_positive = is_totally_real(sf) && sturm_real_root_count(sf, Interval::negative()) == 0;
      rep.cover_type = real_positive ? CoverType::CompletelySolvable : CoverType::Other;
    }
    if (!input.z && is_nilpotent(b - Matrix::identity(input.n)))
      rep.algebra = almost_abelian_algebra(log_unipotent(b));
  }
  if (input.z) rep.algebra = almost_abelian_algebra(*input.z);
  if (rep.algebra) {
    rep.ce_betti = betti_numbers(build_complex(*rep.algebra, {.max_dim = 24}), false).betti;
    rep.de_rham_valid = rep.mostow.status == MostowStatus::Holds;
  }
  return rep;
}

}  // namespace solvco
