#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "solvco/errors.hpp"
#include "solvco/linalg.hpp"
#include "solvco/polynomial.hpp"
#include "support/support.hpp"

using namespace solvco;
using solvco::testing::Gen;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::vector<long> entries) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entries[i * c + j];
  return m;
}

Polynomial poly(std::vector<long> low_first) {
  std::vector<Rational> c(low_first.begin(), low_first.end());
  return Polynomial(c);
}

// Leibniz expansion; independent of the elimination code.
Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rsel(r), csel(c);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
      do {
        Matrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (csel[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        if (leibniz_det(sub) != 0) return k;
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("rationals are canonical and parse strictly") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("6/4").get_num() == 3);
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+2/3") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK_THROWS_AS(parse_rational("3/-4"), InputError);
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  }

  TEST_CASE("rank_and_kernel examples") {
    auto id = rank_and_kernel(Matrix::identity(2));
    CHECK(id.rank == 2);
    CHECK(id.kernel_basis.empty());

    auto z = rank_and_kernel(Matrix(3, 3));
    CHECK(z.rank == 0);
    REQUIRE(z.kernel_basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(z.kernel_basis[i] == unit_vector(3, i));

    auto ones = rank_and_kernel(mat(2, 2, {1, 1, 1, 1}));
    CHECK(ones.rank == 1);
    REQUIRE(ones.kernel_basis.size() == 1);
    const Vector& k = ones.kernel_basis[0];
    CHECK(k[0] == -k[1]);
    CHECK(k[0] != 0);
  }

  TEST_CASE("rank agrees with the minor oracle") {
    Gen gen(11);
    for (int t = 0; t < 250; ++t) {
      const auto r = static_cast<std::size_t>(gen.integer(1, 4));
      const auto c = static_cast<std::size_t>(gen.integer(1, 4));
      Matrix m = gen.matrix(r, c, 2, 0.5);
      if (gen.coin(0.3) && r > 1)  // force dependent rows
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
      const RankKernel rk = rank_and_kernel(m);
      CHECK(rk.rank == minor_rank(m));
      CHECK(rk.rank + rk.kernel_basis.size() == c);
      for (const auto& v : rk.kernel_basis) CHECK(is_zero(m * v));
      if (!rk.kernel_basis.empty())
        CHECK(rank(Matrix::from_columns(c, rk.kernel_basis)) == rk.kernel_basis.size());
      if (r == c) CHECK(determinant(m) == leibniz_det(m));
    }
  }

  TEST_CASE("inverse and singular matrices") {
    Matrix m = mat(2, 2, {2, 1, 1, 1});
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), SingularMatrix);
  }

  TEST_CASE("polynomial arithmetic") {
    Polynomial p = poly({1, -3, 1});
    CHECK(p.to_string() == "x^2 - 3*x + 1");
    CHECK(p.degree() == 2);
    auto [q, r] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
    CHECK(q == poly({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
    CHECK(squarefree_part(poly({0, 0, 1, 1})) == poly({0, 1, 1}));
    CHECK(!is_squarefree(poly({0, 0, 1})));
    Bezout b = extended_gcd(poly({1, 0, 1}), poly({-1, 1}));
    CHECK(b.s * poly({1, 0, 1}) + b.t * poly({-1, 1}) == b.g);
    CHECK(b.g == Polynomial::constant(1));
  }

  TEST_CASE("minimal polynomial examples") {
    CHECK(minimal_polynomial(Matrix::identity(3)) == poly({-1, 1}));
    CHECK(minimal_polynomial(mat(2, 2, {0, 1, 0, 0})) == poly({0, 0, 1}));
    CHECK(minimal_polynomial(mat(2, 2, {0, 2, -2, 0})) == poly({4, 0, 1}));
    CHECK(minimal_polynomial(mat(3, 3, {2, 1, 0, 0, 2, 0, 0, 0, 3})) == poly({-2, 1}) * poly({-2, 1}) * poly({-3, 1}));
  }

  TEST_CASE("minimal polynomial annihilates and divides the characteristic polynomial") {
    Gen gen(12);
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 5));
      Matrix m = gen.coin() ? gen.structured(n) : gen.matrix(n, n);
      Polynomial mp = minimal_polynomial(m), cp = characteristic_polynomial(m);
      CHECK(evaluate(mp, m).is_zero());
      CHECK(evaluate(cp, m).is_zero());
      CHECK((cp % mp).is_zero());
      CHECK(mp.leading() == 1);
      // no proper divisor of lower degree built from dropping one factor works
      for (const auto& r : rational_roots(mp)) CHECK(!evaluate(mp / Polynomial::linear_root(r), m).is_zero());
    }
  }

  TEST_CASE("Sturm counts") {
    CHECK(sturm_real_root_count(poly({1, -3, 1}), Interval::real_line()) == 2);
    CHECK(sturm_real_root_count(poly({1, 0, 1}), Interval::real_line()) == 0);
    CHECK(sturm_real_root_count(poly({1, -3, 1}), Interval::positive()) == 2);
    CHECK(sturm_real_root_count(poly({1, -3, 1}), Interval::negative()) == 0);
    // open interval: endpoint roots excluded
    CHECK(sturm_real_root_count(poly({0, -1, 1}), Interval::positive()) == 1);
    CHECK(sturm_real_root_count(poly({0, -1, 1}), Interval{Rational(0), Rational(1)}) == 0);
    CHECK(sturm_real_root_count(poly({-2, 0, 1}), Interval{Rational(1), Rational(2)}) == 1);
    CHECK(is_totally_real(poly({-1, -1, 1}) * poly({-2, 0, 1})));
    CHECK(!is_totally_real(poly({1, 1, 1})));
  }

  TEST_CASE("Sturm count matches products of known linear factors") {
    Gen gen(13);
    for (int t = 0; t < 200; ++t) {
      Polynomial p = Polynomial::constant(1);
      std::vector<Rational> roots;
      const long nroots = gen.integer(0, 4);
      for (long i = 0; i < nroots; ++i) {
        Rational r = gen.rational(4);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        roots.push_back(r);
        p = p * Polynomial::linear_root(r);
      }
      const long complex_pairs = gen.integer(0, 1);
      for (long i = 0; i < complex_pairs; ++i) p = p * poly({gen.integer(1, 5), 0, 1});
      const Rational lo = gen.rational(3);
      const long expect_pos = std::count_if(roots.begin(), roots.end(), [](const Rational& r) { return r > 0; });
      const long expect_above = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > lo; });
      CHECK(sturm_real_root_count(p, Interval::real_line()) == static_cast<int>(roots.size()));
      CHECK(sturm_real_root_count(p, Interval::positive()) == expect_pos);
      CHECK(sturm_real_root_count(p, Interval{lo, std::nullopt}) == expect_above);
      auto rr = rational_roots(p);
      std::sort(roots.begin(), roots.end());
      CHECK(rr == roots);
    }
  }

  TEST_CASE("low-degree factorization") {
    auto f = low_degree_factors(poly({0, 1}) * poly({1, 0, 1}) * poly({5, -2, 1}) * poly({-2, 0, 0, 1}));
    CHECK(f.roots == std::vector<Rational>{0});
    CHECK(f.quadratics.size() == 2);
    CHECK(f.rest == poly({-2, 0, 0, 1}));
  }

  TEST_CASE("Jordan-Chevalley examples") {
    Matrix rot = mat(2, 2, {0, 2, -2, 0});
    auto jc = jordan_chevalley(rot);
    CHECK(jc.semisimple == rot);
    CHECK(jc.nilpotent.is_zero());

    jc = jordan_chevalley(mat(2, 2, {1, 1, 0, 1}));
    CHECK(jc.semisimple == Matrix::identity(2));
    CHECK(jc.nilpotent == mat(2, 2, {0, 1, 0, 0}));

    jc = jordan_chevalley(mat(3, 3, {2, 1, 0, 0, 2, 0, 0, 0, 3}));
    CHECK(jc.semisimple == mat(3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 3}));
    CHECK(jc.nilpotent == mat(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0}));
  }

  TEST_CASE("Jordan-Chevalley invariants on random matrices") {
    Gen gen(14);
    for (int t = 0; t < 250; ++t) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 5));
      Matrix m = gen.coin(0.7) ? gen.structured(n) : gen.matrix(n, n, 2);
      auto jc = jordan_chevalley(m);
      CHECK(jc.semisimple + jc.nilpotent == m);
      CHECK(commute(jc.semisimple, jc.nilpotent));
      CHECK(jc.nilpotent.pow(static_cast<unsigned>(n)).is_zero());
      CHECK(is_squarefree(minimal_polynomial(jc.semisimple)));
    }
  }

  TEST_CASE("split/compact examples") {
    auto sc = split_compact_parts(mat(2, 2, {0, 2, -2, 0}));
    CHECK(sc.split.is_zero());
    CHECK(sc.compact == mat(2, 2, {0, 2, -2, 0}));

    sc = split_compact_parts(mat(2, 2, {1, 0, 0, -5}));
    CHECK(sc.split == mat(2, 2, {1, 0, 0, -5}));
    CHECK(sc.compact.is_zero());

    sc = split_compact_parts(mat(2, 2, {1, 2, -2, 1}));
    CHECK(sc.split == Matrix::identity(2));
    CHECK(sc.compact == mat(2, 2, {0, 2, -2, 0}));

    CHECK_THROWS_AS(split_compact_parts(mat(2, 2, {1, 1, 0, 1})), NotSemisimple);
    // companion matrix of x^3 - 2: one real root, two complex
    CHECK_THROWS_AS(split_compact_parts(mat(3, 3, {0, 0, 2, 1, 0, 0, 0, 1, 0})), NotRationallySplittable);
    // companion matrix of x^3 - 3x + 1: totally real, irreducible
    auto real3 = split_compact_parts(mat(3, 3, {0, 0, -1, 1, 0, 3, 0, 1, 0}));
    CHECK(real3.compact.is_zero());
  }

  TEST_CASE("split/compact invariants on random semisimple matrices") {
    Gen gen(15);
    for (int t = 0; t < 250; ++t) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 5));
      const Matrix s = jordan_chevalley(gen.structured(n)).semisimple;
      auto sc = split_compact_parts(s);
      CHECK(sc.split + sc.compact == s);
      CHECK(commute(sc.split, sc.compact));
      CHECK(is_totally_real(squarefree_part(minimal_polynomial(sc.split))));
      // compact part: minimal polynomial divides a product of x and x^2 + q^2
      auto lf = low_degree_factors(minimal_polynomial(sc.compact));
      CHECK(lf.rest.degree() == 0);
      for (const auto& r : lf.roots) CHECK(r == 0);
      for (const auto& q : lf.quadratics) {
        CHECK(q.coefficient(1) == 0);
        CHECK(q.coefficient(0) > 0);
      }
      Matrix sum(n, n);
      for (const auto& c : sc.components) sum += c.projector;
      CHECK(sum == Matrix::identity(n));
    }
  }

  TEST_CASE("cyclotomic examples") {
    CHECK(cyclotomic_factors(poly({1, 1, 1})) == std::vector<std::pair<unsigned, unsigned>>{{3, 1}});
    CHECK(cyclotomic_factors(poly({-1, 0, 0, 0, 1})) ==
          std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {4, 1}});
    CHECK(cyclotomic_factors(poly({1, -3, 1})).empty());
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
    CHECK(euler_totient(12) == 4);
    CHECK(cyclotomic_factors(poly({-1, 1}) * poly({-1, 1})) == std::vector<std::pair<unsigned, unsigned>>{{1, 2}});
  }

  TEST_CASE("cyclotomic detection survives a cyclotomic-free cofactor") {
    Gen gen(16);
    for (int t = 0; t < 200; ++t) {
      const auto d = static_cast<unsigned>(gen.integer(1, 12));
      // Roots of modulus > 1 cannot be roots of unity: x - r with |r| >= 2,
      // or x^2 + c with c >= 2.
      Polynomial q = gen.coin() ? poly({gen.integer(2, 6), 0, 1})
                                : poly({(gen.coin() ? 1 : -1) * gen.integer(2, 5), 1});
      if (gen.coin()) q = q * poly({gen.integer(2, 4), 0, 1});
      auto f = cyclotomic_factors(cyclotomic_polynomial(d) * q);
      auto it = std::find_if(f.begin(), f.end(), [&](auto& e) { return e.first == d; });
      REQUIRE(it != f.end());
      CHECK(it->second >= 1);
      CHECK(f.size() == 1);
    }
  }

  TEST_CASE("log_unipotent examples") {
    CHECK(log_unipotent(Matrix::identity(3)).is_zero());
    CHECK(log_unipotent(mat(2, 2, {1, 1, 0, 1})) == mat(2, 2, {0, 1, 0, 0}));
    Matrix u = mat(3, 3, {1, 2, 3, 0, 1, 4, 0, 0, 1});
    Matrix l = log_unipotent(u);
    CHECK(l == mat(3, 3, {0, 2, -1, 0, 0, 4, 0, 0, 0}));
    CHECK(exp_nilpotent(l) == u);
    CHECK_THROWS_AS(log_unipotent(mat(2, 2, {2, 0, 0, 1})), NotUnipotent);
  }

  TEST_CASE("log/exp round-trip on random unipotent matrices") {
    Gen gen(17);
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 6));
      Matrix upper = Matrix::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = gen.rational(3);
      const Matrix p = gen.invertible(n);
      const Matrix u = p * upper * inverse(p);
      const Matrix l = log_unipotent(u);
      CHECK(is_nilpotent(l));
      CHECK(exp_nilpotent(l) == u);
    }
  }

  TEST_CASE("matrix text format") {
    Matrix m = parse_matrix("# holonomy\n2 2\n0 -1\n1 -1/1\n");
    CHECK(m == mat(2, 2, {0, -1, 1, -1}));
    CHECK(parse_matrix(format_matrix(m)) == m);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), ParseError);
    try {
      parse_matrix("2 2\n1 2\n\n3 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
}
