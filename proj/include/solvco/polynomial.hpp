#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvco/rational.hpp"

namespace solvco {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The coefficient list never carries trailing zeros; the zero polynomial has
/// an empty list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// x^k
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  /// x - root
  static Polynomial linear_root(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// Sign of p(x): -1, 0 or 1.
  int sign_at(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct Bezout {
  Polynomial g, s, t;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// Open interval; a missing endpoint means -infinity / +infinity.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  static Interval real_line() { return {}; }
  static Interval positive() { return {Rational(0), std::nullopt}; }
  static Interval negative() { return {std::nullopt, Rational(0)}; }
};

/// Number of distinct real roots of the squarefree polynomial p inside the
/// open interval, by an exact Sturm chain.
int sturm_real_root_count(const Polynomial& p, const Interval& interval);

/// True when every root of p is real (p is reduced to its squarefree part).
bool is_totally_real(const Polynomial& p);

/// All distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Primitive integer polynomial proportional to p (positive leading coefficient).
std::vector<Integer> primitive_integer_coefficients(const Polynomial& p);

/// Splits p into the irreducible factors of degree <= 2 found by exhaustive
/// search, plus the leftover product whose irreducible factors all have
/// degree >= 3. Factors are monic; repeated factors appear repeatedly.
struct LowDegreeFactorization {
  std::vector<Rational> roots;          // linear factors x - r
  std::vector<Polynomial> quadratics;   // irreducible monic quadratics
  Polynomial rest;                      // monic, no factor of degree <= 2
};
LowDegreeFactorization low_degree_factors(const Polynomial& p);

/// Cyclotomic polynomial Phi_d, from x^d - 1 = prod_{e | d} Phi_e.
Polynomial cyclotomic_polynomial(unsigned d);

unsigned euler_totient(unsigned d);

/// Every d with Phi_d | p and its multiplicity, ascending in d.
std::vector<std::pair<unsigned, unsigned>> cyclotomic_factors(const Polynomial& p);

}  // namespace solvco
