#include "solvco/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "solvco/errors.hpp"

namespace solvco {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& root) {
  return Polynomial({Rational(-root), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / lead;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  return Polynomial::constant(s) * p;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) {
      os << solvco::to_string(mag);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * b / gcd(a, b)).monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const Polynomial& p) {
  return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const auto n = chain.size();
    chain.push_back(-(chain[n - 2] % chain[n - 1]));
  }
  chain.pop_back();
  return chain;
}

int sign_at_minus_infinity(const Polynomial& p) {
  int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

}  // namespace

int sturm_real_root_count(const Polynomial& input, const Interval& interval) {
  if (input.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
  Polynomial p = squarefree_part(input);
  if (interval.lo && interval.hi && *interval.hi <= *interval.lo) return 0;
  // Open interval: divide out roots sitting exactly on the endpoints.
  if (interval.lo && p.degree() > 0 && p.evaluate(*interval.lo) == 0)
    p = p / Polynomial::linear_root(*interval.lo);
  if (interval.hi && p.degree() > 0 && p.evaluate(*interval.hi) == 0)
    p = p / Polynomial::linear_root(*interval.hi);
  if (p.degree() <= 0) return 0;

  const auto chain = sturm_chain(p);
  std::vector<int> lo_signs, hi_signs;
  for (const auto& s : chain) {
    lo_signs.push_back(interval.lo ? s.sign_at(*interval.lo) : sign_at_minus_infinity(s));
    hi_signs.push_back(interval.hi ? s.sign_at(*interval.hi) : sgn(s.leading()));
  }
  return sign_changes(lo_signs) - sign_changes(hi_signs);
}

bool is_totally_real(const Polynomial& p) {
  Polynomial sf = squarefree_part(p);
  return sturm_real_root_count(sf, Interval::real_line()) == sf.degree();
}

std::vector<Integer> primitive_integer_coefficients(const Polynomial& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

namespace {

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficient(static_cast<std::size_t>(i)) / lead)));
  return m + 1;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Every rational root of a primitive integer polynomial with leading
// coefficient L is an integer multiple of 1/L. Bisect with Sturm counts until
// each root sits in an interval narrower than 1/L, then test the candidate.
void collect_rational_roots(const Polynomial& p, const Integer& lead, Rational lo, Rational hi,
                            std::vector<Rational>& out) {
  int count = sturm_real_root_count(p, {lo, hi});
  if (count == 0) return;
  Rational width = hi - lo;
  if (width * Rational(lead) < 1) {
    Integer first = ceil_of(lo * Rational(lead));
    Integer last = floor_of(hi * Rational(lead));
    for (Integer m = first; m <= last; ++m) {
      Rational cand(m, lead);
      cand.canonicalize();
      if (cand > lo && cand < hi && p.evaluate(cand) == 0) out.push_back(cand);
    }
    return;
  }
  Rational mid = (lo + hi) / 2;
  collect_rational_roots(p, lead, lo, mid, out);
  if (p.evaluate(mid) == 0) out.push_back(mid);
  collect_rational_roots(p, lead, mid, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& input) {
  std::vector<Rational> out;
  if (input.degree() <= 0) return out;
  Polynomial p = squarefree_part(input);
  auto ints = primitive_integer_coefficients(p);
  Integer lead = ints.back();
  Rational bound = cauchy_bound(p);
  Rational lo = -bound, hi = bound;
  collect_rational_roots(p, lead, lo, hi, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Integer> signed_divisors(const Integer& value) {
  Integer n = abs(value);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  std::vector<Integer> out;
  for (auto& d : small) out.push_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.push_back(*it);
  std::vector<Integer> both;
  for (auto& d : out) {
    both.push_back(d);
    both.push_back(-d);
  }
  return both;
}

Integer eval_int(const std::vector<Integer>& c, long x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// One irreducible quadratic factor of p (p without rational roots), if any.
std::optional<Polynomial> find_quadratic_factor(const Polynomial& p) {
  if (p.degree() < 2) return std::nullopt;
  if (p.degree() == 2) return p.monic();
  auto c = primitive_integer_coefficients(p);
  // Pick the integer evaluation point with the smallest |p(k)| for the
  // middle coefficient search; p has no rational roots so p(k) != 0.
  long best_k = 1;
  Integer best = abs(eval_int(c, 1));
  for (long k : {-1L, 2L, -2L}) {
    Integer v = abs(eval_int(c, k));
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  Integer pk = eval_int(c, best_k);
  const std::vector<long> probes{1, -1, 2, -2, 3, -3};
  std::vector<Integer> probe_values;
  for (long x : probes) probe_values.push_back(eval_int(c, x));

  for (const Integer& alpha : signed_divisors(c.back())) {
    if (alpha < 0) continue;  // fix the sign of the quadratic
    for (const Integer& gamma : signed_divisors(c.front())) {
      for (const Integer& dv : signed_divisors(pk)) {
        // q(k) = alpha k^2 + beta k + gamma = dv
        Integer num = dv - alpha * best_k * best_k - gamma;
        if (num % best_k != 0) continue;
        Integer beta = num / best_k;
        bool ok = true;
        for (std::size_t t = 0; t < probes.size() && ok; ++t) {
          Integer qx = alpha * probes[t] * probes[t] + beta * probes[t] + gamma;
          if (qx == 0 || probe_values[t] % qx != 0) ok = false;
        }
        if (!ok) continue;
        Polynomial q({Rational(gamma), Rational(beta), Rational(alpha)});
        if ((p % q).is_zero()) return q.monic();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

LowDegreeFactorization low_degree_factors(const Polynomial& input) {
  if (input.is_zero()) throw std::domain_error("factoring the zero polynomial");
  LowDegreeFactorization out;
  Polynomial p = input.monic();
  // Linear factors with multiplicity.
  for (const auto& r : rational_roots(p)) {
    Polynomial lin = Polynomial::linear_root(r);
    while (p.degree() > 0) {
      auto [q, rem] = divmod(p, lin);
      if (!rem.is_zero()) break;
      p = q;
      out.roots.push_back(r);
    }
  }
  while (auto q = find_quadratic_factor(p)) {
    while (p.degree() >= 2) {
      auto [quot, rem] = divmod(p, *q);
      if (!rem.is_zero()) break;
      p = quot;
      out.quadratics.push_back(*q);
    }
  }
  out.rest = p.monic();
  return out;
}

unsigned euler_totient(unsigned d) {
  unsigned result = d;
  unsigned n = d;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Polynomial cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw std::domain_error("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<unsigned, Polynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::monomial(d) - Polynomial::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) p = p / cyclotomic_polynomial(e);
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

std::vector<std::pair<unsigned, unsigned>> cyclotomic_factors(const Polynomial& input) {
  std::vector<std::pair<unsigned, unsigned>> out;
  if (input.degree() <= 0) return out;
  const auto deg = static_cast<unsigned>(input.degree());
  // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2.
  const unsigned limit = std::max(6u, 2 * deg * deg);
  Polynomial p = input;
  for (unsigned d = 1; d <= limit; ++d) {
    if (euler_totient(d) > deg) continue;
    Polynomial phi = cyclotomic_polynomial(d);
    unsigned mult = 0;
    while (p.degree() >= phi.degree()) {
      auto [q, r] = divmod(p, phi);
      if (!r.is_zero()) break;
      p = q;
      ++mult;
    }
    if (mult > 0) out.emplace_back(d, mult);
  }
  return out;
}

}  // namespace solvco
