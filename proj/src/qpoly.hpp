#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncsf {

using Integer = mpz_class;

// Sparse univariate polynomial in q with arbitrary-precision integer
// coefficients. Terms are kept sorted by ascending exponent and no stored
// coefficient is ever zero, so the zero polynomial has no terms.
class QPoly {
 public:
  using Term = std::pair<unsigned, Integer>;

  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): integers embed into Z[q]
  explicit QPoly(Integer c);

  static QPoly monomial(Integer c, unsigned exponent);
  static QPoly q() { return monomial(1, 1); }
  // (1-q)^k, expanded.
  static QPoly one_minus_q_power(unsigned k);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  // Constant term; the only term when is_constant().
  Integer constant_term() const;
  Integer coefficient(unsigned exponent) const;
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first); }
  const std::vector<Term>& terms() const { return terms_; }

  // True iff every coefficient is >= 0.
  bool nonnegative() const;

  Integer eval(const Integer& v) const;
  Integer eval(long v) const { return eval(Integer(v)); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  // Scale by an integer; cheaper than a full product.
  QPoly& operator*=(const Integer& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  // Descending exponents, e.g. "q^3+q^2-q", "q^2-2*q+1", "-3", "0".
  std::string to_string() const;
  // Accepts any order of terms, "2*q", "2q", "q^0", whitespace.
  static QPoly parse(std::string_view text);

 private:
  void add_scaled(const QPoly& o, int sign);

  std::vector<Term> terms_;
};

QPoly qpoly_mul(const QPoly& a, const QPoly& b);
Integer qpoly_eval(const QPoly& p, long v);
QPoly one_minus_q_power(unsigned k);

}  // namespace ncsf
