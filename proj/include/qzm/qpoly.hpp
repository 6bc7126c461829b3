#pragma once

// Dense univariate polynomials over Q. Used for cyclotomic moduli, field
// inverses and the generic-q rational function field.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qzm {

/// Coefficients in ascending degree order; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(int degree, const mpq_class& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const mpq_class& s);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DomainError on a zero divisor.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  QPoly monic() const;

  std::string to_string(const char* var = "q") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

/// Returns g = gcd(a, b) (monic) and s, t with s*a + t*b = g.
QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

}  // namespace qzm
