#pragma once

// Exact coefficient field for the zero-mode algebras.
//
// RootOfUnity(h): the cyclotomic field Q(q), q = exp(-i pi / h), stored as a
// polynomial of degree < phi(2h) in q reduced modulo the cyclotomic
// polynomial Phi_{2h}. Coefficients share one positive denominator so that
// multiplication stays in integer arithmetic.
//
// GenericQ: the rational function field Q(q), used to cross-check the
// identities that do not depend on q^h = -1.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qzm/qpoly.hpp"

namespace qzm {

enum class FieldMode { RootOfUnity, GenericQ };

struct FieldSpec {
  FieldMode mode = FieldMode::GenericQ;
  int h = 0;                           // 0 in GenericQ mode
  std::vector<mpz_class> cyclotomic;   // Phi_{2h}, ascending, monic; empty for GenericQ
  int degree = 0;                      // phi(2h); 0 for GenericQ

  bool root_of_unity() const { return mode == FieldMode::RootOfUnity; }
  /// "h=4" or "generic"; used in cache keys and reports.
  std::string tag() const;
};

/// Interned field specification; the returned reference lives for the whole
/// program. Throws InvalidParameter if h < 3 in RootOfUnity mode.
const FieldSpec& make_field(FieldMode mode, int h = 0);

/// Phi_m by exact division of x^m - 1 by Phi_e for every proper divisor e of m.
std::vector<mpz_class> cyclotomic_polynomial(int m);

int euler_phi(int m);

class Scalar {
 public:
  /// Unbound zero: adopts the field of the other operand in arithmetic.
  Scalar() = default;

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& v);
  /// Root-of-unity element from coefficients in the basis 1, q, ..., q^{d-1}.
  static Scalar from_coeffs(const FieldSpec& f, const std::vector<mpq_class>& coeffs);
  /// Generic-q element num/den.
  static Scalar from_ratio(const FieldSpec& f, const QPoly& num, const QPoly& den);

  const FieldSpec* field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Throws DomainError for zero.
  Scalar inverse() const;

  /// Coefficients in the power basis (RootOfUnity mode only).
  std::vector<mpq_class> coeffs() const;
  /// Numerator and denominator (GenericQ mode only).
  const QPoly& numerator() const { return gnum_; }
  const QPoly& denominator() const { return gden_; }

  /// Human-readable form, e.g. "q - q^3".
  std::string to_string() const;

  /// Canonical text encoding: RootOfUnity -> ["num/den", ...] of length d;
  /// GenericQ -> [[num coeffs], [den coeffs]] with "num/den" entries.
  nlohmann::json encode() const;
  static Scalar decode(const FieldSpec& f, const nlohmann::json& j);

 private:
  void bind(const Scalar& other);
  void normalize();
  QPoly as_poly() const;

  const FieldSpec* field_ = nullptr;
  // RootOfUnity: value = (sum num_[k] q^k) / den_
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
  // GenericQ: value = gnum_ / gden_, gden_ monic, gcd 1
  QPoly gnum_;
  QPoly gden_ = QPoly::constant(1);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// q^m; in RootOfUnity mode the exponent is taken modulo 2h.
Scalar q_power(const FieldSpec& f, long m);

/// [m] = (q^m - q^-m)/(q - q^-1), evaluated as the power sum
/// sign(m) * sum_{j=0}^{|m|-1} q^{|m|-1-2j}.
Scalar q_int(const FieldSpec& f, long m);

/// [m]! = [1][2]...[m].
Scalar q_factorial(const FieldSpec& f, long m);

}  // namespace qzm
