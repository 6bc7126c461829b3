#include "qzm/qpoly.hpp"

#include <sstream>
#include <utility>

#include "qzm/errors.hpp"

namespace qzm {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(int degree, const mpq_class& c) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  v.back() = c;
  return QPoly(std::move(v));
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const mpq_class& s) {
  if (s == 0) return {};
  QPoly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<mpq_class> r = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<mpq_class> q(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, mpq_class(0));
  for (int d = da; d >= db; --d) {
    const mpq_class c = r[static_cast<std::size_t>(d)] / b.lead();
    if (c == 0) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(d - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  quot = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return *this * (mpq_class(1) / lead());
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpq_class& c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const mpq_class a = abs(c);
    if (d == 0 || a != 1) os << a.get_str();
    if (d > 0) {
      if (d == 0 || a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    QPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = {};
    t = {};
    return {};
  }
  const mpq_class inv = mpq_class(1) / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

}  // namespace qzm
