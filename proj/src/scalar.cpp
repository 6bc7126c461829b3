#include "qzm/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#include "qzm/errors.hpp"

namespace qzm {

namespace {

std::vector<mpq_class> to_q(const std::vector<mpz_class>& v) {
  std::vector<mpq_class> r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw UsageError("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

std::string FieldSpec::tag() const {
  return root_of_unity() ? "h=" + std::to_string(h) : std::string("generic");
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int m) {
  if (m < 1) throw InvalidParameter("cyclotomic index must be positive");
  // x^m - 1
  std::vector<mpq_class> c(static_cast<std::size_t>(m) + 1, mpq_class(0));
  c.front() = -1;
  c.back() = 1;
  QPoly p(std::move(c));
  for (int e = 1; e < m; ++e) {
    if (m % e != 0) continue;
    const auto phi_e = cyclotomic_polynomial(e);
    QPoly q, r;
    QPoly::divmod(p, QPoly(to_q(phi_e)), q, r);
    if (!r.is_zero()) throw RelationSetInconsistency("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::vector<mpz_class> out;
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw RelationSetInconsistency("non-integral cyclotomic coefficient");
    out.push_back(x.get_num());
  }
  return out;
}

const FieldSpec& make_field(FieldMode mode, int h) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> registry;
  if (mode == FieldMode::RootOfUnity && h < 3)
    throw InvalidParameter("root-of-unity field requires h >= 3, got " + std::to_string(h));
  const std::pair<int, int> key{static_cast<int>(mode), mode == FieldMode::RootOfUnity ? h : 0};
  std::lock_guard lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  auto spec = std::make_unique<FieldSpec>();
  spec->mode = mode;
  if (mode == FieldMode::RootOfUnity) {
    spec->h = h;
    spec->cyclotomic = cyclotomic_polynomial(2 * h);
    spec->degree = static_cast<int>(spec->cyclotomic.size()) - 1;
  }
  auto& ref = *spec;
  registry.emplace(key, std::move(spec));
  return ref;
}

// ---------------------------------------------------------------------------

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = &f;
  if (f.root_of_unity()) s.num_.assign(static_cast<std::size_t>(f.degree), mpz_class(0));
  return s;
}

Scalar Scalar::from_int(const FieldSpec& f, long v) { return from_rational(f, mpq_class(v)); }

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& v) {
  Scalar s = zero(f);
  if (f.root_of_unity()) {
    s.num_[0] = v.get_num();
    s.den_ = v.get_den();
  } else {
    s.gnum_ = QPoly::constant(v);
  }
  s.normalize();
  return s;
}

Scalar Scalar::from_coeffs(const FieldSpec& f, const std::vector<mpq_class>& coeffs) {
  if (!f.root_of_unity()) throw UsageError("from_coeffs requires a root-of-unity field");
  QPoly p(coeffs);
  QPoly quot, rem;
  QPoly::divmod(p, QPoly(to_q(f.cyclotomic)), quot, rem);
  Scalar s = zero(f);
  mpz_class den = 1;
  for (const auto& c : rem.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (int k = 0; k <= rem.degree(); ++k) {
    const mpq_class c = rem.coeff(k) * den;
    s.num_[static_cast<std::size_t>(k)] = c.get_num();
  }
  s.den_ = den;
  s.normalize();
  return s;
}

Scalar Scalar::from_ratio(const FieldSpec& f, const QPoly& num, const QPoly& den) {
  if (f.root_of_unity()) throw UsageError("from_ratio requires the generic-q field");
  if (den.is_zero()) throw DomainError("zero denominator");
  Scalar s = zero(f);
  s.gnum_ = num;
  s.gden_ = den;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (field_ == nullptr) return;
  if (field_->root_of_unity()) {
    mpz_class g = den_;
    for (const auto& x : num_) {
      if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    bool all_zero = true;
    for (const auto& x : num_) all_zero = all_zero && x == 0;
    if (all_zero) {
      den_ = 1;
      return;
    }
    if (den_ < 0) g = -abs(g);
    if (g != 1) {
      for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  } else {
    if (gnum_.is_zero()) {
      gden_ = QPoly::constant(1);
      return;
    }
    QPoly g = gcd(gnum_, gden_);
    if (g.degree() > 0) {
      QPoly r;
      QPoly::divmod(QPoly(gnum_), g, gnum_, r);
      QPoly::divmod(QPoly(gden_), g, gden_, r);
    }
    const mpq_class lc = gden_.lead();
    if (lc != 1) {
      const mpq_class inv = mpq_class(1) / lc;
      gnum_ = gnum_ * inv;
      gden_ = gden_ * inv;
    }
  }
}

void Scalar::bind(const Scalar& other) {
  if (other.field_ == nullptr) return;
  if (field_ == nullptr) {
    *this = zero(*other.field_);
    return;
  }
  if (field_ != other.field_) throw UsageError("scalars from different fields");
}

bool Scalar::is_zero() const {
  if (field_ == nullptr) return true;
  if (field_->root_of_unity()) {
    for (const auto& x : num_)
      if (x != 0) return false;
    return true;
  }
  return gnum_.is_zero();
}

bool Scalar::is_one() const {
  if (field_ == nullptr) return false;
  if (field_->root_of_unity()) {
    if (den_ != 1 || num_[0] != 1) return false;
    for (std::size_t k = 1; k < num_.size(); ++k)
      if (num_[k] != 0) return false;
    return true;
  }
  return gden_.degree() == 0 && gnum_ == QPoly::constant(1);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.num_) x = -x;
  r.gnum_ = -r.gnum_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  bind(b);
  if (b.field_ == nullptr) return *this;
  if (field_->root_of_unity()) {
    if (den_ == b.den_) {
      for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += b.num_[k];
    } else {
      for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * b.den_ + b.num_[k] * den_;
      den_ *= b.den_;
    }
  } else {
    if (gden_ == b.gden_) {
      gnum_ = gnum_ + b.gnum_;
    } else {
      gnum_ = gnum_ * b.gden_ + b.gnum_ * gden_;
      gden_ = gden_ * b.gden_;
    }
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar& Scalar::operator*=(const Scalar& b) {
  bind(b);
  if (b.field_ == nullptr) {
    *this = field_ ? zero(*field_) : Scalar();
    return *this;
  }
  if (field_->root_of_unity()) {
    const auto d = static_cast<std::size_t>(field_->degree);
    std::vector<mpz_class> prod(2 * d - 1, mpz_class(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (num_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b.num_[j] == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    const auto& phi = field_->cyclotomic;
    for (std::size_t deg = 2 * d - 2; deg >= d; --deg) {
      if (prod[deg] == 0) continue;
      const mpz_class c = prod[deg];
      for (std::size_t j = 0; j < d; ++j) {
        if (phi[j] != 0) mpz_submul(prod[deg - d + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
      }
      prod[deg] = 0;
    }
    prod.resize(d);
    num_ = std::move(prod);
    den_ *= b.den_;
  } else {
    gnum_ = gnum_ * b.gnum_;
    gden_ = gden_ * b.gden_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) { return *this *= b.inverse(); }

QPoly Scalar::as_poly() const {
  std::vector<mpq_class> c;
  c.reserve(num_.size());
  for (const auto& x : num_) c.emplace_back(mpq_class(x, den_));
  for (auto& x : c) x.canonicalize();
  return QPoly(std::move(c));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero scalar");
  if (field_->root_of_unity()) {
    QPoly s, t;
    const QPoly g = ext_gcd(as_poly(), QPoly(to_q(field_->cyclotomic)), s, t);
    if (g.degree() != 0) throw DomainError("non-invertible element (modulus not irreducible?)");
    return from_coeffs(*field_, s.coeffs());
  }
  Scalar r = *this;
  std::swap(r.gnum_, r.gden_);
  r.normalize();
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.is_zero() && b.is_zero();
  if (a.field_ != b.field_) throw UsageError("comparing scalars from different fields");
  if (a.field_->root_of_unity()) return a.den_ == b.den_ && a.num_ == b.num_;
  return a.gnum_ == b.gnum_ && a.gden_ == b.gden_;
}

std::vector<mpq_class> Scalar::coeffs() const {
  if (field_ == nullptr || !field_->root_of_unity()) throw UsageError("coeffs() requires a root-of-unity scalar");
  std::vector<mpq_class> c;
  for (const auto& x : num_) {
    mpq_class v(x, den_);
    v.canonicalize();
    c.push_back(v);
  }
  return c;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  if (field_->root_of_unity()) return as_poly().to_string();
  if (gden_.degree() == 0) return gnum_.to_string();
  return "(" + gnum_.to_string() + ")/(" + gden_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

nlohmann::json Scalar::encode() const {
  auto rat = [](const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); };
  if (field_ == nullptr) throw UsageError("cannot encode an unbound scalar");
  if (field_->root_of_unity()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs()) arr.push_back(rat(c));
    return arr;
  }
  nlohmann::json num = nlohmann::json::array(), den = nlohmann::json::array();
  for (const auto& c : gnum_.coeffs()) num.push_back(rat(c));
  for (const auto& c : gden_.coeffs()) den.push_back(rat(c));
  return nlohmann::json::array({num, den});
}

Scalar Scalar::decode(const FieldSpec& f, const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("scalar encoding must be an array");
  if (f.root_of_unity()) {
    if (j.size() != static_cast<std::size_t>(f.degree)) throw UsageError("scalar encoding has wrong length");
    std::vector<mpq_class> c;
    for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
    Scalar s = from_coeffs(f, c);
    if (s.coeffs() != c) throw UsageError("scalar encoding is not canonical");
    return s;
  }
  if (j.size() != 2) throw UsageError("generic scalar encoding must be a pair");
  auto poly = [](const nlohmann::json& a) {
    std::vector<mpq_class> c;
    for (const auto& e : a) c.push_back(parse_rational(e.get<std::string>()));
    return QPoly(std::move(c));
  };
  return from_ratio(f, poly(j[0]), poly(j[1]));
}

// ---------------------------------------------------------------------------

Scalar q_power(const FieldSpec& f, long m) {
  if (f.root_of_unity()) {
    const long period = 2L * f.h;
    long r = m % period;
    if (r < 0) r += period;
    std::vector<mpq_class> c(static_cast<std::size_t>(r) + 1, mpq_class(0));
    c.back() = 1;
    return Scalar::from_coeffs(f, c);
  }
  if (m >= 0) return Scalar::from_ratio(f, QPoly::monomial(static_cast<int>(m)), QPoly::constant(1));
  return Scalar::from_ratio(f, QPoly::constant(1), QPoly::monomial(static_cast<int>(-m)));
}

Scalar q_int(const FieldSpec& f, long m) {
  Scalar s = Scalar::zero(f);
  const long a = m < 0 ? -m : m;
  for (long j = 0; j < a; ++j) s += q_power(f, a - 1 - 2 * j);
  return m < 0 ? -s : s;
}

Scalar q_factorial(const FieldSpec& f, long m) {
  if (m < 0) throw InvalidParameter("q_factorial of a negative integer");
  Scalar s = Scalar::one(f);
  for (long j = 2; j <= m; ++j) s *= q_int(f, j);
  return s;
}

}  // namespace qzm
