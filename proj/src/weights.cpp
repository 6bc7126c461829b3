#include "qzm/weights.hpp"

#include "qzm/errors.hpp"

namespace qzm {

long WeightVector::operator[](int j) const {
  if (j < 1 || j > n()) throw InvalidParameter("weight index out of range");
  return p_[static_cast<std::size_t>(j - 1)];
}

long WeightVector::diff(int j, int l) const { return (*this)[j] - (*this)[l]; }

bool WeightVector::equivalent(const WeightVector& other) const {
  if (n() != other.n()) return false;
  for (int j = 2; j <= n(); ++j)
    if (diff(1, j) != other.diff(1, j)) return false;
  return true;
}

WeightVector vacuum_weight(int n) {
  if (n < 2) throw InvalidParameter("vacuum_weight requires n >= 2");
  std::vector<long> p(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) p[static_cast<std::size_t>(j - 1)] = -j;
  return WeightVector(std::move(p));
}

WeightVector shift(const WeightVector& w, int i) {
  if (i < 1 || i > w.n()) throw InvalidParameter("shift row index out of range");
  std::vector<long> p = w.entries();
  ++p[static_cast<std::size_t>(i - 1)];
  return WeightVector(std::move(p));
}

Scalar eval_bracket(const WeightVector& w, int j, int l, long offset, const FieldSpec& f) {
  return q_int(f, w.diff(j, l) + offset);
}

Scalar quantum_discriminant(const WeightVector& w, const FieldSpec& f) {
  Scalar d = Scalar::one(f);
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j) d *= q_int(f, w.diff(i, j));
  return d;
}

}  // namespace qzm
