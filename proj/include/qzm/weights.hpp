#pragma once

// Shifted su(n) weights: eigenvalues of p_j (and of the barred copy) on
// monomial states. Only differences p_j - p_l are meaningful.

#include <string>
#include <vector>

#include "qzm/scalar.hpp"

namespace qzm {

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<long> p) : p_(std::move(p)) {}

  int n() const { return static_cast<int>(p_.size()); }
  /// Absolute entry p_j, 1-based.
  long operator[](int j) const;
  /// p_{jl} = p_j - p_l, 1-based indices.
  long diff(int j, int l) const;
  const std::vector<long>& entries() const { return p_; }

  /// Same differences (equality up to a common shift).
  bool equivalent(const WeightVector& other) const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long> p_;
};

/// Canonical vacuum representative p_j = -j, so p_{jl} = l - j.
WeightVector vacuum_weight(int n);

/// Weight of a^i_alpha v given the weight of v: p_i -> p_i + 1.
WeightVector shift(const WeightVector& w, int i);

/// [p_{jl} + offset] evaluated at w.
Scalar eval_bracket(const WeightVector& w, int j, int l, long offset, const FieldSpec& f);

/// D_q(p) = prod_{i<j} [p_{ij}].
Scalar quantum_discriminant(const WeightVector& w, const FieldSpec& f);

/// +1 for alpha > beta, -1 for alpha < beta, 0 on the diagonal.
inline int epsilon_sign(int alpha, int beta) { return alpha > beta ? 1 : (alpha < beta ? -1 : 0); }

}  // namespace qzm
