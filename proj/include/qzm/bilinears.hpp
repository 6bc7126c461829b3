#pragma once

// q-antisymmetric and q-symmetric bilinears A, S (and their barred
// counterparts) as left-multiplication operators on chiral states, their
// exchange identities, and the S/A split of Q-bilinears.

#include <string>
#include <utility>
#include <vector>

#include "qzm/qalgebra.hpp"

namespace qzm {

/// Left multiplication by a fixed combination of words of one chirality.
struct WordOperator {
  Chirality chirality = Chirality::Unbarred;
  std::vector<std::pair<Word, Scalar>> terms;
};

ChiralState apply(const WordOperator& op, const ChiralState& s);
/// op_u (x) op_b on every term.
TensorState apply(const WordOperator& op_u, const WordOperator& op_b, const TensorState& s);

enum class BilinearKind { A, S };
std::string to_string(BilinearKind k);

/// [2]^{-1} times the two-letter combination defining A^{ij}_{ab} / S^{ij}_{ab}
/// (unbarred) or Ab_{ij}^{ab} / Sb_{ij}^{ab} (barred). InvalidParameter if [2] = 0.
WordOperator bilinear(BilinearKind kind, Chirality c, int i, int j, int alpha, int beta, int n, const FieldSpec& f);

ChiralState apply_bilinear(BilinearKind kind, int i, int j, int alpha, int beta, const ChiralState& s);

/// Outcome counters of an identity sweep.
struct IdentityTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what);
  bool passed() const { return failed == 0; }
  IdentityTally& operator+=(const IdentityTally& o);
};

/// Split completeness A + S = a^i_a a^j_b, the relabelling symmetries of A and S,
/// A^{ii} = 0 and S^{ij}_{aa} = S^{ji}_{aa}, on a chiral state.
IdentityTally check_split_identities(const FockModule& m, const ChiralState& v);

/// [p_ij+1] A^{ij}_{ab} = -[p_ij-1] A^{ji}_{ab} and S^{ij}_{ab} = S^{ji}_{ab}
/// (i != j, a != b), brackets at the weight of v; v must have definite content.
IdentityTally check_dynamical_AS(const FockModule& m, const ChiralState& v);

/// sum_{a,b} S^{ij}_{ab} (x) Ab_{lm}^{ab} s = 0 and sum_{a,b} A^{ij}_{ab} (x) Sb_{lm}^{ab} s = 0.
bool check_contraction_vanishing(const QAlgebra& q, const TensorState& s, int i, int j, int l, int m);

struct QQParts {
  TensorState ss;
  TensorState aa;
};

/// Q^i_l Q^j_m = sum S^{ij}_{ab} (x) Sb_{lm}^{ab} + sum A^{ij}_{ab} (x) Ab_{lm}^{ab}, applied to s.
QQParts decompose_QQ(int i, int l, int j, int m, const TensorState& s);

}  // namespace qzm
