#pragma once

// The operators Q^i_j = sum_alpha a^i_alpha (x) ab^alpha_j on the product of
// the chiral and antichiral Fock modules, the diagonal monomial vectors v_m
// labelled by Young diagrams, and the vanishing / growth / annihilation
// checks on them.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qzm/chiral_fock.hpp"
#include "qzm/diagrams.hpp"

namespace qzm {

using WordPair = std::pair<Word, Word>;  // (unbarred, barred)

/// Sparse Scalar-weighted combination of (unbarred word, barred word) pairs.
class TensorState {
 public:
  using Terms = std::map<WordPair, Scalar>;

  TensorState(const FieldSpec& f, int n) : field_(&f), n_(n) {}
  static TensorState vacuum(const FieldSpec& f, int n);
  static TensorState product(const ChiralState& u, const ChiralState& b);

  const FieldSpec& field() const { return *field_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Word& u, const Word& b, const Scalar& c);
  TensorState& operator+=(const TensorState& o);
  TensorState& operator-=(const TensorState& o);
  TensorState& operator*=(const Scalar& s);
  friend TensorState operator+(TensorState a, const TensorState& b) { return a += b; }
  friend TensorState operator-(TensorState a, const TensorState& b) { return a -= b; }
  friend TensorState operator*(const Scalar& s, TensorState a) { return a *= s; }
  friend bool operator==(const TensorState& a, const TensorState& b) { return a.terms_ == b.terms_; }

  /// (unbarred content, barred content) of every term, deduplicated.
  std::vector<std::pair<Content, Content>> contents() const;
  std::string to_string() const;

 private:
  const FieldSpec* field_;
  int n_;
  Terms terms_;
};

/// Ordered product of Q^i_j factors, leftmost first; applied right to left.
using QMonomial = std::vector<std::pair<int, int>>;

/// sum_alpha a^i_alpha (x) ab^alpha_j on every term; no reduction.
TensorState apply_Q(int i, int j, const TensorState& s);
TensorState apply_Q_power(int i, int j, int times, const TensorState& s);
TensorState apply_monomial(const QMonomial& m, const TensorState& s);

/// Coefficient matrix of a tensor state in (pivot (x) pivot) coordinates of
/// one pair of chain tops.
struct TensorBlock {
  Content top;
  Content bar_top;
  std::size_t dim = 0;
  std::size_t bar_dim = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> entries;
};

/// Chain key -> family top, for each chirality.
struct ChainTops {
  std::map<Content, Content> unbarred;
  std::map<Content, Content> barred;
};

enum class GrowthOutcome { Zero, Proportional, InSpan, Outside };
std::string to_string(GrowthOutcome g);

struct GrowthCheck {
  YoungDiagram diagram;
  int row = 0;
  Growth predicted = Growth::Diagram;
  GrowthOutcome outcome = GrowthOutcome::Zero;
  std::optional<YoungDiagram> target;      // grown diagram, or the F' vector spanning the result
  std::optional<Scalar> coefficient;       // Q^j_j v_Y = c * v_target
  std::size_t block_size = 0;
  /// Zero for the three violation kinds, Proportional with c != 0 otherwise.
  bool matches_prediction() const;
};

enum class CommutationResult { Holds, Fails, Vacuous };
std::string to_string(CommutationResult r);

struct FPrimeEntry {
  YoungDiagram diagram;
  bool nonzero = false;
  std::size_t block_size = 0;
};

struct HookVectors {
  TensorState v;    // Q^{i-1}_{i-1} ... Q^2_2 (Q^1_1)^{h-i} |0>
  TensorState v_h;  // Q^i_i Q^1_1 v
  TensorState w_h;  // Q^1_1 Q^i_i v
};

class QAlgebra {
 public:
  /// h labels admissibility of diagrams; in RootOfUnity mode it must match the field.
  QAlgebra(FockConfig cfg, int h);

  int n() const { return chiral_.n(); }
  int h() const { return h_; }
  const FieldSpec& field() const { return chiral_.field(); }
  const FockModule& chiral() const { return chiral_; }
  const FockModule& antichiral() const { return antichiral_; }

  TensorState vacuum() const { return TensorState::vacuum(field(), n()); }
  /// Persist family quotients of both chiralities (they share one store).
  void attach_cache(std::shared_ptr<BasisCache> cache) { chiral_.attach_cache(std::move(cache)); }

  /// Family tops covering every word of the given states.
  ChainTops tops_of(const std::vector<const TensorState*>& states) const;
  std::vector<TensorBlock> blocks(const TensorState& s) const;
  std::vector<TensorBlock> blocks(const TensorState& s, const ChainTops& tops) const;

  bool is_zero_tensor(const TensorState& s) const;
  /// The state rewritten in pivot-word pairs.
  TensorState reduce(const TensorState& s) const;
  /// Largest dim * bar_dim over the blocks of s.
  std::size_t block_size(const TensorState& s) const;
  /// c with a = c * b in the quotient, if it exists; b must be nonzero.
  std::optional<Scalar> proportionality(const TensorState& a, const TensorState& b) const;
  /// p_{jl} differences of the unbarred and barred weights agree on every term.
  bool diagonal_weights(const TensorState& s) const;

  /// (Q^i_i)^{m_i} ... (Q^1_1)^{m_1} |0>, unreduced. InvalidParameter if not admissible.
  TensorState vector_of_diagram(const YoungDiagram& y) const;

  std::vector<FPrimeEntry> fprime_entries() const;
  int fprime_dimension() const;

  GrowthCheck check_growth(const YoungDiagram& y, int j) const;
  CommutationResult check_dynamical_commutation(const TensorState& v, int i, int j) const;
  bool check_offdiagonal_annihilation(const YoungDiagram& y) const;
  HookVectors hook_vectors(int i) const;
  std::pair<bool, bool> check_hook_vanishing(int i) const;
  bool check_rowcol_commutativity(const TensorState& s, int i, int j, int l) const;

 private:
  FockModule chiral_;
  FockModule antichiral_;
  int h_;
  mutable std::mutex mu_;
  mutable std::map<YoungDiagram, TensorState> diagram_vectors_;
};

}  // namespace qzm
