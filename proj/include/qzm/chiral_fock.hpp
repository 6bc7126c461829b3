#pragma once

// Constructive model of the chiral Fock modules F = M|0>: words in the
// generators modulo the span of all relation instances u * r(p) * v together
// with the vacuum annihilation rows.
//
// Words are graded by their row content; the determinant condition links a
// content c with c - (1,...,1), so the linear algebra splits into class
// families {top, top - 1, top - 2, ...}. A family is built from the families
// one letter below it: every word of the family is x * (word of the family
// top - e_x), so
//
//     V_top = (sum_x x * V_{top - e_x}  [+ C|0> if top is a multiple of 1])
//             / (relation instances whose template sits at the left end).
//
// Instances with a nonempty left factor u are x * (instance of a lower
// family) and are already zero there. The stored data per family are the
// pivot words, the matrices of left multiplication by each letter, the
// vacuum vector and the embedding of the family top - 1.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qzm/linalg.hpp"
#include "qzm/scalar.hpp"
#include "qzm/weights.hpp"
#include "qzm/word.hpp"

namespace qzm {

/// Normalization of the quantum antisymmetric tensor on flavor indices:
/// eps^{sigma(1)...sigma(n)} = (-q)^{+l(sigma)} or (-q)^{-l(sigma)}, l = inversions.
enum class EpsilonConvention { PlusLength, MinusLength };

std::string tag(EpsilonConvention e);
EpsilonConvention epsilon_from_tag(const std::string& s);

/// Convention pinned by the vacuum calibration (see tests/test_chiral_fock.cpp).
inline constexpr EpsilonConvention kDefaultEpsilon = EpsilonConvention::MinusLength;

int permutation_sign(const std::vector<int>& perm);
int inversion_count(const std::vector<int>& perm);
Scalar quantum_epsilon(const std::vector<int>& perm, EpsilonConvention e, const FieldSpec& f);

/// One term of sum eps_{i..} eps^{alpha..} a^{i1}_{alpha1} ... a^{in}_{alphan}
/// (the determinant times [n]!). Letters are (row, flavor), leftmost first.
struct DetTerm {
  Scalar coeff;
  std::vector<std::pair<int, int>> letters;
};
std::vector<DetTerm> determinant_expansion(int n, const FieldSpec& f, EpsilonConvention e);

enum class Template { R1, R2, R3, R4, R5, R6 };
std::string to_string(Template t);

struct RelationInstance {
  Template kind;
  ChiralState row;
};

struct FockConfig {
  int n = 2;
  const FieldSpec* field = nullptr;
  EpsilonConvention epsilon = kDefaultEpsilon;
  /// Ceiling on the number of generators of one family elimination, and on
  /// the number of words enumerated by relation_instances.
  std::size_t budget = 100000;
};

/// Quotient data of one class family.
struct QuotientBasis {
  struct Origin {
    bool vacuum = false;
    int row = 0;
    int flavor = 0;
    std::uint32_t lower_index = 0;  // basis index in family top - e_row
  };

  Content top;
  std::vector<Word> basis;     // pivot words, ascending word order (unbarred letters)
  std::vector<Origin> origin;  // provenance of each basis word
  /// action[(row-1)*n + (flavor-1)][k]: letter times basis vector k of the
  /// family top - e_row, in this family's coordinates. Empty when top_row = 0.
  std::vector<std::vector<SparseVec>> action;
  std::optional<SparseVec> vacuum;  // present iff top is a multiple of (1,...,1)
  std::vector<SparseVec> embed;     // images of the basis of family top - 1
  std::size_t generators = 0;
  std::size_t relation_rows = 0;

  std::size_t dimension() const { return basis.size(); }
};

class BasisCache;

class FockModule {
 public:
  FockModule(FockConfig cfg, Chirality chirality);

  /// Module of the other chirality sharing the same family store. The
  /// barred exchange relations coincide with the unbarred ones in
  /// components, so the quotient data are identical.
  FockModule mirror() const;

  const FockConfig& config() const { return cfg_; }
  const FieldSpec& field() const { return *cfg_.field; }
  int n() const { return cfg_.n; }
  Chirality chirality() const { return chirality_; }

  void attach_cache(std::shared_ptr<BasisCache> cache);

  /// Get-or-compute the quotient data of a family (BudgetExceeded,
  /// RelationSetInconsistency).
  std::shared_ptr<const QuotientBasis> family(const Content& top) const;

  /// Coordinates of w|0> in the basis of family `top`; top - content(w)
  /// must be a nonnegative multiple of (1,...,1).
  SparseVec reduce_word(const Word& w, const Content& top) const;

  /// Identifies a content chain {c + m(1,...,1)}: c shifted so that its minimum is 0.
  static Content chain_key(const Content& c);

  /// Coordinates of a state, one vector per content chain, keyed by the
  /// chain's top (componentwise maximum of the contents present).
  std::map<Content, SparseVec> coordinates(const ChiralState& s) const;
  /// Coordinates with explicit tops; every word must fit under one of them.
  std::map<Content, SparseVec> coordinates(const ChiralState& s, const std::vector<Content>& tops) const;

  /// The state rewritten in pivot words only. Idempotent.
  ChiralState reduce(const ChiralState& s) const;
  bool is_zero(const ChiralState& s) const;

  /// Pivot-word state of a coordinate vector.
  ChiralState state_of(const Content& top, const SparseVec& coords) const;

  /// All instances u * r(p) * v of every template inside the family (flat
  /// enumeration, every factorization position). The callback returns false
  /// to stop early.
  void for_each_relation_instance(const Content& top,
                                  const std::function<bool(RelationInstance&&)>& fn) const;
  std::vector<RelationInstance> relation_instances(const Content& top) const;
  std::size_t family_word_count(const Content& top) const;

  /// Rank of the embedding family(top - 1) -> family(top).
  std::size_t embedding_rank(const Content& top) const;

 private:
  struct Store;
  FockModule(FockConfig cfg, Chirality chirality, std::shared_ptr<Store> store);

  std::shared_ptr<const QuotientBasis> compute(const Content& top) const;
  SparseVec reduce_word_m(const Word& w, int m) const;
  void enumerate_instances(const Content& top, const std::function<void(RelationInstance&&)>& fn) const;
  Word unbarred(const Word& w) const;

  FockConfig cfg_;
  Chirality chirality_;
  std::shared_ptr<Store> store_;
};

/// Content helpers.
bool is_multiple_of_ones(const Content& c);
Content add_row(const Content& c, int row, int times = 1);
Content add_ones(const Content& c, int times);
bool nonnegative(const Content& c);
std::string to_string(const Content& c);

}  // namespace qzm
