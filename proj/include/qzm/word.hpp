#pragma once

// Letters, words and sparse states of the chiral Fock modules.
//
// A word is stored leftmost letter first; the rightmost letter acts first on
// the vacuum. Words are totally ordered: shorter words first, then by
// comparing letters right to left, letters ordered by (row, flavor).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qzm/scalar.hpp"
#include "qzm/weights.hpp"

namespace qzm {

enum class Chirality : std::uint8_t { Unbarred, Barred };

std::string to_string(Chirality c);

/// a^row_flavor (unbarred) or abar^flavor_row (barred).
struct Letter {
  Chirality chirality = Chirality::Unbarred;
  std::uint8_t row = 1;
  std::uint8_t flavor = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  std::string to_string() const;
};

/// Order by (row, flavor); chirality must agree.
bool letter_less(const Letter& a, const Letter& b);

Letter make_letter(Chirality c, int row, int flavor, int n);

/// Nonnegative letter counts by row index (length n).
using Content = std::vector<int>;

class Word {
 public:
  Word() = default;
  explicit Word(Chirality c) : chirality_(c) {}
  Word(Chirality c, std::vector<Letter> letters);

  Chirality chirality() const { return chirality_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// x * this (left multiplication).
  Word prepend(const Letter& x) const;
  /// this * other (concatenation).
  Word concat(const Word& other) const;
  /// Letters [from, from+count).
  Word sub(std::size_t from, std::size_t count) const;

  Content content(int n) const;
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.chirality_ == b.chirality_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b);

 private:
  Chirality chirality_ = Chirality::Unbarred;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Weight of w|0>: the vacuum shifted once per letter by its row.
WeightVector word_weight(const Word& w, int n);

/// Weight attached to a content vector (order-independent).
WeightVector content_weight(const Content& c);

/// All words of the given content, all flavors, in ascending word order.
std::vector<Word> words_of_content(Chirality chir, const Content& c, int n);

// ---------------------------------------------------------------------------

/// Sparse Scalar-weighted combination of words of one chirality.
class ChiralState {
 public:
  using Terms = std::map<Word, Scalar>;

  ChiralState(const FieldSpec& f, Chirality c, int n) : field_(&f), chirality_(c), n_(n) {}
  static ChiralState vacuum(const FieldSpec& f, Chirality c, int n);
  static ChiralState of_word(const FieldSpec& f, const Word& w, int n, const Scalar& coeff);

  const FieldSpec& field() const { return *field_; }
  Chirality chirality() const { return chirality_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Word& w, const Scalar& c);
  ChiralState& operator+=(const ChiralState& o);
  ChiralState& operator-=(const ChiralState& o);
  ChiralState& operator*=(const Scalar& s);
  friend ChiralState operator+(ChiralState a, const ChiralState& b) { return a += b; }
  friend ChiralState operator-(ChiralState a, const ChiralState& b) { return a -= b; }
  friend ChiralState operator*(const Scalar& s, ChiralState a) { return a *= s; }
  friend bool operator==(const ChiralState& a, const ChiralState& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  const FieldSpec* field_;
  Chirality chirality_;
  int n_;
  Terms terms_;
};

/// Left multiplication by a letter; no reduction. Throws UsageError on chirality mismatch.
ChiralState apply_letter(const Letter& x, const ChiralState& s);

/// Left multiplication by a word (rightmost letter applied first).
ChiralState apply_word(const Word& u, const ChiralState& s);

}  // namespace qzm
