#include "qzm/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qzm/errors.hpp"

namespace qzm {

std::string to_string(Chirality c) { return c == Chirality::Unbarred ? "unbarred" : "barred"; }

std::string Letter::to_string() const {
  std::ostringstream os;
  if (chirality == Chirality::Unbarred)
    os << "a^" << int(row) << "_" << int(flavor);
  else
    os << "ab_" << int(row) << "^" << int(flavor);
  return os.str();
}

bool letter_less(const Letter& a, const Letter& b) {
  if (a.row != b.row) return a.row < b.row;
  return a.flavor < b.flavor;
}

Letter make_letter(Chirality c, int row, int flavor, int n) {
  if (row < 1 || row > n || flavor < 1 || flavor > n) throw InvalidParameter("letter index out of range");
  return Letter{c, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(flavor)};
}

Word::Word(Chirality c, std::vector<Letter> letters) : chirality_(c), letters_(std::move(letters)) {
  for (const auto& x : letters_)
    if (x.chirality != c) throw UsageError("word mixes chiralities");
}

Word Word::prepend(const Letter& x) const {
  if (x.chirality != chirality_) throw UsageError("chirality mismatch in prepend");
  Word r(chirality_);
  r.letters_.reserve(letters_.size() + 1);
  r.letters_.push_back(x);
  r.letters_.insert(r.letters_.end(), letters_.begin(), letters_.end());
  return r;
}

Word Word::concat(const Word& other) const {
  if (other.chirality_ != chirality_ && !other.empty() && !empty())
    throw UsageError("chirality mismatch in concat");
  Word r(empty() ? other.chirality_ : chirality_);
  r.letters_ = letters_;
  r.letters_.insert(r.letters_.end(), other.letters_.begin(), other.letters_.end());
  return r;
}

Word Word::sub(std::size_t from, std::size_t count) const {
  Word r(chirality_);
  r.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                    letters_.begin() + static_cast<std::ptrdiff_t>(from + count));
  return r;
}

Content Word::content(int n) const {
  Content c(static_cast<std::size_t>(n), 0);
  for (const auto& x : letters_) ++c[static_cast<std::size_t>(x.row - 1)];
  return c;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "|0>";
  std::string s;
  for (const auto& x : letters_) {
    if (!s.empty()) s += " ";
    s += x.to_string();
  }
  return s;
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  for (std::size_t k = a.letters_.size(); k-- > 0;) {
    const Letter& x = a.letters_[k];
    const Letter& y = b.letters_[k];
    if (letter_less(x, y)) return true;
    if (letter_less(y, x)) return false;
  }
  return a.chirality_ < b.chirality_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.chirality()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& x : w.letters()) h = (h ^ (x.row * 31u + x.flavor)) * 0x100000001b3ULL;
  return h ^ w.size();
}

WeightVector word_weight(const Word& w, int n) { return content_weight(w.content(n)); }

WeightVector content_weight(const Content& c) {
  WeightVector v = vacuum_weight(static_cast<int>(c.size()));
  std::vector<long> p = v.entries();
  for (std::size_t j = 0; j < c.size(); ++j) p[j] += c[j];
  return WeightVector(std::move(p));
}

std::vector<Word> words_of_content(Chirality chir, const Content& c, int n) {
  std::vector<int> rows;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < c[static_cast<std::size_t>(i - 1)]; ++k) rows.push_back(i);
  std::vector<Word> out;
  const std::size_t len = rows.size();
  do {
    std::vector<int> fl(len, 1);
    while (true) {
      std::vector<Letter> letters(len);
      for (std::size_t k = 0; k < len; ++k)
        letters[k] = Letter{chir, static_cast<std::uint8_t>(rows[k]), static_cast<std::uint8_t>(fl[k])};
      out.emplace_back(chir, std::move(letters));
      std::size_t k = 0;
      while (k < len && fl[k] == n) fl[k++] = 1;
      if (k == len) break;
      ++fl[k];
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

ChiralState ChiralState::vacuum(const FieldSpec& f, Chirality c, int n) {
  ChiralState s(f, c, n);
  s.terms_.emplace(Word(c), Scalar::one(f));
  return s;
}

ChiralState ChiralState::of_word(const FieldSpec& f, const Word& w, int n, const Scalar& coeff) {
  ChiralState s(f, w.chirality(), n);
  s.add(w, coeff);
  return s;
}

void ChiralState::add(const Word& w, const Scalar& c) {
  if (w.chirality() != chirality_) throw UsageError("state chirality mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ChiralState& ChiralState::operator+=(const ChiralState& o) {
  if (o.chirality_ != chirality_) throw UsageError("adding states of different chirality");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ChiralState& ChiralState::operator-=(const ChiralState& o) {
  if (o.chirality_ != chirality_) throw UsageError("subtracting states of different chirality");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ChiralState& ChiralState::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string ChiralState::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c << ") " << w.to_string();
    first = false;
  }
  return os.str();
}

ChiralState apply_letter(const Letter& x, const ChiralState& s) {
  if (x.chirality != s.chirality()) throw UsageError("apply_letter: chirality mismatch");
  if (x.row < 1 || x.row > s.n() || x.flavor < 1 || x.flavor > s.n())
    throw InvalidParameter("apply_letter: index out of range");
  ChiralState r(s.field(), s.chirality(), s.n());
  for (const auto& [w, c] : s.terms()) r.add(w.prepend(x), c);
  return r;
}

ChiralState apply_word(const Word& u, const ChiralState& s) {
  ChiralState r = s;
  for (std::size_t k = u.size(); k-- > 0;) r = apply_letter(u[k], r);
  return r;
}

}  // namespace qzm
