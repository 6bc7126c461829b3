#include <map>

#include "doctest.h"
#include "qzm/chiral_fock.hpp"
#include "qzm/errors.hpp"

using namespace qzm;

namespace {

FockConfig config(int n, const FieldSpec& f, EpsilonConvention e = kDefaultEpsilon) {
  FockConfig c;
  c.n = n;
  c.field = &f;
  c.epsilon = e;
  return c;
}

/// Dense rank of rows over the field, by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Scalar inv = rows[rank][c].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Scalar factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Flat oracle: every word on the content chain below `top` modulo the span
/// of every relation instance, by dense elimination.
std::size_t flat_dimension(const FockModule& m, const Content& top) {
  std::map<Word, std::size_t> index;
  for (Content c = top; nonnegative(c); c = add_ones(c, -1))
    for (const auto& w : words_of_content(Chirality::Unbarred, c, m.n())) index.emplace(w, index.size());
  std::vector<std::vector<Scalar>> rows;
  for (const auto& inst : m.relation_instances(top)) {
    std::vector<Scalar> row(index.size(), Scalar::zero(m.field()));
    for (const auto& [w, x] : inst.row.terms()) row.at(index.at(w)) += x;
    rows.push_back(std::move(row));
  }
  return index.size() - dense_rank(std::move(rows), index.size());
}

}  // namespace

TEST_CASE("quantum epsilon conventions") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 5);
  CHECK(permutation_sign({1, 2, 3}) == 1);
  CHECK(permutation_sign({2, 1, 3}) == -1);
  CHECK(inversion_count({3, 2, 1}) == 3);
  CHECK(quantum_epsilon({2, 1}, EpsilonConvention::MinusLength, f) == -q_power(f, -1));
  CHECK(quantum_epsilon({2, 1}, EpsilonConvention::PlusLength, f) == -q_power(f, 1));
  CHECK(quantum_epsilon({1, 2, 3}, EpsilonConvention::MinusLength, f).is_one());
  CHECK(epsilon_from_tag(tag(EpsilonConvention::PlusLength)) == EpsilonConvention::PlusLength);
}

TEST_CASE("vacuum class is one dimensional in both epsilon conventions") {
  for (int h : {3, 4, 5}) {
    const FieldSpec& f = make_field(FieldMode::RootOfUnity, h);
    for (auto e : {EpsilonConvention::MinusLength, EpsilonConvention::PlusLength}) {
      for (int n : {2, 3}) {
        if (h < n + 1) continue;
        FockModule m(config(n, f, e), Chirality::Unbarred);
        CAPTURE(h);
        CAPTURE(n);
        CHECK(m.family(Content(static_cast<std::size_t>(n), 0))->dimension() == 1);
        CHECK(m.family(Content(static_cast<std::size_t>(n), 1))->dimension() >= 1);
      }
    }
  }
}

TEST_CASE("recursive quotient agrees with the flat elimination oracle") {
  struct Case {
    int n;
    int h;
    Content top;
  };
  const std::vector<Case> cases = {
      {2, 3, {1, 0}}, {2, 3, {2, 0}}, {2, 3, {1, 1}}, {2, 3, {2, 1}}, {2, 4, {3, 0}}, {2, 4, {2, 2}},
      {2, 4, {3, 1}}, {3, 4, {1, 0, 0}}, {3, 4, {1, 1, 0}}, {3, 4, {1, 1, 1}}, {3, 4, {2, 1, 0}}, {3, 5, {2, 0, 0}},
  };
  for (const auto& c : cases) {
    const FieldSpec& f = make_field(FieldMode::RootOfUnity, c.h);
    FockModule m(config(c.n, f), Chirality::Unbarred);
    CAPTURE(c.n);
    CAPTURE(c.h);
    CAPTURE(to_string(c.top));
    CHECK(m.family(c.top)->dimension() == flat_dimension(m, c.top));
  }
}

TEST_CASE("every relation instance reduces to zero") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  FockModule m(config(3, f), Chirality::Unbarred);
  for (const Content& top : {Content{2, 1, 0}, Content{1, 1, 1}, Content{2, 2, 0}}) {
    std::size_t count = 0;
    m.for_each_relation_instance(top, [&](RelationInstance&& r) {
      ++count;
      CHECK(m.is_zero(r.row));
      return true;
    });
    CHECK(count > 0);
  }
}

TEST_CASE("generic q: single-row families are symmetric powers") {
  const FieldSpec& f = make_field(FieldMode::GenericQ);
  FockModule m(config(2, f), Chirality::Unbarred);
  for (int k = 0; k <= 4; ++k) CHECK(m.family({k, 0})->dimension() == static_cast<std::size_t>(k + 1));
}

TEST_CASE("nilpotency of a single generator at the root of unity") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 3);
  FockModule m(config(2, f), Chirality::Unbarred);
  const Letter x = make_letter(Chirality::Unbarred, 1, 1, 2);
  ChiralState s = ChiralState::vacuum(f, Chirality::Unbarred, 2);
  for (int t = 0; t < 2; ++t) s = apply_letter(x, s);
  CHECK_FALSE(m.is_zero(s));
  s = apply_letter(x, s);
  CHECK(m.is_zero(s));
}

TEST_CASE("q-antisymmetric square of a row vanishes on the vacuum") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  FockModule m(config(2, f), Chirality::Unbarred);
  ChiralState s(f, Chirality::Unbarred, 2);
  const ChiralState vac = ChiralState::vacuum(f, Chirality::Unbarred, 2);
  for (const std::vector<int>& perm : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    const Word w(Chirality::Unbarred,
                 {make_letter(Chirality::Unbarred, 1, perm[0], 2), make_letter(Chirality::Unbarred, 1, perm[1], 2)});
    s += quantum_epsilon(perm, kDefaultEpsilon, f) * apply_word(w, vac);
  }
  CHECK(m.is_zero(s));
}

TEST_CASE("reduction is idempotent and respects the vacuum conditions") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  FockModule m(config(2, f), Chirality::Unbarred);
  const ChiralState vac = ChiralState::vacuum(f, Chirality::Unbarred, 2);
  CHECK(m.is_zero(apply_letter(make_letter(Chirality::Unbarred, 2, 1, 2), vac)));
  ChiralState s = apply_letter(make_letter(Chirality::Unbarred, 1, 2, 2), vac);
  s = apply_letter(make_letter(Chirality::Unbarred, 2, 1, 2), s);
  const ChiralState r = m.reduce(s);
  CHECK(m.reduce(r) == r);
  CHECK(m.is_zero(s - r));
}

TEST_CASE("budget ceiling") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 5);
  FockConfig c = config(3, f);
  c.budget = 10;
  FockModule m(c, Chirality::Unbarred);
  CHECK_THROWS_AS(m.family({3, 2, 1}), BudgetExceeded);
}
