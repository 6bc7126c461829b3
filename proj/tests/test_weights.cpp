#include "doctest.h"
#include "qzm/weights.hpp"
#include "qzm/word.hpp"

using namespace qzm;

TEST_CASE("vacuum weight and shifts") {
  const WeightVector v = vacuum_weight(3);
  CHECK(v.entries() == std::vector<long>{-1, -2, -3});
  CHECK(v.diff(1, 2) == 1);
  CHECK(v.diff(1, 3) == 2);
  const WeightVector s = shift(v, 2);
  CHECK(s.diff(1, 2) == 0);
  CHECK(s.diff(2, 3) == 2);
  CHECK(WeightVector({0, 1}).equivalent(WeightVector({5, 6})));
  CHECK_FALSE(WeightVector({0, 1}).equivalent(WeightVector({0, 2})));
}

TEST_CASE("weights of contents") {
  CHECK(content_weight({0, 0, 0}) == vacuum_weight(3));
  CHECK(content_weight({2, 1, 0}).diff(1, 2) == 2);
  CHECK(content_weight({2, 1, 0}).diff(2, 3) == 2);
}

TEST_CASE("dynamical brackets") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  const WeightVector v = vacuum_weight(2);
  CHECK(eval_bracket(v, 1, 2, 0, f) == q_int(f, 1));
  CHECK(eval_bracket(v, 1, 2, 1, f) == q_int(f, 2));
  CHECK(eval_bracket(v, 2, 1, 1, f).is_zero());
  // Each Q^1_1 raises p_12 by one; after h-1 raises [p_12 + 1] = [h] vanishes.
  WeightVector w = v;
  for (int t = 0; t < 3; ++t) w = shift(w, 1);
  CHECK(eval_bracket(w, 1, 2, 0, f).is_zero());
  CHECK(quantum_discriminant(vacuum_weight(3), f) == q_int(f, 1) * q_int(f, 2) * q_int(f, 1));
}

TEST_CASE("bracket zeros along the first row at n = 3") {
  const int h = 4;
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, h);
  WeightVector w = vacuum_weight(3);
  CHECK(eval_bracket(w, 2, 1, 0, f) == Scalar::from_int(f, -1));
  CHECK(eval_bracket(w, 2, 2, 0, f).is_zero());
  for (int t = 0; t < h - 2; ++t) w = shift(w, 1);
  CHECK(w.diff(2, 1) == 1 - h);
  CHECK(eval_bracket(w, 2, 1, -1, f).is_zero());
  w = shift(w, 1);
  CHECK(eval_bracket(w, 2, 1, 0, f).is_zero());
  CHECK_FALSE(eval_bracket(w, 2, 1, -1, f).is_zero());
}

TEST_CASE("brackets are invariant under global shifts") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 5);
  const WeightVector a({3, -1, 4});
  const WeightVector b({10, 6, 11});
  CHECK(a.equivalent(b));
  for (int j = 1; j <= 3; ++j)
    for (int l = 1; l <= 3; ++l) CHECK(eval_bracket(a, j, l, 1, f) == eval_bracket(b, j, l, 1, f));
  CHECK(q_power(f, 2 * 5 * a.diff(1, 2)).is_one());
}
