#include "doctest.h"
#include "qzm/errors.hpp"
#include "qzm/qalgebra.hpp"

using namespace qzm;

namespace {

FockConfig config(int n, const FieldSpec& f) {
  FockConfig c;
  c.n = n;
  c.field = &f;
  return c;
}

}  // namespace

TEST_CASE("n = 2: F' has dimension h with single-row diagrams") {
  for (int k = 1; k <= 3; ++k) {
    const int h = k + 2;
    QAlgebra q(config(2, make_field(FieldMode::RootOfUnity, h)), h);
    CHECK(q.fprime_dimension() == h);
    for (const auto& e : q.fprime_entries()) {
      CHECK(e.nonzero);
      CHECK(e.diagram.rows() <= 1);
    }
  }
}

TEST_CASE("nilpotency of Q^1_1 at the root of unity only") {
  for (auto [n, k] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    const int h = n + k;
    QAlgebra q(config(n, make_field(FieldMode::RootOfUnity, h)), h);
    CHECK(q.is_zero_tensor(apply_Q_power(1, 1, h, q.vacuum())));
    CHECK_FALSE(q.is_zero_tensor(apply_Q_power(1, 1, h - 1, q.vacuum())));
  }
  QAlgebra g(config(2, make_field(FieldMode::GenericQ)), 3);
  CHECK_FALSE(g.is_zero_tensor(apply_Q_power(1, 1, 3, g.vacuum())));
}

TEST_CASE("full first row followed by row two vanishes") {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 1}}) {
    const int h = n + k;
    QAlgebra q(config(n, make_field(FieldMode::RootOfUnity, h)), h);
    CHECK(q.is_zero_tensor(apply_Q(2, 2, apply_Q_power(1, 1, h - 1, q.vacuum()))));
  }
}

TEST_CASE("n = 2: Q^2_2 Q^1_1 on the vacuum is a multiple of the vacuum") {
  for (const FieldSpec* f : {&make_field(FieldMode::RootOfUnity, 4), &make_field(FieldMode::GenericQ)}) {
    QAlgebra q(config(2, *f), 4);
    const auto c = q.proportionality(apply_Q(2, 2, apply_Q(1, 1, q.vacuum())), q.vacuum());
    REQUIRE(c.has_value());
    CHECK(*c == q_power(*f, 1) * q_int(*f, 2));
  }
}

TEST_CASE("growth on n = 2 matches the combinatorial prediction") {
  const int h = 4;
  QAlgebra q(config(2, make_field(FieldMode::RootOfUnity, h)), h);
  for (const auto& y : enumerate_diagrams(2, h)) {
    const auto g = q.check_growth(y, 1);
    CAPTURE(y.to_string());
    CHECK(g.matches_prediction());
    if (g.predicted == Growth::Diagram) CHECK(g.target == YoungDiagram({y.part(1) + 1}));
  }
}

TEST_CASE("off-diagonal annihilation and diagonal weights") {
  const int h = 4;
  QAlgebra q(config(3, make_field(FieldMode::RootOfUnity, h)), h);
  for (const auto& y : enumerate_diagrams(3, h)) {
    CAPTURE(y.to_string());
    CHECK(q.check_offdiagonal_annihilation(y));
    CHECK(q.diagonal_weights(q.vector_of_diagram(y)));
  }
  CHECK_THROWS_AS(q.vector_of_diagram(YoungDiagram({3, 1})), InvalidParameter);
}

TEST_CASE("hook vectors n = 3, k = 1: v_h vanishes") {
  const int h = 4;
  QAlgebra q(config(3, make_field(FieldMode::RootOfUnity, h)), h);
  CHECK(q.check_hook_vanishing(2).first);
  CHECK_THROWS_AS(q.hook_vectors(1), InvalidParameter);
}

TEST_CASE("tensor state arithmetic and reduction") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  QAlgebra q(config(2, f), 4);
  const TensorState v = apply_Q(1, 1, q.vacuum());
  CHECK(v.size() == 2);
  CHECK(q.is_zero_tensor(v - v));
  const TensorState r = q.reduce(v);
  CHECK(q.is_zero_tensor(r - v));
  CHECK(q.reduce(r) == r);
  CHECK(q.is_zero_tensor(apply_Q(1, 2, q.vacuum())));
  CHECK_THROWS_AS(apply_Q(3, 1, q.vacuum()), InvalidParameter);
}
