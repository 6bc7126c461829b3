#include <random>

#include "doctest.h"
#include "qzm/bilinears.hpp"
#include "qzm/errors.hpp"
#include "qzm/suites.hpp"

using namespace qzm;

namespace {

FockConfig config(int n, const FieldSpec& f) {
  FockConfig c;
  c.n = n;
  c.field = &f;
  return c;
}

}  // namespace

TEST_CASE("bilinear definitions") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 5);
  const auto a = bilinear(BilinearKind::A, Chirality::Unbarred, 1, 2, 2, 1, 2, f);
  CHECK(a.terms.size() == 2);
  CHECK(bilinear(BilinearKind::A, Chirality::Unbarred, 1, 2, 1, 1, 2, f).terms.empty());
  CHECK(bilinear(BilinearKind::S, Chirality::Barred, 1, 2, 1, 1, 2, f).terms.size() == 1);
  CHECK_THROWS_AS(bilinear(BilinearKind::S, Chirality::Unbarred, 3, 1, 1, 1, 2, f), InvalidParameter);
}

TEST_CASE("split and exchange identities on vacuum-chain states") {
  for (const FieldSpec* f : {&make_field(FieldMode::RootOfUnity, 4), &make_field(FieldMode::GenericQ)}) {
    QAlgebra q(config(3, *f), 4);
    ChiralState v = ChiralState::vacuum(*f, Chirality::Unbarred, 3);
    for (int t = 0; t < 3; ++t) {
      const auto split = check_split_identities(q.chiral(), v);
      CHECK(split.passed());
      CHECK(split.checked > 0);
      const auto ex = check_dynamical_AS(q.chiral(), v);
      CHECK(ex.passed());
      v = apply_letter(make_letter(Chirality::Unbarred, 1, 1 + t, 3), v);
    }
  }
}

TEST_CASE("identities on seeded random states") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  QAlgebra q(config(2, f), 4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 3; ++t) {
    const TensorState s = random_tensor_state(rng, f, 2, 4);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l)
          for (int m = 1; m <= 2; ++m) {
            CHECK(check_contraction_vanishing(q, s, i, j, l, m));
            const QQParts p = decompose_QQ(i, l, j, m, s);
            CHECK(q.is_zero_tensor(p.ss + p.aa - apply_Q(i, l, apply_Q(j, m, s))));
          }
  }
}

TEST_CASE("S/A audit of the hook vectors, n = 3") {
  for (int k : {1, 2}) {
    const int h = 3 + k;
    QAlgebra q(config(3, make_field(FieldMode::RootOfUnity, h)), h);
    const HookVectors hv = q.hook_vectors(2);
    const QQParts vp = decompose_QQ(2, 2, 1, 1, hv.v);
    CHECK(q.is_zero_tensor(hv.v_h - vp.ss));
    CHECK(q.is_zero_tensor(vp.aa));
    const QQParts wp = decompose_QQ(1, 1, 2, 2, hv.v);
    CHECK(q.is_zero_tensor(hv.w_h - wp.aa));
    CHECK(q.is_zero_tensor(wp.ss));
  }
}

TEST_CASE("tally bookkeeping") {
  IdentityTally a, b;
  a.record(true, "x");
  b.record(false, "y");
  a += b;
  CHECK(a.checked == 2);
  CHECK(a.failed == 1);
  CHECK(a.first_failure == "y");
}
