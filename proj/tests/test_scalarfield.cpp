#include <random>

#include "doctest.h"
#include "qzm/errors.hpp"
#include "qzm/scalar.hpp"

using namespace qzm;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(10) == ints({1, -1, 1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(14) == 6);
}

TEST_CASE("field h=4: inverse of q and [2]") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  CHECK(f.degree == 4);
  CHECK(q_power(f, -1) == -q_power(f, 3));
  CHECK(q_int(f, 2) == q_power(f, 1) - q_power(f, 3));
  CHECK(q_power(f, 4) == Scalar::from_int(f, -1));
  CHECK(q_int(f, 4).is_zero());
  CHECK(q_int(f, 3) == q_int(f, 1));
}

TEST_CASE("q-integer identities for h = 3..8") {
  for (int h = 3; h <= 8; ++h) {
    CAPTURE(h);
    const FieldSpec& f = make_field(FieldMode::RootOfUnity, h);
    CHECK(q_int(f, h).is_zero());
    for (long m = -3 * h; m <= 3 * h; ++m) {
      CAPTURE(m);
      CHECK(q_int(f, h - m) == q_int(f, m));
      CHECK(q_int(f, -m) == -q_int(f, m));
      CHECK(q_int(f, m + 2 * h) == q_int(f, m));
      CHECK(q_int(f, m).is_zero() == (m % h == 0));
      CHECK(q_int(f, 2) * q_int(f, m) == q_int(f, m + 1) + q_int(f, m - 1));
    }
  }
}

TEST_CASE("generic q: [m] vanishes only at m = 0") {
  const FieldSpec& f = make_field(FieldMode::GenericQ);
  CHECK_FALSE(f.root_of_unity());
  for (long m = -12; m <= 12; ++m) CHECK(q_int(f, m).is_zero() == (m == 0));
  CHECK(q_int(f, 2) * q_int(f, 5) == q_int(f, 6) + q_int(f, 4));
  const Scalar x = q_int(f, 3) / q_int(f, 2);
  CHECK(x * q_int(f, 2) == q_int(f, 3));
  CHECK(q_factorial(f, 3) == q_int(f, 2) * q_int(f, 3));
}

TEST_CASE("field axioms on seeded samples") {
  for (const FieldSpec* f : {&make_field(FieldMode::RootOfUnity, 5), &make_field(FieldMode::GenericQ)}) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto sample = [&] {
      Scalar s = Scalar::zero(*f);
      for (int j = -2; j <= 2; ++j) s += Scalar::from_int(*f, d(rng)) * q_power(*f, j);
      return s;
    };
    for (int t = 0; t < 20; ++t) {
      const Scalar a = sample(), b = sample(), c = sample();
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("serialization round trip and errors") {
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 6);
  const Scalar x = q_int(f, 3) * q_power(f, 2) + Scalar::from_rational(f, mpq_class(1, 3));
  CHECK(Scalar::decode(f, x.encode()) == x);
  const FieldSpec& g = make_field(FieldMode::GenericQ);
  const Scalar y = q_int(g, 3) / q_int(g, 4);
  CHECK(Scalar::decode(g, y.encode()) == y);
  CHECK_THROWS_AS(make_field(FieldMode::RootOfUnity, 2), InvalidParameter);
  CHECK_THROWS(Scalar::zero(f).inverse());
}
