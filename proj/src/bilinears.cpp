#include "qzm/bilinears.hpp"

#include "qzm/errors.hpp"

namespace qzm {

namespace {

Word two_letters(Chirality c, int r1, int f1, int r2, int f2) {
  return Word(c, {Letter{c, static_cast<std::uint8_t>(r1), static_cast<std::uint8_t>(f1)},
                  Letter{c, static_cast<std::uint8_t>(r2), static_cast<std::uint8_t>(f2)}});
}

std::string label(const char* what, int i, int j, int a, int b) {
  return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

Content definite_content(const ChiralState& v) {
  if (v.empty()) throw UsageError("identity check on the zero state");
  const Content c = v.terms().begin()->first.content(v.n());
  for (const auto& [w, x] : v.terms())
    if (w.content(v.n()) != c) throw UsageError("state has no definite content");
  return c;
}

}  // namespace

ChiralState apply(const WordOperator& op, const ChiralState& s) {
  if (op.chirality != s.chirality()) throw UsageError("operator chirality does not match the state");
  ChiralState out(s.field(), s.chirality(), s.n());
  for (const auto& [u, c] : op.terms) {
    ChiralState t = apply_word(u, s);
    t *= c;
    out += t;
  }
  return out;
}

TensorState apply(const WordOperator& op_u, const WordOperator& op_b, const TensorState& s) {
  if (op_u.chirality != Chirality::Unbarred || op_b.chirality != Chirality::Barred)
    throw UsageError("tensor operator expects (unbarred, barred) factors");
  TensorState out(s.field(), s.n());
  for (const auto& [k, c] : s.terms())
    for (const auto& [u, cu] : op_u.terms)
      for (const auto& [b, cb] : op_b.terms) out.add(u.concat(k.first), b.concat(k.second), c * cu * cb);
  return out;
}

std::string to_string(BilinearKind k) { return k == BilinearKind::A ? "A" : "S"; }

WordOperator bilinear(BilinearKind kind, Chirality c, int i, int j, int alpha, int beta, int n, const FieldSpec& f) {
  for (int x : {i, j, alpha, beta})
    if (x < 1 || x > n) throw InvalidParameter("bilinear index out of range");
  const Scalar two = q_int(f, 2);
  if (two.is_zero()) throw InvalidParameter("[2] = 0: bilinears unsupported");
  const Scalar inv2 = two.inverse();
  WordOperator op;
  op.chirality = c;
  if (alpha == beta) {
    if (kind == BilinearKind::S) op.terms.emplace_back(two_letters(c, i, alpha, j, alpha), Scalar::one(f));
    return op;
  }
  const int e = epsilon_sign(alpha, beta);
  if (kind == BilinearKind::A) {
    op.terms.emplace_back(two_letters(c, i, alpha, j, beta), q_power(f, -e) * inv2);
    op.terms.emplace_back(two_letters(c, i, beta, j, alpha), -inv2);
  } else {
    op.terms.emplace_back(two_letters(c, i, alpha, j, beta), q_power(f, e) * inv2);
    op.terms.emplace_back(two_letters(c, i, beta, j, alpha), inv2);
  }
  return op;
}

ChiralState apply_bilinear(BilinearKind kind, int i, int j, int alpha, int beta, const ChiralState& s) {
  return apply(bilinear(kind, s.chirality(), i, j, alpha, beta, s.n(), s.field()), s);
}

void IdentityTally::record(bool ok, const std::string& what) {
  ++checked;
  if (!ok) {
    if (failed == 0) first_failure = what;
    ++failed;
  }
}

IdentityTally& IdentityTally::operator+=(const IdentityTally& o) {
  if (failed == 0 && o.failed > 0) first_failure = o.first_failure;
  checked += o.checked;
  failed += o.failed;
  return *this;
}

IdentityTally check_split_identities(const FockModule& m, const ChiralState& v) {
  IdentityTally t;
  const int n = m.n();
  const FieldSpec& f = m.field();
  const Chirality c = v.chirality();
  auto A = [&](int i, int j, int a, int b) { return apply_bilinear(BilinearKind::A, i, j, a, b, v); };
  auto S = [&](int i, int j, int a, int b) { return apply_bilinear(BilinearKind::S, i, j, a, b, v); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          const ChiralState prod = apply_word(two_letters(c, i, a, j, b), v);
          t.record(m.is_zero(A(i, j, a, b) + S(i, j, a, b) - prod), label("split", i, j, a, b));
          const int e = epsilon_sign(a, b);
          t.record(m.is_zero(S(i, j, a, b) - q_power(f, e) * S(i, j, b, a)), label("S-relabel", i, j, a, b));
          t.record(m.is_zero(A(i, j, a, b) + q_power(f, -e) * A(i, j, b, a)), label("A-relabel", i, j, a, b));
          if (i == j) t.record(m.is_zero(A(i, i, a, b)), label("A-diagonal-row", i, i, a, b));
          if (a == b) t.record(m.is_zero(S(i, j, a, a) - S(j, i, a, a)), label("S-diagonal-flavor", i, j, a, a));
        }
      }
    }
  }
  return t;
}

IdentityTally check_dynamical_AS(const FockModule& m, const ChiralState& v) {
  IdentityTally t;
  const int n = m.n();
  const FieldSpec& f = m.field();
  const WeightVector w = content_weight(definite_content(v));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const Scalar plus = eval_bracket(w, i, j, 1, f);
      const Scalar minus = eval_bracket(w, i, j, -1, f);
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          const ChiralState lhs = plus * apply_bilinear(BilinearKind::A, i, j, a, b, v);
          const ChiralState rhs = minus * apply_bilinear(BilinearKind::A, j, i, a, b, v);
          t.record(m.is_zero(lhs + rhs), label("A-exchange", i, j, a, b));
          t.record(m.is_zero(apply_bilinear(BilinearKind::S, i, j, a, b, v) - apply_bilinear(BilinearKind::S, j, i, a, b, v)),
                   label("S-exchange", i, j, a, b));
        }
      }
    }
  }
  return t;
}

bool check_contraction_vanishing(const QAlgebra& q, const TensorState& s, int i, int j, int l, int m) {
  const int n = q.n();
  const FieldSpec& f = q.field();
  TensorState sa(f, n), as(f, n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      sa += apply(bilinear(BilinearKind::S, Chirality::Unbarred, i, j, a, b, n, f),
                  bilinear(BilinearKind::A, Chirality::Barred, l, m, a, b, n, f), s);
      as += apply(bilinear(BilinearKind::A, Chirality::Unbarred, i, j, a, b, n, f),
                  bilinear(BilinearKind::S, Chirality::Barred, l, m, a, b, n, f), s);
    }
  }
  return q.is_zero_tensor(sa) && q.is_zero_tensor(as);
}

QQParts decompose_QQ(int i, int l, int j, int m, const TensorState& s) {
  const int n = s.n();
  const FieldSpec& f = s.field();
  QQParts p{TensorState(f, n), TensorState(f, n)};
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      p.ss += apply(bilinear(BilinearKind::S, Chirality::Unbarred, i, j, a, b, n, f),
                    bilinear(BilinearKind::S, Chirality::Barred, l, m, a, b, n, f), s);
      p.aa += apply(bilinear(BilinearKind::A, Chirality::Unbarred, i, j, a, b, n, f),
                    bilinear(BilinearKind::A, Chirality::Barred, l, m, a, b, n, f), s);
    }
  }
  return p;
}

}  // namespace qzm
