#include "qzm/qalgebra.hpp"

#include <algorithm>
#include <set>

#include "qzm/errors.hpp"

namespace qzm {

namespace {

Letter letter(Chirality c, int row, int flavor) {
  return Letter{c, static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(flavor)};
}

void raise_top(std::map<Content, Content>& tops, const Content& c) {
  const Content key = FockModule::chain_key(c);
  auto it = tops.find(key);
  if (it == tops.end())
    tops.emplace(key, c);
  else if (c[0] > it->second[0])
    it->second = c;
}

}  // namespace

// ---------------------------------------------------------------------------

TensorState TensorState::vacuum(const FieldSpec& f, int n) {
  TensorState s(f, n);
  s.add(Word(Chirality::Unbarred), Word(Chirality::Barred), Scalar::one(f));
  return s;
}

TensorState TensorState::product(const ChiralState& u, const ChiralState& b) {
  if (u.chirality() != Chirality::Unbarred || b.chirality() != Chirality::Barred)
    throw UsageError("tensor product expects (unbarred, barred) factors");
  if (&u.field() != &b.field()) throw UsageError("tensor factors over different fields");
  TensorState s(u.field(), u.n());
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wb, cb] : b.terms()) s.add(wu, wb, cu * cb);
  return s;
}

void TensorState::add(const Word& u, const Word& b, const Scalar& c) {
  if (u.chirality() != Chirality::Unbarred || b.chirality() != Chirality::Barred)
    throw UsageError("tensor terms are (unbarred, barred) word pairs");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(WordPair{u, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorState& TensorState::operator+=(const TensorState& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorState& TensorState::operator-=(const TensorState& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorState& TensorState::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::vector<std::pair<Content, Content>> TensorState::contents() const {
  std::set<std::pair<Content, Content>> seen;
  for (const auto& [k, c] : terms_) seen.emplace(k.first.content(n_), k.second.content(n_));
  return {seen.begin(), seen.end()};
}

std::string TensorState::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.to_string() + ") " + k.first.to_string() + " (x) " + k.second.to_string();
  }
  return s;
}

TensorState apply_Q(int i, int j, const TensorState& s) {
  const int n = s.n();
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidParameter("Q index out of range");
  TensorState out(s.field(), n);
  for (const auto& [k, c] : s.terms()) {
    for (int a = 1; a <= n; ++a)
      out.add(k.first.prepend(letter(Chirality::Unbarred, i, a)), k.second.prepend(letter(Chirality::Barred, j, a)), c);
  }
  return out;
}

TensorState apply_Q_power(int i, int j, int times, const TensorState& s) {
  TensorState r = s;
  for (int t = 0; t < times; ++t) r = apply_Q(i, j, r);
  return r;
}

TensorState apply_monomial(const QMonomial& m, const TensorState& s) {
  TensorState r = s;
  for (auto it = m.rbegin(); it != m.rend(); ++it) r = apply_Q(it->first, it->second, r);
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(GrowthOutcome g) {
  switch (g) {
    case GrowthOutcome::Zero: return "Zero";
    case GrowthOutcome::Proportional: return "Proportional";
    case GrowthOutcome::InSpan: return "InSpan";
    case GrowthOutcome::Outside: return "Outside";
  }
  return "?";
}

std::string to_string(CommutationResult r) {
  switch (r) {
    case CommutationResult::Holds: return "holds";
    case CommutationResult::Fails: return "fails";
    case CommutationResult::Vacuous: return "vacuous";
  }
  return "?";
}

bool GrowthCheck::matches_prediction() const {
  if (predicted == Growth::Diagram)
    return outcome == GrowthOutcome::Proportional && coefficient && !coefficient->is_zero();
  return outcome == GrowthOutcome::Zero;
}

// ---------------------------------------------------------------------------

QAlgebra::QAlgebra(FockConfig cfg, int h)
    : chiral_(cfg, Chirality::Unbarred), antichiral_(chiral_.mirror()), h_(h) {
  if (cfg.field->root_of_unity() && cfg.field->h != h)
    throw InvalidParameter("h does not match the root-of-unity field");
  if (h < cfg.n + 1) throw InvalidParameter("h must be >= n+1");
}

ChainTops QAlgebra::tops_of(const std::vector<const TensorState*>& states) const {
  ChainTops t;
  for (const auto* s : states) {
    for (const auto& [k, c] : s->terms()) {
      raise_top(t.unbarred, k.first.content(n()));
      raise_top(t.barred, k.second.content(n()));
    }
  }
  return t;
}

std::vector<TensorBlock> QAlgebra::blocks(const TensorState& s) const { return blocks(s, tops_of({&s})); }

std::vector<TensorBlock> QAlgebra::blocks(const TensorState& s, const ChainTops& tops) const {
  std::map<std::pair<Content, Content>, TensorBlock> out;
  for (const auto& [k, c] : s.terms()) {
    const auto tu = tops.unbarred.find(FockModule::chain_key(k.first.content(n())));
    const auto tb = tops.barred.find(FockModule::chain_key(k.second.content(n())));
    if (tu == tops.unbarred.end() || tb == tops.barred.end()) throw UsageError("tensor word outside the given chain tops");
    auto [it, inserted] = out.try_emplace({tu->second, tb->second});
    TensorBlock& blk = it->second;
    if (inserted) {
      blk.top = tu->second;
      blk.bar_top = tb->second;
      blk.dim = chiral_.family(blk.top)->dimension();
      blk.bar_dim = antichiral_.family(blk.bar_top)->dimension();
    }
    const SparseVec ru = chiral_.reduce_word(k.first, blk.top);
    if (ru.empty()) continue;
    const SparseVec rb = antichiral_.reduce_word(k.second, blk.bar_top);
    for (const auto& [x, cx] : ru) {
      for (const auto& [y, cy] : rb) {
        auto [e, fresh] = blk.entries.try_emplace({x, y}, c * cx * cy);
        if (!fresh) e->second += c * cx * cy;
      }
    }
  }
  std::vector<TensorBlock> result;
  for (auto& [key, blk] : out) {
    std::erase_if(blk.entries, [](const auto& e) { return e.second.is_zero(); });
    result.push_back(std::move(blk));
  }
  return result;
}

bool QAlgebra::is_zero_tensor(const TensorState& s) const {
  for (const auto& blk : blocks(s))
    if (!blk.entries.empty()) return false;
  return true;
}

TensorState QAlgebra::reduce(const TensorState& s) const {
  TensorState r(field(), n());
  for (const auto& blk : blocks(s)) {
    if (blk.entries.empty()) continue;
    const auto fu = chiral_.family(blk.top);
    const auto fb = antichiral_.family(blk.bar_top);
    for (const auto& [xy, c] : blk.entries) {
      std::vector<Letter> lb = fb->basis[xy.second].letters();
      for (auto& x : lb) x.chirality = Chirality::Barred;
      r.add(fu->basis[xy.first], Word(Chirality::Barred, std::move(lb)), c);
    }
  }
  return r;
}

std::size_t QAlgebra::block_size(const TensorState& s) const {
  std::size_t m = 0;
  for (const auto& blk : blocks(s)) m = std::max(m, blk.dim * blk.bar_dim);
  return m;
}

std::optional<Scalar> QAlgebra::proportionality(const TensorState& a, const TensorState& b) const {
  const ChainTops tops = tops_of({&a, &b});
  const auto ba = blocks(a, tops);
  const auto bb = blocks(b, tops);
  std::map<std::pair<Content, Content>, const TensorBlock*> index_a;
  for (const auto& blk : ba) index_a[{blk.top, blk.bar_top}] = &blk;
  std::optional<Scalar> c;
  for (const auto& blk : bb) {
    if (blk.entries.empty()) continue;
    const auto it = index_a.find({blk.top, blk.bar_top});
    const auto& [key, vb] = *blk.entries.begin();
    if (it == index_a.end()) return std::nullopt;
    const auto ea = it->second->entries.find(key);
    c = (ea == it->second->entries.end()) ? Scalar::zero(field()) : ea->second / vb;
    break;
  }
  if (!c) throw UsageError("proportionality against a zero state");
  return is_zero_tensor(a - (*c) * b) ? c : std::nullopt;
}

bool QAlgebra::diagonal_weights(const TensorState& s) const {
  for (const auto& [u, b] : s.contents()) {
    const WeightVector wu = content_weight(u);
    const WeightVector wb = content_weight(b);
    if (!wu.equivalent(wb)) return false;
  }
  return true;
}

TensorState QAlgebra::vector_of_diagram(const YoungDiagram& y) const {
  if (!y.admissible(n(), h_)) throw InvalidParameter("diagram " + y.to_string() + " is not admissible");
  {
    std::lock_guard lock(mu_);
    auto it = diagram_vectors_.find(y);
    if (it != diagram_vectors_.end()) return it->second;
  }
  TensorState s = vacuum();
  for (int r = 1; r <= y.rows(); ++r) s = apply_Q_power(r, r, y.part(r), s);
  std::lock_guard lock(mu_);
  diagram_vectors_.emplace(y, s);
  return s;
}

std::vector<FPrimeEntry> QAlgebra::fprime_entries() const {
  std::vector<FPrimeEntry> out;
  for (const auto& y : enumerate_diagrams(n(), h_)) {
    const TensorState v = vector_of_diagram(y);
    out.push_back({y, !is_zero_tensor(v), block_size(v)});
  }
  return out;
}

int QAlgebra::fprime_dimension() const {
  int d = 0;
  for (const auto& e : fprime_entries()) d += e.nonzero ? 1 : 0;
  return d;
}

GrowthCheck QAlgebra::check_growth(const YoungDiagram& y, int j) const {
  GrowthCheck g;
  g.diagram = y;
  g.row = j;
  const GrowthResult pred = grow(y, j, n(), h_);
  g.predicted = pred.kind;
  const TensorState r = apply_Q(j, j, vector_of_diagram(y));
  g.block_size = block_size(r);
  if (is_zero_tensor(r)) {
    g.outcome = GrowthOutcome::Zero;
    return g;
  }
  if (pred.kind == Growth::Diagram) {
    g.target = *pred.grown;
    g.coefficient = proportionality(r, vector_of_diagram(*pred.grown));
    g.outcome = g.coefficient ? GrowthOutcome::Proportional : GrowthOutcome::Outside;
    return g;
  }
  // The result has a single (content, bar content); the only F' vector in its
  // chain pair is the diagram read off the chain key.
  g.outcome = GrowthOutcome::Outside;
  Content c = y.parts();
  c.resize(static_cast<std::size_t>(n()), 0);
  ++c[static_cast<std::size_t>(j - 1)];
  const Content key = FockModule::chain_key(c);
  if (key.back() != 0) return g;
  Content parts(key.begin(), key.end() - 1);
  if (!std::is_sorted(parts.rbegin(), parts.rend())) return g;
  const YoungDiagram target(parts);
  if (!target.admissible(n(), h_)) return g;
  const TensorState v = vector_of_diagram(target);
  if (is_zero_tensor(v)) return g;
  if (auto c2 = proportionality(r, v)) {
    g.outcome = GrowthOutcome::InSpan;
    g.target = target;
    g.coefficient = *c2;
  }
  return g;
}

CommutationResult QAlgebra::check_dynamical_commutation(const TensorState& v, int i, int j) const {
  const auto cs = v.contents();
  if (cs.size() != 1) throw UsageError("dynamical commutation needs a state of definite weight");
  if (!is_zero_tensor(apply_Q(i, j, v)) && !is_zero_tensor(apply_Q(j, i, v))) return CommutationResult::Vacuous;
  const WeightVector w = content_weight(cs.front().first);
  const Scalar lhs = eval_bracket(w, i, j, 1, field());
  const Scalar rhs = eval_bracket(w, i, j, -1, field());
  const TensorState d = lhs * apply_Q(i, i, apply_Q(j, j, v)) - rhs * apply_Q(j, j, apply_Q(i, i, v));
  return is_zero_tensor(d) ? CommutationResult::Holds : CommutationResult::Fails;
}

bool QAlgebra::check_offdiagonal_annihilation(const YoungDiagram& y) const {
  const TensorState v = reduce(vector_of_diagram(y));
  for (int j = 1; j <= n(); ++j)
    for (int l = 1; l <= n(); ++l)
      if (j != l && !is_zero_tensor(apply_Q(j, l, v))) return false;
  return true;
}

HookVectors QAlgebra::hook_vectors(int i) const {
  if (i < 2 || i > n() - 1) throw InvalidParameter("hook row must satisfy 2 <= i <= n-1");
  TensorState v = apply_Q_power(1, 1, h_ - i, vacuum());
  for (int r = 2; r <= i - 1; ++r) v = apply_Q(r, r, v);
  TensorState v_h = apply_Q(i, i, apply_Q(1, 1, v));
  TensorState w_h = apply_Q(1, 1, apply_Q(i, i, v));
  return {std::move(v), std::move(v_h), std::move(w_h)};
}

std::pair<bool, bool> QAlgebra::check_hook_vanishing(int i) const {
  const HookVectors hv = hook_vectors(i);
  return {is_zero_tensor(hv.v_h), is_zero_tensor(hv.w_h)};
}

bool QAlgebra::check_rowcol_commutativity(const TensorState& s, int i, int j, int l) const {
  const TensorState row = apply_Q(i, j, apply_Q(i, l, s)) - apply_Q(i, l, apply_Q(i, j, s));
  const TensorState col = apply_Q(j, i, apply_Q(l, i, s)) - apply_Q(l, i, apply_Q(j, i, s));
  return is_zero_tensor(row) && is_zero_tensor(col);
}

}  // namespace qzm
