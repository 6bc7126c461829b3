#include "qzm/chiral_fock.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "qzm/cache.hpp"
#include "qzm/errors.hpp"

namespace qzm {

std::string tag(EpsilonConvention e) {
  return e == EpsilonConvention::PlusLength ? "(-q)^+l" : "(-q)^-l";
}

EpsilonConvention epsilon_from_tag(const std::string& s) {
  if (s == "(-q)^+l") return EpsilonConvention::PlusLength;
  if (s == "(-q)^-l") return EpsilonConvention::MinusLength;
  throw UsageError("unknown epsilon convention tag '" + s + "'");
}

std::string to_string(Template t) {
  switch (t) {
    case Template::R1: return "R1";
    case Template::R2: return "R2";
    case Template::R3: return "R3";
    case Template::R4: return "R4";
    case Template::R5: return "R5";
    case Template::R6: return "R6";
  }
  return "?";
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

int permutation_sign(const std::vector<int>& perm) { return inversion_count(perm) % 2 == 0 ? 1 : -1; }

Scalar quantum_epsilon(const std::vector<int>& perm, EpsilonConvention e, const FieldSpec& f) {
  const int l = inversion_count(perm);
  const Scalar sign = Scalar::from_int(f, l % 2 == 0 ? 1 : -1);
  return sign * q_power(f, e == EpsilonConvention::PlusLength ? l : -l);
}

std::vector<DetTerm> determinant_expansion(int n, const FieldSpec& f, EpsilonConvention e) {
  std::vector<int> rows(static_cast<std::size_t>(n));
  std::iota(rows.begin(), rows.end(), 1);
  std::vector<DetTerm> out;
  do {
    const int rsign = permutation_sign(rows);
    std::vector<int> fl(static_cast<std::size_t>(n));
    std::iota(fl.begin(), fl.end(), 1);
    do {
      DetTerm t;
      t.coeff = Scalar::from_int(f, rsign) * quantum_epsilon(fl, e, f);
      for (std::size_t k = 0; k < rows.size(); ++k) t.letters.emplace_back(rows[k], fl[k]);
      out.push_back(std::move(t));
    } while (std::next_permutation(fl.begin(), fl.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

bool is_multiple_of_ones(const Content& c) {
  return std::all_of(c.begin(), c.end(), [&](int x) { return x == c.front(); });
}

Content add_row(const Content& c, int row, int times) {
  Content r = c;
  r[static_cast<std::size_t>(row - 1)] += times;
  return r;
}

Content add_ones(const Content& c, int times) {
  Content r = c;
  for (auto& x : r) x += times;
  return r;
}

bool nonnegative(const Content& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

std::string to_string(const Content& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

namespace {

struct MemoKey {
  int m;
  Word w;
  bool operator==(const MemoKey& o) const { return m == o.m && w == o.w; }
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const noexcept { return WordHash{}(k.w) * 131u + static_cast<std::size_t>(k.m); }
};

}  // namespace

struct FockModule::Store {
  std::recursive_mutex mu;
  std::map<Content, std::shared_ptr<const QuotientBasis>> families;
  std::unordered_map<MemoKey, SparseVec, MemoHash> memo;
  std::shared_ptr<BasisCache> cache;
  std::vector<DetTerm> det;
};

FockModule::FockModule(FockConfig cfg, Chirality chirality)
    : FockModule(cfg, chirality, std::make_shared<Store>()) {}

FockModule::FockModule(FockConfig cfg, Chirality chirality, std::shared_ptr<Store> store)
    : cfg_(cfg), chirality_(chirality), store_(std::move(store)) {
  if (cfg_.field == nullptr) throw UsageError("FockConfig without field");
  if (cfg_.n < 2) throw InvalidParameter("Fock module requires n >= 2");
  if (cfg_.field->root_of_unity() && cfg_.field->h <= cfg_.n)
    throw InvalidParameter("h = k + n must exceed n (k >= 1)");
}

FockModule FockModule::mirror() const {
  return FockModule(cfg_, chirality_ == Chirality::Unbarred ? Chirality::Barred : Chirality::Unbarred, store_);
}

void FockModule::attach_cache(std::shared_ptr<BasisCache> cache) {
  std::lock_guard lock(store_->mu);
  store_->cache = std::move(cache);
}

std::shared_ptr<const QuotientBasis> FockModule::family(const Content& top) const {
  if (static_cast<int>(top.size()) != cfg_.n || !nonnegative(top))
    throw InvalidParameter("invalid family content " + to_string(top));
  std::lock_guard lock(store_->mu);
  auto it = store_->families.find(top);
  if (it != store_->families.end()) return it->second;
  std::shared_ptr<const QuotientBasis> fam;
  if (store_->cache) {
    if (auto loaded = store_->cache->load(cfg_, top)) fam = std::make_shared<const QuotientBasis>(std::move(*loaded));
  }
  if (!fam) {
    fam = compute(top);
    if (store_->cache) store_->cache->store(cfg_, *fam);
  }
  store_->families.emplace(top, fam);
  return fam;
}

std::shared_ptr<const QuotientBasis> FockModule::compute(const Content& top) const {
  const int n = cfg_.n;
  const FieldSpec& f = *cfg_.field;
  auto li = [n](int row, int flavor) { return static_cast<std::size_t>((row - 1) * n + (flavor - 1)); };

  auto out = std::make_shared<QuotientBasis>();
  out->top = top;
  out->action.assign(static_cast<std::size_t>(n * n), {});

  // Generators: x * (basis of family top - e_x), plus the vacuum word.
  struct Gen {
    QuotientBasis::Origin origin;
    Word word;
  };
  std::vector<Gen> gens;
  std::vector<std::shared_ptr<const QuotientBasis>> lower(static_cast<std::size_t>(n + 1));
  std::vector<std::uint32_t> offset(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    if (top[static_cast<std::size_t>(i - 1)] < 1) continue;
    lower[static_cast<std::size_t>(i)] = family(add_row(top, i, -1));
    const auto& low = *lower[static_cast<std::size_t>(i)];
    for (int a = 1; a <= n; ++a) {
      offset[li(i, a)] = static_cast<std::uint32_t>(gens.size());
      const Letter x{Chirality::Unbarred, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(a)};
      for (std::uint32_t k = 0; k < low.basis.size(); ++k)
        gens.push_back({{false, i, a, k}, low.basis[k].prepend(x)});
    }
  }
  const bool multiple = is_multiple_of_ones(top);
  std::uint32_t vac_gen = 0;
  if (multiple) {
    vac_gen = static_cast<std::uint32_t>(gens.size());
    gens.push_back({{true, 0, 0, 0}, Word(Chirality::Unbarred)});
  }
  const auto G = static_cast<std::uint32_t>(gens.size());
  out->generators = G;
  if (G > cfg_.budget) throw BudgetExceeded("family " + to_string(top) + " generators", G, cfg_.budget);

  // Column index = pivot priority: largest word first.
  std::vector<std::uint32_t> by_word(G);
  std::iota(by_word.begin(), by_word.end(), 0u);
  std::sort(by_word.begin(), by_word.end(), [&](std::uint32_t a, std::uint32_t b) { return gens[b].word < gens[a].word; });
  std::vector<std::uint32_t> col_of(G);
  for (std::uint32_t c = 0; c < G; ++c) col_of[by_word[c]] = c;

  auto gen_vec = [&](int row, int flavor, const SparseVec& v) {
    SparseVec r;
    r.reserve(v.size());
    const std::uint32_t off = offset[li(row, flavor)];
    for (const auto& [k, c] : v) r.emplace_back(col_of[off + k], c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };
  // Letter (row, flavor) applied to v in family T, result in family T + e_row.
  auto apply = [&](int row, int flavor, const SparseVec& v, const Content& T) {
    const auto fam = family(add_row(T, row));
    return combine(fam->action[li(row, flavor)], v);
  };

  std::vector<SparseVec> rows;
  auto push = [&](SparseAccumulator& acc) {
    SparseVec r = acc.take();
    if (!r.empty()) rows.push_back(std::move(r));
  };

  // Quadratic exchange relations with the pair at the left end.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Content T = add_row(add_row(top, i, -1), j, -1);
      if (!nonnegative(T)) continue;
      const auto low = family(T);
      const WeightVector w = content_weight(T);
      for (std::uint32_t k = 0; k < low->basis.size(); ++k) {
        const SparseVec e = unit_vec(k, f);
        if (i != j) {
          const long p = w.diff(i, j);
          const Scalar c1 = q_int(f, p - 1);
          const Scalar c2 = -q_int(f, p);
          for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
              SparseAccumulator acc;
              if (a != b) {
                // R1: a^j_b a^i_a [p-1] - a^i_a a^j_b [p] + a^i_b a^j_a q^{eps_ab p}
                acc.add(gen_vec(j, b, apply(i, a, e, T)), c1);
                acc.add(gen_vec(i, a, apply(j, b, e, T)), c2);
                acc.add(gen_vec(i, b, apply(j, a, e, T)), q_power(f, epsilon_sign(a, b) * p));
                push(acc);
              } else if (i < j) {
                // R2: a^j_a a^i_a - a^i_a a^j_a
                acc.add(gen_vec(j, a, apply(i, a, e, T)), Scalar::one(f));
                acc.add(gen_vec(i, a, apply(j, a, e, T)), Scalar::from_int(f, -1));
                push(acc);
              }
            }
          }
        } else {
          // R3: a^i_a a^i_b - q^{eps_ab} a^i_b a^i_a
          for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
              SparseAccumulator acc;
              acc.add(gen_vec(i, a, apply(i, b, e, T)), Scalar::one(f));
              acc.add(gen_vec(i, b, apply(i, a, e, T)), -q_power(f, epsilon_sign(a, b)));
              push(acc);
            }
          }
        }
      }
    }
  }

  // R4: (a^i_a)^h = 0 at the root of unity.
  if (f.root_of_unity()) {
    for (int i = 1; i <= n; ++i) {
      const Content T = add_row(top, i, -f.h);
      if (!nonnegative(T)) continue;
      const auto low = family(T);
      for (int a = 1; a <= n; ++a) {
        for (std::uint32_t k = 0; k < low->basis.size(); ++k) {
          SparseVec v = unit_vec(k, f);
          Content cur = T;
          for (int t = 0; t < f.h - 1; ++t) {
            v = apply(i, a, v, cur);
            cur = add_row(cur, i);
          }
          SparseAccumulator acc;
          acc.add(gen_vec(i, a, v), Scalar::one(f));
          push(acc);
        }
      }
    }
  }

  // Embedding of family top - 1 in generator coordinates.
  const Content below = add_ones(top, -1);
  std::vector<SparseVec> embed_gen;
  if (nonnegative(below)) {
    const auto low = family(below);
    for (std::uint32_t k = 0; k < low->basis.size(); ++k) {
      const auto& o = low->origin[k];
      if (o.vacuum) {
        embed_gen.push_back(SparseVec{{col_of[vac_gen], Scalar::one(f)}});
      } else {
        const auto mid = lower[static_cast<std::size_t>(o.row)];
        embed_gen.push_back(gen_vec(o.row, o.flavor, mid->embed[o.lower_index]));
      }
    }
    // R5: det(a) v = D_q(p) v, cleared of 1/[n]!.
    {
      std::lock_guard lock(store_->mu);
      if (store_->det.empty()) store_->det = determinant_expansion(n, f, cfg_.epsilon);
    }
    const Scalar dcoef = q_factorial(f, n) * quantum_discriminant(content_weight(below), f);
    for (std::uint32_t k = 0; k < low->basis.size(); ++k) {
      SparseAccumulator acc;
      for (const auto& term : store_->det) {
        SparseVec v = unit_vec(k, f);
        Content cur = below;
        for (std::size_t t = term.letters.size(); t-- > 1;) {
          v = apply(term.letters[t].first, term.letters[t].second, v, cur);
          cur = add_row(cur, term.letters[t].first);
        }
        acc.add(gen_vec(term.letters[0].first, term.letters[0].second, v), term.coeff);
      }
      acc.add(embed_gen[k], -dcoef);
      push(acc);
    }
  }

  // R6: a^i_a |0> = 0 for i >= 2.
  for (int i = 2; i <= n; ++i) {
    const Content T = add_row(top, i, -1);
    if (!nonnegative(T) || !is_multiple_of_ones(T)) continue;
    const auto low = family(T);
    for (int a = 1; a <= n; ++a) {
      SparseAccumulator acc;
      acc.add(gen_vec(i, a, *low->vacuum), Scalar::one(f));
      push(acc);
    }
  }

  out->relation_rows = rows.size();
  const Echelon ech = eliminate(std::move(rows), G);

  // Basis words = free generators, ascending word order.
  std::vector<std::uint32_t> free_gens;
  for (std::uint32_t c : ech.free_vars) free_gens.push_back(by_word[c]);
  std::sort(free_gens.begin(), free_gens.end(), [&](std::uint32_t a, std::uint32_t b) { return gens[a].word < gens[b].word; });
  std::vector<std::uint32_t> basis_index_of_col(G, 0);
  for (std::uint32_t b = 0; b < free_gens.size(); ++b) {
    basis_index_of_col[col_of[free_gens[b]]] = b;
    out->basis.push_back(gens[free_gens[b]].word);
    out->origin.push_back(gens[free_gens[b]].origin);
  }
  auto reduce_col = [&](std::uint32_t c) -> SparseVec {
    if (!ech.is_pivot[c]) return unit_vec(basis_index_of_col[c], f);
    return remap(ech.normal_form[c], basis_index_of_col);
  };
  auto reduce_gen_vec = [&](const SparseVec& v) {
    SparseAccumulator acc;
    for (const auto& [c, x] : v) acc.add(reduce_col(c), x);
    return acc.take();
  };

  for (int i = 1; i <= n; ++i) {
    if (!lower[static_cast<std::size_t>(i)]) continue;
    const auto dim = lower[static_cast<std::size_t>(i)]->basis.size();
    for (int a = 1; a <= n; ++a) {
      auto& act = out->action[li(i, a)];
      act.reserve(dim);
      for (std::uint32_t k = 0; k < dim; ++k) act.push_back(reduce_col(col_of[offset[li(i, a)] + k]));
    }
  }
  if (multiple) {
    out->vacuum = reduce_col(col_of[vac_gen]);
    if (out->vacuum->empty())
      throw RelationSetInconsistency("vacuum collapses in family " + to_string(top) + " with epsilon convention " +
                                     tag(cfg_.epsilon));
  }
  for (const auto& v : embed_gen) out->embed.push_back(reduce_gen_vec(v));
  return out;
}

// ---------------------------------------------------------------------------

Word FockModule::unbarred(const Word& w) const {
  if (w.chirality() != chirality_) throw UsageError("word chirality does not match the module");
  if (chirality_ == Chirality::Unbarred) return w;
  std::vector<Letter> letters = w.letters();
  for (auto& x : letters) x.chirality = Chirality::Unbarred;
  return Word(Chirality::Unbarred, std::move(letters));
}

Content FockModule::chain_key(const Content& c) {
  const int m = *std::min_element(c.begin(), c.end());
  return add_ones(c, -m);
}

SparseVec FockModule::reduce_word_m(const Word& w, int m) const {
  MemoKey key{m, w};
  {
    std::lock_guard lock(store_->mu);
    auto it = store_->memo.find(key);
    if (it != store_->memo.end()) return it->second;
  }
  SparseVec v;
  if (w.empty()) {
    v = *family(Content(static_cast<std::size_t>(cfg_.n), m))->vacuum;
  } else {
    const Word rest = w.sub(1, w.size() - 1);
    const SparseVec low = reduce_word_m(rest, m);
    const Content T = add_ones(rest.content(cfg_.n), m);
    const auto fam = family(add_row(T, w[0].row));
    v = combine(fam->action[static_cast<std::size_t>((w[0].row - 1) * cfg_.n + (w[0].flavor - 1))], low);
  }
  std::lock_guard lock(store_->mu);
  store_->memo.emplace(std::move(key), v);
  return v;
}

SparseVec FockModule::reduce_word(const Word& w, const Content& top) const {
  const Word u = unbarred(w);
  const Content c = u.content(cfg_.n);
  const int m = top[0] - c[0];
  for (std::size_t k = 0; k < c.size(); ++k)
    if (top[k] - c[k] != m) throw UsageError("word " + w.to_string() + " does not lie under family " + to_string(top));
  if (m < 0) throw UsageError("family top below word content");
  return reduce_word_m(u, m);
}

std::map<Content, SparseVec> FockModule::coordinates(const ChiralState& s) const {
  std::map<Content, Content> top_of_chain;
  for (const auto& [w, c] : s.terms()) {
    const Content wc = w.content(cfg_.n);
    const Content key = chain_key(wc);
    auto it = top_of_chain.find(key);
    if (it == top_of_chain.end())
      top_of_chain.emplace(key, wc);
    else if (wc[0] > it->second[0])
      it->second = wc;
  }
  std::vector<Content> tops;
  for (const auto& [k, t] : top_of_chain) tops.push_back(t);
  return coordinates(s, tops);
}

std::map<Content, SparseVec> FockModule::coordinates(const ChiralState& s, const std::vector<Content>& tops) const {
  if (s.chirality() != chirality_) throw UsageError("state chirality does not match the module");
  std::map<Content, Content> top_of_chain;
  for (const auto& t : tops) top_of_chain[chain_key(t)] = t;
  std::map<Content, SparseAccumulator> acc;
  for (const auto& [w, c] : s.terms()) {
    const Content wc = w.content(cfg_.n);
    auto it = top_of_chain.find(chain_key(wc));
    if (it == top_of_chain.end()) throw UsageError("no family top given for word " + w.to_string());
    acc[it->second].add(reduce_word(w, it->second), c);
  }
  std::map<Content, SparseVec> out;
  for (const auto& t : tops) out[t];
  for (auto& [t, a] : acc) out[t] = a.take();
  return out;
}

ChiralState FockModule::state_of(const Content& top, const SparseVec& coords) const {
  const auto fam = family(top);
  ChiralState r(*cfg_.field, chirality_, cfg_.n);
  for (const auto& [k, c] : coords) {
    std::vector<Letter> letters = fam->basis[k].letters();
    for (auto& x : letters) x.chirality = chirality_;
    r.add(Word(chirality_, std::move(letters)), c);
  }
  return r;
}

ChiralState FockModule::reduce(const ChiralState& s) const {
  ChiralState r(*cfg_.field, chirality_, cfg_.n);
  for (const auto& [top, v] : coordinates(s)) r += state_of(top, v);
  return r;
}

bool FockModule::is_zero(const ChiralState& s) const {
  for (const auto& [top, v] : coordinates(s))
    if (!v.empty()) return false;
  return true;
}

std::size_t FockModule::embedding_rank(const Content& top) const {
  const auto fam = family(top);
  if (fam->embed.empty()) return 0;
  return eliminate(fam->embed, static_cast<std::uint32_t>(fam->dimension())).rank;
}

// ---------------------------------------------------------------------------

namespace {

/// Componentwise splits r = cu + cv.
void for_each_split(const Content& r, const std::function<void(const Content&, const Content&)>& fn) {
  Content cv(r.size(), 0);
  while (true) {
    Content cu(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) cu[k] = r[k] - cv[k];
    fn(cu, cv);
    std::size_t k = 0;
    while (k < r.size() && cv[k] == r[k]) cv[k++] = 0;
    if (k == r.size()) break;
    ++cv[k];
  }
}

}  // namespace

std::size_t FockModule::family_word_count(const Content& top) const {
  std::size_t total = 0;
  for (Content c = top; nonnegative(c); c = add_ones(c, -1)) {
    long len = 0;
    for (int x : c) len += x;
    // multinomial * n^len
    mpz_class count = 1;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(len));
    count = fact;
    for (int x : c) {
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(x));
      count /= fact;
    }
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(cfg_.n), static_cast<unsigned long>(len));
    count *= pw;
    if (count > mpz_class(static_cast<unsigned long>(1) << 62)) return static_cast<std::size_t>(1) << 62;
    total += count.get_ui();
  }
  return total;
}

namespace {
struct StopEnumeration {};
}  // namespace

void FockModule::for_each_relation_instance(const Content& top,
                                            const std::function<bool(RelationInstance&&)>& user_fn) const {
  auto fn = [&](RelationInstance&& r) {
    if (!user_fn(std::move(r))) throw StopEnumeration{};
  };
  try {
    enumerate_instances(top, fn);
  } catch (const StopEnumeration&) {
  }
}

void FockModule::enumerate_instances(const Content& top,
                                     const std::function<void(RelationInstance&&)>& fn) const {
  const int n = cfg_.n;
  const FieldSpec& f = *cfg_.field;
  const std::size_t words = family_word_count(top);
  if (words > cfg_.budget) throw BudgetExceeded("relation instances of family " + to_string(top), words, cfg_.budget);
  const Chirality ch = chirality_;
  auto L = [&](int row, int flavor) { return make_letter(ch, row, flavor, n); };
  auto word2 = [&](Letter x, Letter y) { return Word(ch, {x, y}); };

  std::vector<DetTerm> det = determinant_expansion(n, f, cfg_.epsilon);

  for (Content c = top; nonnegative(c); c = add_ones(c, -1)) {
    // Quadratic templates.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Content r = add_row(add_row(c, i, -1), j, -1);
        if (!nonnegative(r)) continue;
        for_each_split(r, [&](const Content& cu, const Content& cv) {
          const auto us = words_of_content(ch, cu, n);
          const auto vs = words_of_content(ch, cv, n);
          const long p = content_weight(cv).diff(i, j);
          for (const auto& v : vs) {
            for (const auto& u : us) {
              for (int a = 1; a <= n; ++a) {
                for (int b = 1; b <= n; ++b) {
                  if (i != j && a != b) {
                    ChiralState s(f, ch, n);
                    s.add(u.concat(word2(L(j, b), L(i, a))).concat(v), q_int(f, p - 1));
                    s.add(u.concat(word2(L(i, a), L(j, b))).concat(v), -q_int(f, p));
                    s.add(u.concat(word2(L(i, b), L(j, a))).concat(v), q_power(f, epsilon_sign(a, b) * p));
                    fn({Template::R1, std::move(s)});
                  } else if (i != j && a == b) {
                    ChiralState s(f, ch, n);
                    s.add(u.concat(word2(L(j, a), L(i, a))).concat(v), Scalar::one(f));
                    s.add(u.concat(word2(L(i, a), L(j, a))).concat(v), Scalar::from_int(f, -1));
                    fn({Template::R2, std::move(s)});
                  } else if (i == j && a != b) {
                    ChiralState s(f, ch, n);
                    s.add(u.concat(word2(L(i, a), L(i, b))).concat(v), Scalar::one(f));
                    s.add(u.concat(word2(L(i, b), L(i, a))).concat(v), -q_power(f, epsilon_sign(a, b)));
                    fn({Template::R3, std::move(s)});
                  }
                }
              }
            }
          }
        });
      }
    }
    // R4
    if (f.root_of_unity()) {
      for (int i = 1; i <= n; ++i) {
        const Content r = add_row(c, i, -f.h);
        if (!nonnegative(r)) continue;
        for_each_split(r, [&](const Content& cu, const Content& cv) {
          const auto us = words_of_content(ch, cu, n);
          const auto vs = words_of_content(ch, cv, n);
          for (int a = 1; a <= n; ++a) {
            const Word power(ch, std::vector<Letter>(static_cast<std::size_t>(f.h), L(i, a)));
            for (const auto& u : us)
              for (const auto& v : vs) fn({Template::R4, ChiralState::of_word(f, u.concat(power).concat(v), n, Scalar::one(f))});
          }
        });
      }
    }
    // R5
    const Content r5 = add_ones(c, -1);
    if (nonnegative(r5)) {
      for_each_split(r5, [&](const Content& cu, const Content& cv) {
        const auto us = words_of_content(ch, cu, n);
        const auto vs = words_of_content(ch, cv, n);
        const Scalar dcoef = q_factorial(f, n) * quantum_discriminant(content_weight(cv), f);
        for (const auto& u : us) {
          for (const auto& v : vs) {
            ChiralState s(f, ch, n);
            for (const auto& t : det) {
              std::vector<Letter> mid;
              for (const auto& [row, fl] : t.letters) mid.push_back(L(row, fl));
              s.add(u.concat(Word(ch, std::move(mid))).concat(v), t.coeff);
            }
            s.add(u.concat(v), -dcoef);
            fn({Template::R5, std::move(s)});
          }
        }
      });
    }
    // R6
    for (const auto& w : words_of_content(ch, c, n)) {
      if (!w.empty() && w[w.size() - 1].row >= 2) fn({Template::R6, ChiralState::of_word(f, w, n, Scalar::one(f))});
    }
  }
}

std::vector<RelationInstance> FockModule::relation_instances(const Content& top) const {
  std::vector<RelationInstance> out;
  for_each_relation_instance(top, [&](RelationInstance&& r) {
    out.push_back(std::move(r));
    return true;
  });
  return out;
}

}  // namespace qzm
