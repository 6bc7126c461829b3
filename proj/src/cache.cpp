#include "qzm/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qzm/errors.hpp"

namespace fs = std::filesystem;

namespace qzm {

namespace {

nlohmann::json encode_vec(const SparseVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : v) arr.push_back(nlohmann::json::array({k, c.encode()}));
  return arr;
}

SparseVec decode_vec(const FieldSpec& f, const nlohmann::json& j) {
  SparseVec v;
  for (const auto& e : j) {
    const auto k = e.at(0).get<std::uint32_t>();
    if (!v.empty() && v.back().first >= k) throw UsageError("sparse vector indices not increasing");
    Scalar c = Scalar::decode(f, e.at(1));
    if (c.is_zero()) throw UsageError("explicit zero in sparse vector");
    v.emplace_back(k, std::move(c));
  }
  return v;
}

nlohmann::json encode_word(const Word& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : w.letters()) arr.push_back(nlohmann::json::array({int(x.row), int(x.flavor)}));
  return arr;
}

Word decode_word(const nlohmann::json& j, int n) {
  std::vector<Letter> letters;
  for (const auto& e : j) letters.push_back(make_letter(Chirality::Unbarred, e.at(0).get<int>(), e.at(1).get<int>(), n));
  return Word(Chirality::Unbarred, std::move(letters));
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string cache_key(const FockConfig& cfg, const Content& top) {
  return "n=" + std::to_string(cfg.n) + ";" + cfg.field->tag() + ";" + to_string(Chirality::Unbarred) + ";" +
         to_string(top);
}

std::string cache_file_name(const std::string& key) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
  return os.str();
}

nlohmann::json encode_basis(const FockConfig& cfg, const QuotientBasis& qb) {
  nlohmann::json j;
  j["format"] = kBasisFormat;
  j["epsilon"] = tag(cfg.epsilon);
  j["n"] = cfg.n;
  j["field"] = cfg.field->tag();
  j["chirality"] = to_string(Chirality::Unbarred);
  j["top"] = qb.top;
  j["word_order"] = "length, then letters right to left by (row, flavor)";
  j["generators"] = qb.generators;
  j["relation_rows"] = qb.relation_rows;
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t k = 0; k < qb.basis.size(); ++k) {
    const auto& o = qb.origin[k];
    basis.push_back({{"word", encode_word(qb.basis[k])},
                     {"origin", o.vacuum ? nlohmann::json("vacuum")
                                         : nlohmann::json::array({o.row, o.flavor, o.lower_index})}});
  }
  j["basis"] = basis;
  nlohmann::json action = nlohmann::json::object();
  for (int i = 1; i <= cfg.n; ++i) {
    for (int a = 1; a <= cfg.n; ++a) {
      const auto& cols = qb.action[static_cast<std::size_t>((i - 1) * cfg.n + (a - 1))];
      if (cols.empty()) continue;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : cols) arr.push_back(encode_vec(c));
      action[std::to_string(i) + "," + std::to_string(a)] = arr;
    }
  }
  j["action"] = action;
  j["vacuum"] = qb.vacuum ? encode_vec(*qb.vacuum) : nlohmann::json(nullptr);
  nlohmann::json embed = nlohmann::json::array();
  for (const auto& e : qb.embed) embed.push_back(encode_vec(e));
  j["embed"] = embed;
  return j;
}

QuotientBasis decode_basis(const FockConfig& cfg, const nlohmann::json& j) {
  try {
    if (j.at("format") != kBasisFormat) throw UsageError("unknown record format");
    if (j.at("epsilon") != tag(cfg.epsilon)) throw UsageError("epsilon convention mismatch");
    if (j.at("n") != cfg.n || j.at("field") != cfg.field->tag()) throw UsageError("field/n mismatch");
    QuotientBasis qb;
    qb.top = j.at("top").get<Content>();
    if (static_cast<int>(qb.top.size()) != cfg.n) throw UsageError("content length mismatch");
    qb.generators = j.at("generators").get<std::size_t>();
    qb.relation_rows = j.at("relation_rows").get<std::size_t>();
    for (const auto& b : j.at("basis")) {
      qb.basis.push_back(decode_word(b.at("word"), cfg.n));
      QuotientBasis::Origin o;
      if (b.at("origin").is_string()) {
        o.vacuum = true;
      } else {
        o.row = b.at("origin").at(0).get<int>();
        o.flavor = b.at("origin").at(1).get<int>();
        o.lower_index = b.at("origin").at(2).get<std::uint32_t>();
      }
      qb.origin.push_back(o);
    }
    qb.action.assign(static_cast<std::size_t>(cfg.n * cfg.n), {});
    for (const auto& [name, arr] : j.at("action").items()) {
      int i = 0, a = 0;
      if (std::sscanf(name.c_str(), "%d,%d", &i, &a) != 2 || i < 1 || i > cfg.n || a < 1 || a > cfg.n)
        throw UsageError("bad action key");
      auto& cols = qb.action[static_cast<std::size_t>((i - 1) * cfg.n + (a - 1))];
      for (const auto& c : arr) cols.push_back(decode_vec(*cfg.field, c));
    }
    if (!j.at("vacuum").is_null()) qb.vacuum = decode_vec(*cfg.field, j.at("vacuum"));
    for (const auto& e : j.at("embed")) qb.embed.push_back(decode_vec(*cfg.field, e));
    return qb;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed basis record: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

BasisCache::BasisCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

void BasisCache::write_atomic(const fs::path& path, const std::string& text) const {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << text;
  }
  fs::rename(tmp, path);
}

void BasisCache::update_index(const std::string& file, const std::string& key) {
  const fs::path idx = dir_ / "index.json";
  nlohmann::json j = nlohmann::json::object();
  if (fs::exists(idx)) {
    std::ifstream is(idx);
    try {
      is >> j;
    } catch (const nlohmann::json::exception&) {
      j = nlohmann::json::object();
    }
  }
  j[file] = key;
  write_atomic(idx, j.dump(2) + "\n");
}

void BasisCache::quarantine(const fs::path& file, const std::string& reason) {
  const fs::path qdir = dir_ / "quarantine";
  fs::create_directories(qdir);
  std::error_code ec;
  fs::rename(file, qdir / file.filename(), ec);
  quarantined_.push_back(file.filename().string() + ": " + reason);
}

std::optional<QuotientBasis> BasisCache::load(const FockConfig& cfg, const Content& top) {
  const std::string key = cache_key(cfg, top);
  const fs::path path = dir_ / cache_file_name(key);
  if (!fs::exists(path)) return std::nullopt;
  try {
    std::ifstream is(path);
    nlohmann::json j;
    is >> j;
    if (j.value("key", std::string()) != key) throw UsageError("key mismatch");
    QuotientBasis qb = decode_basis(cfg, j);
    if (qb.top != top) throw UsageError("top mismatch");
    return qb;
  } catch (const std::exception& e) {
    quarantine(path, e.what());
    return std::nullopt;
  }
}

void BasisCache::store(const FockConfig& cfg, const QuotientBasis& qb) {
  const std::string key = cache_key(cfg, qb.top);
  const std::string name = cache_file_name(key);
  nlohmann::json j = encode_basis(cfg, qb);
  j["key"] = key;
  write_atomic(dir_ / name, j.dump() + "\n");
  update_index(name, key);
}

std::vector<CacheEntry> BasisCache::list() const {
  std::vector<CacheEntry> out;
  if (!fs::exists(dir_)) return out;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file() || e.path().extension() != ".json" || e.path().filename() == "index.json") continue;
    CacheEntry ce;
    ce.file = e.path().filename().string();
    try {
      std::ifstream is(e.path());
      nlohmann::json j;
      is >> j;
      ce.key = j.value("key", std::string("?"));
      ce.dimension = j.at("basis").size();
    } catch (const std::exception&) {
      ce.key = "<unreadable>";
    }
    out.push_back(ce);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
  return out;
}

std::vector<ValidationResult> BasisCache::validate(const FockConfig& cfg) {
  std::vector<ValidationResult> out;
  for (const auto& entry : list()) {
    ValidationResult vr;
    vr.file = entry.file;
    vr.key = entry.key;
    const fs::path path = dir_ / entry.file;
    try {
      std::ifstream is(path);
      nlohmann::json j;
      is >> j;
      if (j.at("n") != cfg.n || j.at("field") != cfg.field->tag()) {
        vr.ok = true;
        vr.detail = "skipped (other parameters)";
        out.push_back(vr);
        continue;
      }
      if (j.at("format") != kBasisFormat) throw UsageError("unknown record format");
      if (j.at("epsilon") != tag(cfg.epsilon)) throw UsageError("epsilon convention mismatch");
      if (j.value("key", std::string()) != cache_key(cfg, j.at("top").get<Content>()))
        throw UsageError("key does not match record contents");
      const QuotientBasis cached = decode_basis(cfg, j);

      FockModule fresh(cfg, Chirality::Unbarred);
      const auto recomputed = fresh.family(cached.top);
      if (encode_basis(cfg, *recomputed) != encode_basis(cfg, cached)) throw UsageError("record differs from recomputation");

      // Re-reduce one relation instance through the cache-backed module.
      FockModule backed(cfg, Chirality::Unbarred);
      backed.attach_cache(std::make_shared<BasisCache>(dir_));
      std::string sample = "no instance in budget";
      if (fresh.family_word_count(cached.top) <= cfg.budget) {
        backed.for_each_relation_instance(cached.top, [&](RelationInstance&& r) {
          if (!backed.is_zero(r.row)) throw UsageError("sampled " + to_string(r.kind) + " instance does not reduce to zero");
          sample = "sampled " + to_string(r.kind) + " instance reduces to zero";
          return false;
        });
      }
      vr.ok = true;
      vr.detail = "matches recomputation; " + sample;
    } catch (const std::exception& e) {
      vr.ok = false;
      vr.detail = e.what();
      quarantine(path, e.what());
    }
    out.push_back(vr);
  }
  return out;
}

std::size_t BasisCache::purge() {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.is_regular_file() && e.path().extension() == ".json") {
      fs::remove(e.path());
      if (e.path().filename() != "index.json") ++removed;
    }
  }
  return removed;
}

}  // namespace qzm
