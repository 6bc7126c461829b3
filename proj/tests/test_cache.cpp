#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "qzm/cache.hpp"
#include "qzm/errors.hpp"

using namespace qzm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qzm_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

FockConfig config(int n, const FieldSpec& f, EpsilonConvention e = kDefaultEpsilon) {
  FockConfig c;
  c.n = n;
  c.field = &f;
  c.epsilon = e;
  return c;
}

}  // namespace

TEST_CASE("empty cache lists nothing") {
  TempDir d;
  BasisCache cache(d.path);
  CHECK(cache.list().empty());
  CHECK(cache.purge() == 0);
}

TEST_CASE("basis round trip through json and disk") {
  TempDir d;
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  const FockConfig cfg = config(2, f);
  FockModule m(cfg, Chirality::Unbarred);
  const auto fam = m.family({2, 1});
  const QuotientBasis back = decode_basis(cfg, encode_basis(cfg, *fam));
  CHECK(back.basis == fam->basis);
  CHECK(encode_basis(cfg, back) == encode_basis(cfg, *fam));

  auto cache = std::make_shared<BasisCache>(d.path);
  FockModule stored(cfg, Chirality::Unbarred);
  stored.attach_cache(cache);
  const std::size_t dim = stored.family({2, 1})->dimension();
  CHECK(dim == fam->dimension());
  CHECK(!cache->list().empty());
  CHECK(fs::exists(d.path / "index.json"));

  FockModule reloaded(cfg, Chirality::Unbarred);
  reloaded.attach_cache(std::make_shared<BasisCache>(d.path));
  CHECK(reloaded.family({2, 1})->basis == fam->basis);

  for (const auto& v : cache->validate(cfg)) CHECK(v.ok);
  const std::size_t records = cache->list().size();
  CHECK(cache->purge() == records);
  CHECK(cache->list().empty());
}

TEST_CASE("convention mismatch is quarantined") {
  TempDir d;
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  const FockConfig plus = config(2, f, EpsilonConvention::PlusLength);
  FockModule m(plus, Chirality::Unbarred);
  BasisCache cache(d.path);
  cache.store(plus, *m.family({1, 0}));
  CHECK_THROWS_AS(decode_basis(config(2, f), encode_basis(plus, *m.family({1, 0}))), UsageError);
  const auto results = cache.validate(config(2, f));
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].ok);
  CHECK(cache.quarantined().size() == 1);
  CHECK(cache.list().empty());
}

TEST_CASE("corrupt record is quarantined on load") {
  TempDir d;
  const FieldSpec& f = make_field(FieldMode::RootOfUnity, 4);
  const FockConfig cfg = config(2, f);
  BasisCache cache(d.path);
  const fs::path file = d.path / cache_file_name(cache_key(cfg, {1, 0}));
  std::ofstream(file) << "{not json";
  CHECK_FALSE(cache.load(cfg, {1, 0}).has_value());
  CHECK(cache.quarantined().size() == 1);
  CHECK(cache_key(cfg, {2, 1}) == "n=2;h=4;" + to_string(Chirality::Unbarred) + ";(2,1)");
}
