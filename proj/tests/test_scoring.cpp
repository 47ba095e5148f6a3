#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "udc/scoring.hpp"

using namespace udc;

namespace {

CatalogueEntry entry_with(std::initializer_list<std::string> keys) {
  CatalogueEntry e;
  e.id = "e";
  for (const auto& key : keys) {
    e.fields[key] = {TextValue{"v", std::nullopt}};
  }
  return e;
}

}  // namespace

TEST_CASE("completion on full level 1") {
  CatalogueEntry e;
  e.id = "full-l1";
  for (const PropertySpec& spec : properties_by(builtin_model(), 1)) {
    e.fields[spec.key] = {TextValue{"x", std::nullopt}};
  }
  CompletionReport r = completion(builtin_model(), e);
  CHECK(r.per_level.at(1) == Fraction{7, 7});
  CHECK(r.per_level.at(1).value() == 1.0);
  CHECK(r.overall == Fraction{7, 57});
}

TEST_CASE("completion of an empty entry is zero everywhere") {
  CatalogueEntry e;
  e.id = "empty";
  CompletionReport r = completion(builtin_model(), e);
  for (const auto& [level, frac] : r.per_level) CHECK(frac.filled == 0);
  for (const auto& [cat, frac] : r.per_category) CHECK(frac.filled == 0);
  CHECK(r.overall == Fraction{0, 57});
  CHECK(r.per_level.size() == 6);
  CHECK(r.per_category.size() == 7);
}

TEST_CASE("explicit false booleans count as filled") {
  CatalogueEntry e;
  e.id = "b";
  e.fields["containsIndigenousData"] = {BoolValue{false}};
  CompletionReport r = completion(builtin_model(), e);
  CHECK(r.per_level.at(4) == Fraction{1, 6});
  CHECK(r.filled_keys == std::set<std::string>{"containsIndigenousData"});
}

TEST_CASE("whitespace-only text does not fill a field") {
  CatalogueEntry e;
  e.id = "w";
  e.fields["title"] = {TextValue{"   ", std::nullopt}};
  CompletionReport r = completion(builtin_model(), e);
  CHECK(r.overall.filled == 0);
}

TEST_CASE("level/category partition of filled counts") {
  std::mt19937 rng(99);
  auto keys = [] {
    std::vector<std::string> all;
    for (const auto& [key, spec] : builtin_model().properties) all.push_back(key);
    return all;
  }();

  for (int trial = 0; trial < 20; ++trial) {
    CatalogueEntry e;
    e.id = "p";
    std::uniform_int_distribution<std::size_t> count(0, keys.size());
    std::shuffle(keys.begin(), keys.end(), rng);
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      e.fields[keys[i]] = {TextValue{"v", std::nullopt}};
    }
    CompletionReport r = completion(builtin_model(), e);
    int by_level = 0, by_cat = 0;
    for (const auto& [level, frac] : r.per_level) by_level += frac.filled;
    for (const auto& [cat, frac] : r.per_category) by_cat += frac.filled;
    REQUIRE(by_level == r.overall.filled);
    REQUIRE(by_cat == r.overall.filled);
    REQUIRE(r.overall.filled == static_cast<int>(n));
  }
}

TEST_CASE("monotonicity: adding a filled field never decreases a fraction") {
  std::mt19937 rng(1234);
  std::vector<std::string> keys;
  for (const auto& [key, spec] : builtin_model().properties) keys.push_back(key);
  std::shuffle(keys.begin(), keys.end(), rng);

  CatalogueEntry e;
  e.id = "m";
  CompletionReport prev = completion(builtin_model(), e);
  for (const std::string& key : keys) {
    e.fields[key] = {TextValue{"v", std::nullopt}};
    CompletionReport next = completion(builtin_model(), e);
    for (const auto& [level, frac] : next.per_level) {
      REQUIRE(frac.value() >= prev.per_level.at(level).value());
    }
    for (const auto& [cat, frac] : next.per_category) {
      REQUIRE(frac.value() >= prev.per_category.at(cat).value());
    }
    REQUIRE(next.overall.value() >= prev.overall.value());
    prev = next;
  }
  CHECK(prev.overall == Fraction{57, 57});
}

TEST_CASE("modality-aware denominators") {
  CatalogueEntry e;
  e.id = "t";
  e.modality = Modality::Tabular;
  e.fields["rows"] = {PosIntValue{10}};

  CompletionReport raw = completion(builtin_model(), e, false);
  CHECK(raw.per_level.at(6) == Fraction{1, 8});
  CHECK(raw.overall.total == 57);

  CompletionReport aware = completion(builtin_model(), e, true);
  CHECK(aware.per_level.at(6) == Fraction{1, 5});
  CHECK(aware.per_category.at(Category::Statistical) == Fraction{1, 3});
  CHECK(aware.overall.total == 54);

  e.modality = Modality::Rdf;
  e.fields.clear();
  e.fields["triples"] = {PosIntValue{5}};
  CompletionReport rdf_aware = completion(builtin_model(), e, true);
  CHECK(rdf_aware.per_level.at(6) == Fraction{1, 5});

  e.modality = Modality::Both;
  CompletionReport both = completion(builtin_model(), e, true);
  CHECK(both.per_level.at(6).total == 8);
}

TEST_CASE("corpus_report") {
  SECTION("single report: means equal it, std zero") {
    CatalogueEntry e = entry_with({"title", "description"});
    CorpusReport corpus = corpus_report({completion(builtin_model(), e)});
    CHECK(corpus.n == 1);
    CHECK_THAT(corpus.per_level.at(1).mean_pct,
               Catch::Matchers::WithinAbs(2.0 / 7.0 * 100.0, 1e-9));
    for (const auto& [level, stats] : corpus.per_level) {
      CHECK(stats.std_pp == 0.0);
    }
  }

  SECTION("two entries at 100% and 0%: mean 50, population std 50") {
    CatalogueEntry full;
    full.id = "full";
    for (const PropertySpec& spec : properties_by(builtin_model(), 1)) {
      full.fields[spec.key] = {TextValue{"x", std::nullopt}};
    }
    CatalogueEntry empty;
    empty.id = "empty";
    CorpusReport corpus = corpus_report({completion(builtin_model(), full),
                                         completion(builtin_model(), empty)});
    CHECK_THAT(corpus.per_level.at(1).mean_pct, Catch::Matchers::WithinAbs(50.0, 1e-9));
    CHECK_THAT(corpus.per_level.at(1).std_pp, Catch::Matchers::WithinAbs(50.0, 1e-9));
  }

  SECTION("empty corpus") {
    CHECK_THROWS_MATCHES(corpus_report({}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::EmptyCorpus;
                         }));
  }

  SECTION("bounds") {
    std::mt19937 rng(5);
    std::vector<CompletionReport> reports;
    std::vector<std::string> keys;
    for (const auto& [key, spec] : builtin_model().properties) keys.push_back(key);
    for (int i = 0; i < 40; ++i) {
      CatalogueEntry e;
      e.id = "e" + std::to_string(i);
      std::shuffle(keys.begin(), keys.end(), rng);
      std::uniform_int_distribution<std::size_t> count(0, keys.size());
      for (std::size_t k = 0, n = count(rng); k < n; ++k) {
        e.fields[keys[k]] = {TextValue{"v", std::nullopt}};
      }
      reports.push_back(completion(builtin_model(), e));
    }
    CorpusReport corpus = corpus_report(reports);
    for (const auto& [level, stats] : corpus.per_level) {
      CHECK(stats.mean_pct >= 0.0);
      CHECK(stats.mean_pct <= 100.0);
      CHECK(stats.std_pp >= 0.0);
    }
  }
}

TEST_CASE("split_level4") {
  SECTION("non-Indigenous fields only") {
    std::vector<CompletionReport> reports;
    for (int i = 0; i < 5; ++i) {
      CatalogueEntry e = entry_with(
          {"containsIndividualData", "containsIdentifiableIndividualData", "hasPolicy"});
      e.id = "e" + std::to_string(i);
      reports.push_back(completion(builtin_model(), e));
    }
    Level4Split split = split_level4(reports);
    CHECK(split.indigenous_pct == 0.0);
    CHECK(split.other_pct == 100.0);
  }

  SECTION("single entry with all six level-4 fields") {
    CatalogueEntry e;
    e.id = "all";
    for (const PropertySpec& spec : properties_by(builtin_model(), 4)) {
      e.fields[spec.key] = {TextValue{"v", std::nullopt}};
    }
    Level4Split split = split_level4({completion(builtin_model(), e)});
    CHECK(split.indigenous_pct == 100.0);
    CHECK(split.other_pct == 100.0);
  }

  SECTION("empty corpus") {
    CHECK_THROWS_AS(split_level4({}), Error);
  }
}
