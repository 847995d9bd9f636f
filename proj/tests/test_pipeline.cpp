#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "terracini/catalog.hpp"
#include "terracini/certify.hpp"
#include "terracini/report.hpp"

using namespace terracini;

TEST_CASE("certificate for a non-defective Veronese surface") {
  auto c = cmd_certify(resolve_variety("veronese:2:5"), 6);
  CHECK(c.conclusion == Conclusion::identifiable_certified);
  CHECK(c.inequality.lhs == 20);
  CHECK(c.inequality.holds);
  REQUIRE(c.nondefective);
  CHECK(c.nondefective->verdict == Verdict::fills_ambient);
  REQUIRE(c.gauss);
  CHECK(c.gauss->gauss_rank == 2);
}

TEST_CASE("certificate for a secant variety of a curve") {
  auto c = cmd_certify(resolve_variety("secant:rnc:11:2"), 2);
  CHECK(c.conclusion == Conclusion::not_identifiable_witnessed);
  REQUIRE(c.gauss);
  CHECK(c.gauss->degenerate);
  REQUIRE(c.witnesses);
  CHECK(c.witnesses->witnesses.size() == 3);
  CHECK(c.witnesses->all_verified);
  CHECK(c.notes.size() >= 2);
}

TEST_CASE("certificate stops at the dimension inequality") {
  auto c = cmd_certify(resolve_variety("veronese:2:6"), 9);
  CHECK(c.conclusion == Conclusion::inconclusive);
  CHECK(c.inequality.lhs == 29);
  CHECK_FALSE(c.inequality.holds);
  CHECK_FALSE(c.nondefective);
  CHECK_FALSE(c.gauss);
  REQUIRE(c.facts.size() == 1);
  CHECK_FALSE(c.facts[0].identifiable);
}

TEST_CASE("certificate stops at a defective secant") {
  // sec_2 of V^2_2 is defective, so h = 1 cannot be certified this way
  auto c = cmd_certify(make_veronese(2, 2), 1);
  CHECK(c.conclusion == Conclusion::inconclusive);
  REQUIRE(c.nondefective);
  CHECK(c.nondefective->verdict == Verdict::defective_probable);
  CHECK_FALSE(c.gauss);
}

TEST_CASE("certified conclusions agree with the bound ranges") {
  for (int h = 1; h <= 3; ++h) {
    auto c = cmd_certify(make_segre_veronese({1, 1, 1}, {2, 2, 2}), h);
    CAPTURE(h);
    CHECK(c.conclusion == Conclusion::identifiable_certified);
  }
}

TEST_CASE("certificate JSON is deterministic") {
  auto x = resolve_variety("veronese:2:4");
  SampleOptions opt;
  auto a = dump(envelope("certify", {{"variety", x.id}, {"h", 2}}, opt, to_json(cmd_certify(x, 2))));
  auto b = dump(envelope("certify", {{"variety", x.id}, {"h", 2}}, opt, to_json(cmd_certify(x, 2))));
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["result"]["conclusion"] == "identifiable-certified");
}

TEST_CASE("result cache round trip and corruption") {
  auto path = std::filesystem::temp_directory_path() / "terracini_cache_test.jsonl";
  std::filesystem::remove(path);
  ResultCache cache(path.string());
  SampleOptions opt;
  auto key = ResultCache::key("defect", {{"variety", "rnc:5"}, {"h", 2}}, opt);
  CHECK_FALSE(cache.lookup(key));
  Json report = envelope("defect", {{"variety", "rnc:5"}, {"h", 2}}, opt, to_json(secant_dim(make_rnc(5), 2)));
  cache.store(key, report);
  auto hit = cache.lookup(key);
  REQUIRE(hit);
  CHECK(dump(*hit) == dump(report));
  SampleOptions other;
  other.seed = 99;
  CHECK_FALSE(cache.lookup(ResultCache::key("defect", {{"variety", "rnc:5"}, {"h", 2}}, other)));
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
  }
  CHECK_FALSE(cache.lookup(key));
  std::filesystem::remove(path);
}

TEST_CASE("polytope report") {
  auto j = polytope_report(simplex_points(2, 2));
  CHECK(j["lattice_points"] == 6);
  CHECK(j["b_size"] == 10);
  CHECK(j["rho"] == 2);
  CHECK(j["quotient_rank"] == 0);
  CHECK(j["max_hyperplane"] == 3);
}
