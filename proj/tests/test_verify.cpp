#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symedge/corpus.hpp"
#include "symedge/symbolic.hpp"
#include "symedge/verify.hpp"

using namespace symedge;

namespace {

Corpus only(std::initializer_list<const char*> ids) {
  Corpus c;
  for (auto id : ids) c.push_back(corpus_entry(id));
  return c;
}

const SuiteCase& find_case(const SuiteReport& r, const std::string& instance) {
  for (const auto& c : r.cases)
    if (c.instance == instance) return c;
  FAIL("no case " << instance);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("corpus-files-match-builtin-corpus", "[verify][corpus]") {
  const std::filesystem::path dir = SYMEDGE_CORPUS_DIR;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".edges") ++files;
  CHECK(files == builtin_corpus().size());
  for (const auto& e : builtin_corpus()) {
    INFO(e.id);
    CHECK(load_graph((dir / (e.id + ".edges")).string()) == e.graph);
  }
}

TEST_CASE("corpus-is-seeded-and-stable", "[verify][corpus]") {
  const auto& c = builtin_corpus();
  CHECK(std::count_if(c.begin(), c.end(), [](const CorpusEntry& e) { return e.random; }) == 20);
  std::uint64_t seed = kCorpusSeed;
  auto first = random_graph(seed, 7);
  CHECK(first == corpus_entry("random00").graph);
  for (const auto& e : c) CHECK(e.graph.vertex_count() <= (e.random ? 7u : 10u));
}

TEST_CASE("decomposition-suite-examples", "[verify]") {
  auto r = suite_decomposition(only({"c3", "c5_plus_edge", "c7"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c3 s=4").pass);
  CHECK(find_case(r, "c5_plus_edge s=3").pass);
  CHECK(find_case(r, "c7 s=3").pass);
}

TEST_CASE("colon-w-suite", "[verify]") {
  auto r = suite_colon_w(only({"c5_whiskered", "c3", "c5_path"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c5_whiskered k=1").pass);
  CHECK(find_case(r, "c3 k=2").pass);
  auto& ce = find_case(r, "c5_path k=2");
  CHECK(ce.pass);
  CHECK(ce.claim.find("z^2") != std::string::npos);
  CHECK(ce.lhs != ce.rhs);
}

TEST_CASE("colon-symbolic-suite", "[verify]") {
  auto r = suite_colon_symbolic(only({"c5_path", "c5_whiskered", "c3"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c5_path s=3").lhs == "(y, x5, x4, x3, x2, x1)");
  CHECK(find_case(r, "c3 s=4").pass);
}

TEST_CASE("intersection-suite", "[verify]") {
  auto r = suite_intersection_m2s(only({"c5_whiskered", "c7", "c5_path"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c7 s=4").pass);
  CHECK(find_case(r, "c5_path s=3").claim.find("x1*x2*x3*x4*x5*z") != std::string::npos);
}

TEST_CASE("lemma-IsJ-suite", "[verify]") {
  auto r = suite_lemma_IsJ(only({"c3", "c5", "c5_whisker1"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c5 s=3").pass);
  CHECK(find_case(r, "c5 s=6").pass);
  CHECK(find_case(r, "c3 s=4").pass);
}

TEST_CASE("regularity-suite-and-budget", "[verify]") {
  auto r = suite_regularity(only({"c3", "c5", "c5_whisker1"}));
  CHECK(r.pass());
  CHECK(find_case(r, "c5 s=3").lhs == "reg I^(s)=6, reg I^s=6");
  auto tiny = suite_regularity(only({"c5"}), BettiBudget{5, 16});
  CHECK(tiny.pass());
  for (const auto& c : tiny.cases) CHECK(c.skipped);
}

TEST_CASE("report-json-is-deterministic", "[verify][json]") {
  auto a = suite_lemma_IsJ(only({"c3"}));
  auto b = suite_lemma_IsJ(only({"c3"}));
  CHECK(a.to_json().dump() == b.to_json().dump());
  auto j = a.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["seed"] == kCorpusSeed);
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(a.to_json(true).contains("wall_seconds"));
}

TEST_CASE("suite-dispatch", "[verify]") {
  CHECK(suites().size() == 6);
  CHECK(run_suites("lemma_IsJ", only({"c3"})).size() == 1);
  CHECK_THROWS_AS(run_suites("nope", only({"c3"})), std::invalid_argument);
}
