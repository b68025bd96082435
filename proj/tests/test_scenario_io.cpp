#include "atcalc/scenario_io.hpp"

#include "doc_gen.hpp"
#include "doctest.h"
#include "scenario_files.hpp"

using namespace atcalc;
using io::ScenarioError;

namespace {

ScenarioError::Kind error_kind(const std::string& text) {
  try {
    io::parse(text);
  } catch (const ScenarioError& e) {
    return e.kind();
  }
  FAIL("document was accepted: " << text);
  return ScenarioError::Kind::syntax;
}

const std::string kRawHeader =
    R"("system": {"states": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]], "initial": ["a"]})";

std::string raw_doc(const std::string& rest) { return "{" + kRawHeader + (rest.empty() ? "" : ", " + rest) + "}"; }

}  // namespace

TEST_CASE("shipped healthcare scenario matches the built-in encoding") {
  for (bool dlm : {false, true}) {
    const auto doc = io::parse(read_scenario(dlm ? "gdpr_dlm.scenario" : "gdpr.scenario"));
    REQUIRE(doc.infrastructure.has_value());
    const infra::Infrastructure from_file(doc.infrastructure->graph,
                                          std::make_shared<const infra::Rules>(doc.infrastructure->rules));
    CHECK(from_file == infra::gdpr_scenario(dlm));
  }
  const auto eve = io::parse(read_scenario("gdpr_eve.scenario"));
  CHECK(infra::Infrastructure(eve.infrastructure->graph, std::make_shared<const infra::Rules>(eve.infrastructure->rules)) ==
        infra::gdpr_eve_scenario(false));
}

TEST_CASE("tree syntax") {
  const auto doc = io::parse(raw_doc(R"("sets": {"A": {"states": ["a"]}, "B": {"states": ["b"]}},
      "trees": {"t": {"and": [], "goal": {"pre": "A", "post": "B"}}})"));
  const auto model = io::Model::load(doc, 100);
  CHECK(model.named_tree("t") == AttackTree::and_node({}, {StateSet::of(3, {0}), StateSet::of(3, {1})}));
}

TEST_CASE("reference errors name the missing definition") {
  try {
    io::parse(raw_doc(R"("trees": {"t": {"base": {"pre": "X", "post": {"all": true}}}})"));
    FAIL("accepted");
  } catch (const ScenarioError& e) {
    CHECK(e.kind() == ScenarioError::Kind::unresolved_reference);
    CHECK(e.subject() == "X");
    CHECK(e.path() == "/trees/t/base/pre");
  }
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"states": ["zz"]}})")) == ScenarioError::Kind::unresolved_reference);
  CHECK(error_kind(raw_doc(R"("formulas": {"f": {"EF": "g"}})")) == ScenarioError::Kind::unresolved_reference);
  CHECK(error_kind(R"({"system": {"states": ["a"], "edges": [["a", "q"]], "initial": []}})") ==
        ScenarioError::Kind::unresolved_reference);
}

TEST_CASE("duplicates") {
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"all": true}, "A": {"initial": true}})")) ==
        ScenarioError::Kind::duplicate_name);
  CHECK(error_kind(R"({"system": {"states": ["a", "a"], "initial": []}})") == ScenarioError::Kind::duplicate_name);
}

TEST_CASE("syntax errors carry a position") {
  try {
    io::parse("{\n  \"system\": {\n    \"states\": [\"a\",]\n  }\n}");
    FAIL("accepted");
  } catch (const ScenarioError& e) {
    CHECK(e.kind() == ScenarioError::Kind::syntax);
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
    CHECK(e.to_json()["line"] == 3);
  }
  CHECK(error_kind("") == ScenarioError::Kind::syntax);
  CHECK(error_kind("{\"a\": \xff}") == ScenarioError::Kind::syntax);
  CHECK(error_kind("{\"system\": 1e999}") == ScenarioError::Kind::syntax);
}

TEST_CASE("shape violations") {
  using K = ScenarioError::Kind;
  CHECK(error_kind("[]") == K::schema_violation);
  CHECK(error_kind("{}") == K::schema_violation);
  CHECK(error_kind(R"({"system": {"states": [], "initial": []}, "infrastructure": {"locations": []}})") == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"ids": [1.5]}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"ids": [-1]}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"ids": [99999999999]}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"all": true, "initial": true}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"and": []}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": "B", "B": {"not": "A"}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("trees": {"t": "t"})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("formulas": {"f": {"EU": [{"atom": {"all": true}}]}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("queries": {"q": {"kind": "prove"}})")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("extra": 1)")) == K::schema_violation);
  CHECK(error_kind(raw_doc(R"("sets": {"A": {"actor_at": {"actor": "x", "location": "y"}}})")) == K::schema_violation);
  // Identities can only stand at one place.
  CHECK(error_kind(R"({"infrastructure": {"locations": ["l", "m"], "identities": {"x": {}},
                       "placement": {"l": ["x"], "m": ["x"]}}})") == K::schema_violation);
  std::string deep(100000, '[');
  CHECK(error_kind(deep) == K::schema_violation);
}

TEST_CASE("ids are checked against the explored space") {
  const auto doc = io::parse(raw_doc(R"("sets": {"A": {"ids": [7]}})"));
  CHECK_THROWS_AS(io::Model::load(doc, 100), ScenarioError);
  CHECK_THROWS_AS(io::Model::load(io::parse(raw_doc("")), 2), BoundExceeded);
  CHECK_THROWS_AS(io::Model::load(io::parse(read_scenario("gdpr.scenario")), 10), BoundExceeded);
}

TEST_CASE("set expressions over the explored infrastructure") {
  const auto model = io::Model::load(io::parse(read_scenario("gdpr_eve.scenario")), 100000);
  REQUIRE(model.is_infrastructure());
  CHECK(model.state_count() == 536);
  const auto& explored = *model.explored();
  const auto fetched = model.named_set("eve_fetched");
  CHECK_FALSE(fetched.empty());
  fetched.for_each([&](StateId s) {
    const auto& g = explored.states[s.value].graph();
    CHECK(g.at("Eve", "sphone"));
  });
  CHECK(model.named_set("Igdpr") == StateSet::of(536, {0}));
  CHECK(model.named_set("sgdpr") == StateSet::full(536));
}

TEST_CASE("canonical serialization round-trips") {
  for (const char* name : {"gdpr.scenario", "gdpr_dlm.scenario", "gdpr_eve.scenario", "refinement.scenario"}) {
    const auto doc = io::parse(read_scenario(name));
    const std::string text = io::serialize(doc);
    CHECK(io::parse(text) == doc);
    CHECK(io::serialize(io::parse(text)) == text);
  }
  std::mt19937_64 rng(53);
  for (int round = 0; round < 300; ++round) {
    const auto doc = docgen::random_doc(rng);
    const std::string text = io::serialize(doc);
    const auto back = io::parse(text);
    CHECK(back == doc);
    CHECK(io::serialize(back) == text);
  }
}

TEST_CASE("synthesized witnesses survive a round trip") {
  const auto model = io::Model::load(io::parse(read_scenario("gdpr_eve.scenario")), 100000);
  const auto tree = synthesize(model.system(), model.named_set("Igdpr"), model.named_set("eve_at_cloud_with_data"));
  REQUIRE(tree.has_value());
  io::ScenarioDoc doc = model.doc();
  doc.trees.insert_or_assign("witness", model.tree_expr(*tree));
  const auto reloaded = io::Model::load(io::parse(io::serialize(doc)), 100000);
  const auto back = reloaded.named_tree("witness");
  CHECK(back == *tree);
  CHECK(is_valid(reloaded.system(), back));

  const auto raw = io::Model::load(io::parse(read_scenario("refinement.scenario")), 100);
  const auto chain = synthesize(raw.system(), raw.named_set("A"), raw.named_set("C"));
  REQUIRE(chain.has_value());
  CHECK(raw.tree_json(*chain)["and"][0]["base"]["pre"] == nlohmann::json{{"states", {"a"}}});
}

TEST_CASE("adequacy reports") {
  const auto model = io::Model::load(io::parse(read_scenario("gdpr.scenario")), 100000);
  const auto report = check_at_ef(model.system(), model.named_tree("two_step_attack"));
  const auto j = io::report_json(report, model);
  CHECK(j["tree_valid"] == true);
  CHECK(j["ef_holds"] == true);
  CHECK(j["consistent"] == true);
  CHECK(j["kripke"]["size"] == 60);
}
