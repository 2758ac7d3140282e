#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gluing/cli.hpp"
#include "gluing/errors.hpp"
#include "gluing/fixtures.hpp"
#include "gluing/spec_io.hpp"

using namespace gluing;
namespace fx = gluing::fixtures;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GLUING_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTwoPoints = R"({
  "spaces": {
    "S": {"points": ["t", "b"], "min_open": {"t": ["t"], "b": ["t", "b"]}},
    "P": {"points": ["x"], "opens": []}
  },
  "maps": {
    "top": {"dom": "P", "cod": "S", "table": {"x": "t"}}
  }
})";

bool homeomorphic_to_sierp(const SpacePtr& s) {
  return find_homeomorphism(s, fx::sierp()).has_value();
}

RunArgs target(const std::string& t) {
  RunArgs a;
  a.target = t;
  return a;
}

}  // namespace

TEST_CASE("parse a small document") {
  SpecDocument doc = parse_spec(kTwoPoints);
  CHECK(homeomorphic_to_sierp(doc.spaces.at("S")));
  CHECK(doc.spaces.at("S")->is_open(std::vector<std::string>{"t"}));
  CHECK(doc.maps.at("top").apply("x") == "t");
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_spec("{\n  \"spaces\": {\n    \"S\": [1,,]\n  }\n}");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.location.rfind("3:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_spec(R"({"spaces": {}, "bogus": {}})"), ParseError);
  CHECK_THROWS_AS(parse_spec(R"({"spaces": {"S": {"points": ["a"], "min_open": {"a": ["z"]}}}})"),
                  ParseError);
}

TEST_CASE("unresolved and duplicate names") {
  CHECK_THROWS_AS(parse_spec(R"({"maps": {"m": {"dom": "NOPE", "cod": "NOPE", "table": {}}}})"),
                  UnresolvedReference);
  CHECK_THROWS_AS(parse_spec(R"({"spaces": {"P": {"points": ["x"], "opens": []},
                                            "P": {"points": ["y"], "opens": []}}})"),
                  DuplicateName);
  CHECK_THROWS_AS(parse_spec(R"({"spaces": {"P": {"points": ["x"], "opens": []}},
                                 "maps": {"P": {"dom": "P", "cod": "P", "table": {"x": "x"}}}})"),
                  DuplicateName);
}

TEST_CASE("the GD-CIRC file matches the in-memory fixture") {
  SpecDocument doc = parse_spec(slurp("gd_circ.json"));
  REQUIRE(doc.gluings.count("GD-CIRC") == 1);
  CHECK(same_data(doc.gluings.at("GD-CIRC"), fx::circ()));
  CHECK(doc.coverings.count("C4-two-arcs") == 1);
}

TEST_CASE("serialize round trips") {
  for (const char* file : {"gd_circ.json", "broken_cocycle.json", "torus_meta.json"}) {
    SpecDocument a = parse_spec(slurp(file));
    SpecDocument b = parse_spec(serialize(a));
    CHECK(same_document(a, b));
    CHECK(serialize(a) == serialize(b));
  }
}

TEST_CASE("documents built in memory round trip") {
  SpecDocument doc;
  doc.add_gluing(fx::circ());
  doc.add_covering(fx::sq9_two_strips());
  doc.add_meta(fx::torus_meta());
  SpecDocument back = parse_spec(serialize(doc));
  CHECK(same_document(doc, back));
  CHECK_THROWS_AS(doc.add_space(share(FiniteSpace::from_opens("ARC3", {"x"}, {}))), DuplicateName);
}

TEST_CASE("command exit codes") {
  const std::string circ = slurp("gd_circ.json");
  CHECK(run_text(circ, "validate", target("GD-CIRC"), false).exit_code == kPass);
  CHECK(run_text(circ, "glue", target("GD-CIRC"), false).exit_code == kPass);
  CHECK(run_text(circ, "check-glued", target("GD-CIRC"), false).exit_code == kPass);
  CHECK(run_text(circ, "check-otop", target("GD-CIRC"), false).exit_code == kPass);
  CHECK(run_text(circ, "verify-universal", target("GD-CIRC"), false).exit_code == kPass);
  CHECK(run_text(circ, "check-cone", target("circ-to-sierp"), false).exit_code == kPass);
  CHECK(run_text(circ, "mediate", target("circ-to-sierp"), false).exit_code == kPass);
  CHECK(run_text(circ, "cover-check", target("C4-two-arcs"), false).exit_code == kPass);
  CHECK(run_text(circ, "cover-functor", target("SQ9-two-strips"), false).exit_code == kPass);
  CHECK(run_text(circ, "validate", target("nothing"), false).exit_code == kInputError);
  CHECK(run_text("{", "validate", target("GD-CIRC"), false).exit_code == kInputError);
  CHECK_THROWS_AS(run_text(circ, "frobnicate", target("GD-CIRC"), false), UnknownCommand);

  RunArgs tiny = target("GD-CIRC");
  tiny.budget = 2;
  CHECK(run_text(circ, "verify-universal", tiny, false).exit_code == kBudgetExceeded);

  const std::string broken = slurp("broken_cocycle.json");
  RunReport r = run_text(broken, "validate", target("broken-cocycle"), false);
  CHECK(r.exit_code == kCheckFailure);
  CHECK(r.human().find("FAIL") != std::string::npos);

  CHECK(run_text(slurp("torus_meta.json"), "compose", target("torus"), false).exit_code == kPass);
  CHECK(run_text(slurp("torus_counter_meta.json"), "compose", target("torus-counter"), false)
            .exit_code == kCheckFailure);
}

TEST_CASE("machine output is JSON with the exit code") {
  RunReport r = run_text(slurp("gd_circ.json"), "validate", target("GD-CIRC"), false);
  const std::string m = r.machine();
  CHECK(m.find("\"exit\": 0") != std::string::npos);
  CHECK(m.front() == '{');
}

TEST_CASE("render-dot") {
  SpecDocument doc = parse_spec(slurp("gd_circ.json"));
  const std::string a = render_dot(doc, "GD-CIRC");
  CHECK(a == render_dot(doc, "GD-CIRC"));
  CHECK(a.rfind("digraph", 0) == 0);
  CHECK(a.find("style=dashed") != std::string::npos);
  CHECK_THROWS_AS(render_dot(doc, "nothing"), UnknownTarget);

  // one edge per non-identity generator
  const std::string idx = render_dot(doc, "index:1,2,3");
  std::size_t edges = 0;
  for (std::size_t p = idx.find("->"); p != std::string::npos; p = idx.find("->", p + 2)) ++edges;
  std::size_t expected = 0;
  for (const auto& g : GlCategory(3).generators())
    if (!g.is_identity()) ++expected;
  CHECK(edges == expected);
}
