#include "logtoric/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace logtoric::cli;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(LOGTORIC_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseErrorKind parse_error_kind(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::Schema;
}

const std::vector<std::string> kFixtures = {"cusp_base_change.json", "node_base_change.json",
                                            "classifiers.json", "toric.json", "empty.json"};

} // namespace

TEST_CASE("cusp fixture parses and runs") {
  ProblemFile p = parse(fixture("cusp_base_change.json"));
  CHECK(p.objects.size() == 2);
  CHECK(p.tasks.size() == 1);
  RunResult r = run(p);
  CHECK(r.exit_code() == 0);
  const Json& t = r.certificate["tasks"][0];
  CHECK(t["status"] == "ok");
  CHECK(t["result"]["main_monoid"]["generators"] == Json::parse(R"([["1"]])"));
  CHECK(t["result"]["torsion_order"] == "1");
}

TEST_CASE("log smoothness witness in the certificate") {
  RunResult r = run(parse(fixture("classifiers.json")));
  const Json& t = r.certificate["tasks"][0];
  CHECK(t["command"] == "check-log-smooth");
  CHECK(t["result"]["verdict"] == false);
  CHECK(t["result"]["kernel"] == Json::parse(R"([["1","-1"]])"));
}

TEST_CASE("empty task list") {
  RunResult r = run(parse(fixture("empty.json")));
  CHECK(r.certificate["tasks"].empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("parse errors are classified") {
  CHECK(parse_error_kind(fixture("bad/truncated.json")) == ParseErrorKind::Syntax);
  CHECK(parse_error_kind(fixture("bad/version.json")) == ParseErrorKind::Version);
  CHECK(parse_error_kind(fixture("bad/dangling.json")) == ParseErrorKind::Reference);
  CHECK(parse_error_kind(fixture("bad/dimension.json")) == ParseErrorKind::Dimension);
  CHECK(parse_error_kind(fixture("bad/schema.json")) == ParseErrorKind::Schema);

  try {
    parse(fixture("bad/dangling.json"));
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("\"sigma\"") != std::string::npos);
  }
  try {
    parse(fixture("bad/truncated.json"));
  } catch (const ParseError& e) {
    CHECK(e.where() == "3:40");
  }
}

TEST_CASE("references to later outputs are rejected") {
  const char* text = R"({"version": "1", "objects": {}, "tasks": [
    {"command": "hilbert", "arguments": {"cone": "later"}},
    {"command": "dual", "arguments": {"cone": {"type": "cone", "rank": "1", "generators": [["1"]]}},
     "output": "later"}]})";
  CHECK(parse_error_kind(text) == ParseErrorKind::Reference);
}

TEST_CASE("library failures become task failures") {
  const char* text = R"({"version": "1",
    "objects": {"N2": {"type": "monoid", "rank": "2", "generators": [["1","0"],["0","1"]]},
                "N": {"type": "monoid", "rank": "1", "generators": [["1"]]},
                "sum": {"type": "monoid_chart", "source": "N2", "target": "N", "matrix": [["1","1"]]}},
    "tasks": [{"command": "fibre-dim", "arguments": {"chart": "sum"}},
              {"command": "check-log-smooth", "arguments": {"chart": "sum"}}]})";
  RunResult r = run(parse(text));
  CHECK(r.exit_code() == 1);
  CHECK(r.certificate["tasks"][0]["status"] == "failed");
  CHECK(r.certificate["tasks"][1]["status"] == "ok");
}

TEST_CASE("round trip and determinism on every fixture") {
  for (const std::string& name : kFixtures) {
    CAPTURE(name);
    const std::string text = fixture(name);
    CHECK(serialize(parse(text)) == normalize(Json::parse(text)));
    CHECK(parse_document(serialize(parse(text))).tasks.size() == parse(text).tasks.size());
    CHECK(run(parse(text)).certificate.dump() == run(parse(text)).certificate.dump());
  }
}

TEST_CASE("text rendering has one line per task") {
  RunResult r = run(parse(fixture("classifiers.json")));
  std::string text = render_text(r.certificate);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) ==
        r.certificate["tasks"].size());
}
