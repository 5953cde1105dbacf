#include "logtoric/cli.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace logtoric::cli {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
  case ParseErrorKind::Syntax: return "syntax";
  case ParseErrorKind::Version: return "version";
  case ParseErrorKind::Reference: return "reference";
  case ParseErrorKind::Dimension: return "dimension";
  case ParseErrorKind::Schema: return "schema";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::string where, const std::string& cause)
    : Error(std::string(cli::to_string(kind)) + " error at " + where + ": " + cause),
      kind_(kind), where_(std::move(where)) {}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> all = {
      "dual",           "hilbert",         "boundary-ideal", "faces",     "orbit",
      "split",          "check-log-smooth", "check-log-etale", "check-strict",
      "fibre-dim",      "base-change",     "verify",         "oracle"};
  return all;
}

namespace {

enum class ArgKind { Operand, Vectors, Box };

const std::map<std::string, std::map<std::string, ArgKind>>& task_schema() {
  static const std::map<std::string, std::map<std::string, ArgKind>> schema = {
      {"dual", {{"cone", ArgKind::Operand}}},
      {"hilbert", {{"cone", ArgKind::Operand}}},
      {"boundary-ideal", {{"chart", ArgKind::Operand}}},
      {"faces", {{"cone", ArgKind::Operand}}},
      {"orbit", {{"chart", ArgKind::Operand}, {"face", ArgKind::Vectors}}},
      {"split", {{"chart", ArgKind::Operand}}},
      {"check-log-smooth", {{"chart", ArgKind::Operand}}},
      {"check-log-etale", {{"chart", ArgKind::Operand}}},
      {"check-strict", {{"chart", ArgKind::Operand}}},
      {"fibre-dim", {{"chart", ArgKind::Operand}}},
      {"base-change", {{"theta", ArgKind::Operand}, {"phi", ArgKind::Operand}}},
      {"verify", {{"result", ArgKind::Operand}, {"theta", ArgKind::Operand}}},
      {"oracle", {{"cone", ArgKind::Operand}, {"box", ArgKind::Box}}},
  };
  return schema;
}

[[noreturn]] void fail(ParseErrorKind k, const std::string& path, const std::string& cause) {
  throw ParseError(k, path.empty() ? "/" : path, cause);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ParseErrorKind::Schema, path, "missing field \"" + key + "\"");
  return *it;
}

void only_fields(const Json& obj, std::initializer_list<std::string_view> allowed,
                 const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      fail(ParseErrorKind::Schema, path, "unknown field \"" + it.key() + "\"");
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(ParseErrorKind::Schema, path, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(ParseErrorKind::Schema, path, "expected an array");
  return j;
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(ParseErrorKind::Schema, path, "expected a string");
  return j.get<std::string>();
}

Integer parse_integer(const Json& j, const std::string& path) {
  static const std::regex decimal("-?(0|[1-9][0-9]*)");
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (std::regex_match(s, decimal) && s != "-0") return Integer(s);
    fail(ParseErrorKind::Schema, path, "\"" + s + "\" is not a decimal integer");
  }
  fail(ParseErrorKind::Schema, path, "expected an integer");
}

std::size_t parse_rank(const Json& j, const std::string& path) {
  Integer r = parse_integer(j, path);
  if (r < 0 || r > 64) fail(ParseErrorKind::Schema, path, "rank must lie in [0, 64]");
  return r.get_ui();
}

Vector parse_vector(const Json& j, const std::string& path) {
  expect_array(j, path);
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], child(path, i)));
  return v;
}

std::vector<Vector> parse_vectors(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vector(j[i], child(path, i)));
  return out;
}

void require_lengths(const std::vector<Vector>& vs, std::size_t n, const std::string& path) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].size() != n)
      fail(ParseErrorKind::Dimension, child(path, i),
           "vector of length " + std::to_string(vs[i].size()) + " in rank " + std::to_string(n));
}

Json integer_json(const Integer& x) { return x.get_str(); }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(integer_json(x));
  return a;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const Vector& v : vs) a.push_back(vector_json(v));
  return a;
}

Json rank_json(std::size_t r) { return std::to_string(r); }

std::string type_name(const ObjectSpec& o) {
  switch (o.value.index()) {
  case 0: return "cone";
  case 1: return "monoid";
  case 2: return "chart";
  case 3: return "monoid_chart";
  default: return "toric_morphism";
  }
}

std::optional<std::size_t> spec_rank(const ObjectSpec& o) {
  if (auto c = std::get_if<ConeSpec>(&o.value)) return c->rank;
  if (auto m = std::get_if<MonoidSpec>(&o.value)) return m->rank;
  if (auto c = std::get_if<ChartSpec>(&o.value)) return c->rank;
  return std::nullopt;
}

// Parsing state: the raw object table (for references between objects)
// and the names visible to the task being parsed.
class Parser {
public:
  explicit Parser(const Json& raw_objects) : raw_(raw_objects) {}

  const ObjectSpec& object(const std::string& name, const std::string& path) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    if (!raw_.contains(name)) fail(ParseErrorKind::Reference, path, "undeclared object \"" + name + "\"");
    if (!in_progress_.insert(name).second)
      fail(ParseErrorKind::Reference, path, "object \"" + name + "\" refers to itself");
    ObjectSpec spec = parse_object(raw_[name], child("/objects", name));
    in_progress_.erase(name);
    return done_.emplace(name, std::move(spec)).first->second;
  }

  std::map<std::string, ObjectSpec> all_objects() {
    for (auto it = raw_.begin(); it != raw_.end(); ++it) object(it.key(), "/objects");
    return done_;
  }

  ObjectSpec parse_object(const Json& j, const std::string& path) {
    expect_object(j, path);
    const std::string type = expect_string(field(j, "type", path), child(path, "type"));
    ObjectSpec o;
    if (type == "cone" || type == "monoid" || type == "chart") {
      const char* key = type == "chart" ? "cone_generators" : "generators";
      const char* rank_key = type == "chart" ? "lattice_rank" : "rank";
      only_fields(j, {"type", rank_key, key}, path);
      std::size_t rank = parse_rank(field(j, rank_key, path), child(path, rank_key));
      std::vector<Vector> gens = parse_vectors(field(j, key, path), child(path, key));
      require_lengths(gens, rank, child(path, key));
      if (type == "cone") o.value = ConeSpec{rank, std::move(gens)};
      else if (type == "monoid") o.value = MonoidSpec{rank, std::move(gens)};
      else o.value = ChartSpec{rank, std::move(gens)};
    } else if (type == "monoid_chart" || type == "toric_morphism") {
      only_fields(j, {"type", "source", "target", "matrix"}, path);
      const std::string want = type == "monoid_chart" ? "monoid" : "chart";
      Operand src = object_operand(field(j, "source", path), child(path, "source"), want);
      Operand dst = object_operand(field(j, "target", path), child(path, "target"), want);
      std::vector<Vector> matrix = parse_vectors(field(j, "matrix", path), child(path, "matrix"));
      std::size_t n = *rank_of(src, path), m = *rank_of(dst, path);
      if (matrix.size() != m)
        fail(ParseErrorKind::Dimension, child(path, "matrix"),
             std::to_string(matrix.size()) + " rows for a target of rank " + std::to_string(m));
      require_lengths(matrix, n, child(path, "matrix"));
      if (type == "monoid_chart") o.value = MonoidChartSpec{src, dst, std::move(matrix)};
      else o.value = ToricMorphismSpec{src, dst, std::move(matrix)};
    } else {
      fail(ParseErrorKind::Schema, child(path, "type"), "unknown object type \"" + type + "\"");
    }
    return o;
  }

  // Operands inside objects may only name other objects.
  Operand object_operand(const Json& j, const std::string& path, const std::string& want) {
    Operand op;
    const ObjectSpec* spec;
    if (j.is_string()) {
      op.ref = j.get<std::string>();
      spec = &object(op.ref, path);
    } else {
      op.inline_object = std::make_shared<ObjectSpec>(parse_object(j, path));
      spec = op.inline_object.get();
    }
    if (type_name(*spec) != want)
      fail(ParseErrorKind::Reference, path, "expected a " + want + ", found a " + type_name(*spec));
    return op;
  }

  Operand task_operand(const Json& j, const std::string& path) {
    Operand op;
    if (j.is_string()) {
      op.ref = j.get<std::string>();
      if (!outputs_.count(op.ref)) object(op.ref, path);
    } else {
      op.inline_object = std::make_shared<ObjectSpec>(parse_object(j, path));
    }
    return op;
  }

  std::optional<std::size_t> rank_of(const Operand& op, const std::string& path) {
    if (op.inline_object) return spec_rank(*op.inline_object);
    if (outputs_.count(op.ref)) return std::nullopt;
    return spec_rank(object(op.ref, path));
  }

  Task parse_task(const Json& j, const std::string& path) {
    expect_object(j, path);
    only_fields(j, {"command", "arguments", "output"}, path);
    Task t;
    t.command = expect_string(field(j, "command", path), child(path, "command"));
    auto schema = task_schema().find(t.command);
    if (schema == task_schema().end())
      fail(ParseErrorKind::Schema, child(path, "command"), "unknown command \"" + t.command + "\"");
    const std::string apath = child(path, "arguments");
    const Json& args = expect_object(field(j, "arguments", path), apath);
    for (auto it = args.begin(); it != args.end(); ++it)
      if (!schema->second.count(it.key()))
        fail(ParseErrorKind::Schema, apath, "unknown argument \"" + it.key() + "\" for " + t.command);
    for (const auto& [key, kind] : schema->second) {
      const std::string kpath = child(apath, key);
      const Json& a = field(args, key, apath);
      switch (kind) {
      case ArgKind::Operand: t.arguments.emplace(key, task_operand(a, kpath)); break;
      case ArgKind::Vectors: t.arguments.emplace(key, parse_vectors(a, kpath)); break;
      case ArgKind::Box: {
        expect_object(a, kpath);
        only_fields(a, {"lower", "upper"}, kpath);
        BoxSpec b{parse_vector(field(a, "lower", kpath), child(kpath, "lower")),
                  parse_vector(field(a, "upper", kpath), child(kpath, "upper"))};
        if (b.lower.size() != b.upper.size())
          fail(ParseErrorKind::Dimension, kpath, "box bounds have different lengths");
        t.arguments.emplace(key, std::move(b));
        break;
      }
      }
    }
    check_dimensions(t, apath);
    if (j.contains("output")) {
      std::string name = expect_string(j["output"], child(path, "output"));
      if (raw_.contains(name) || outputs_.count(name))
        fail(ParseErrorKind::Reference, child(path, "output"), "name \"" + name + "\" is already taken");
      outputs_.insert(name);
      t.output = std::move(name);
    }
    return t;
  }

private:
  void check_dimensions(const Task& t, const std::string& apath) {
    auto operand_rank = [&](const char* key) {
      return rank_of(std::get<Operand>(t.arguments.at(key)), child(apath, key));
    };
    if (t.command == "orbit") {
      if (auto r = operand_rank("chart"))
        require_lengths(std::get<std::vector<Vector>>(t.arguments.at("face")), *r, child(apath, "face"));
    } else if (t.command == "oracle") {
      if (auto r = operand_rank("cone"))
        if (std::get<BoxSpec>(t.arguments.at("box")).lower.size() != *r)
          fail(ParseErrorKind::Dimension, child(apath, "box"), "box rank differs from cone rank");
    }
  }

  const Json& raw_;
  std::map<std::string, ObjectSpec> done_;
  std::set<std::string> in_progress_;
  std::set<std::string> outputs_;
};

Json operand_json(const Operand& op) {
  if (op.inline_object) return serialize(*op.inline_object);
  return op.ref;
}

struct ObjectJson {
  Json operator()(const ConeSpec& c) const {
    return {{"type", "cone"}, {"rank", rank_json(c.rank)}, {"generators", vectors_json(c.generators)}};
  }
  Json operator()(const MonoidSpec& m) const {
    return {{"type", "monoid"}, {"rank", rank_json(m.rank)}, {"generators", vectors_json(m.generators)}};
  }
  Json operator()(const ChartSpec& c) const {
    return {{"type", "chart"}, {"lattice_rank", rank_json(c.rank)},
            {"cone_generators", vectors_json(c.cone)}};
  }
  Json operator()(const MonoidChartSpec& c) const {
    return {{"type", "monoid_chart"}, {"source", operand_json(c.source)},
            {"target", operand_json(c.target)}, {"matrix", vectors_json(c.matrix)}};
  }
  Json operator()(const ToricMorphismSpec& c) const {
    return {{"type", "toric_morphism"}, {"source", operand_json(c.source)},
            {"target", operand_json(c.target)}, {"matrix", vectors_json(c.matrix)}};
  }
};

struct ArgumentJson {
  Json operator()(const Operand& op) const { return operand_json(op); }
  Json operator()(const std::vector<Vector>& vs) const { return vectors_json(vs); }
  Json operator()(const BoxSpec& b) const {
    return {{"lower", vector_json(b.lower)}, {"upper", vector_json(b.upper)}};
  }
};

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

} // namespace

ProblemFile parse(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string cause = e.what();
    // Keep only nlohmann's own description after the position prefix.
    if (auto p = cause.rfind(": "); p != std::string::npos) cause = cause.substr(p + 2);
    throw ParseError(ParseErrorKind::Syntax, line_column(text, e.byte), cause);
  }
  return parse_document(doc);
}

ProblemFile parse_document(const Json& doc) {
  expect_object(doc, "");
  only_fields(doc, {"version", "objects", "tasks"}, "");
  ProblemFile p;
  p.version = expect_string(field(doc, "version", ""), "/version");
  if (p.version != kFormatVersion)
    fail(ParseErrorKind::Version, "/version", "unsupported format version \"" + p.version + "\"");

  static const Json no_objects = Json::object();
  const Json& objects = doc.contains("objects") ? expect_object(doc["objects"], "/objects") : no_objects;
  Parser parser(objects);
  p.objects = parser.all_objects();

  if (doc.contains("tasks")) {
    const Json& tasks = expect_array(doc["tasks"], "/tasks");
    for (std::size_t i = 0; i < tasks.size(); ++i)
      p.tasks.push_back(parser.parse_task(tasks[i], child("/tasks", i)));
  }
  return p;
}

Json serialize(const ObjectSpec& o) { return std::visit(ObjectJson{}, o.value); }

Json serialize(const ProblemFile& p) {
  Json doc = {{"version", p.version}, {"objects", Json::object()}, {"tasks", Json::array()}};
  for (const auto& [name, o] : p.objects) doc["objects"][name] = serialize(o);
  for (const Task& t : p.tasks) doc["tasks"].push_back(serialize(t));
  return doc;
}

Json serialize(const Task& t) {
  Json tj = {{"command", t.command}, {"arguments", Json::object()}};
  for (const auto& [k, a] : t.arguments) tj["arguments"][k] = std::visit(ArgumentJson{}, a);
  if (t.output) tj["output"] = *t.output;
  return tj;
}

Json normalize(const Json& j) {
  if (j.is_number_integer()) return j.dump();
  if (j.is_array()) {
    Json a = Json::array();
    for (const Json& x : j) a.push_back(normalize(x));
    return a;
  }
  if (j.is_object()) {
    Json o = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) o[it.key()] = normalize(it.value());
    return o;
  }
  return j;
}

} // namespace logtoric::cli
