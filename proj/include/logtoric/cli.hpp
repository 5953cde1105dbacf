#pragma once

// Problem files: JSON documents naming cones, monoids, charts and chart
// morphisms, followed by an ordered task list. Integers are decimal
// strings throughout; plain JSON integers are accepted on input.
//
//   {"version": "1",
//    "objects": {"P": {"type": "monoid", "rank": "1", "generators": [["1"]]}, ...},
//    "tasks": [{"command": "base-change",
//               "arguments": {"theta": "theta", "phi": "phi"},
//               "output": "w"}]}

#include "logtoric/error.hpp"
#include "logtoric/integer.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logtoric::cli {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";

enum class ParseErrorKind { Syntax, Version, Reference, Dimension, Schema };

std::string_view to_string(ParseErrorKind k);

class ParseError : public Error {
public:
  /// `where` is "line:column" for syntax errors and a JSON path otherwise.
  ParseError(ParseErrorKind kind, std::string where, const std::string& cause);
  ParseErrorKind kind() const { return kind_; }
  const std::string& where() const { return where_; }

private:
  ParseErrorKind kind_;
  std::string where_;
};

struct ObjectSpec;

/// A named object or task output, or an inline object.
struct Operand {
  std::string ref;
  std::shared_ptr<const ObjectSpec> inline_object;
};

struct ConeSpec {
  std::size_t rank = 0;
  std::vector<Vector> generators;
};

struct MonoidSpec {
  std::size_t rank = 0;
  std::vector<Vector> generators;
};

/// Serialized as {"lattice_rank": d, "cone_generators": [...]}.
struct ChartSpec {
  std::size_t rank = 0;
  std::vector<Vector> cone;
};

/// theta: source -> target; `matrix` has one row per target coordinate.
struct MonoidChartSpec {
  Operand source;
  Operand target;
  std::vector<Vector> matrix;
};

/// N-side lattice map between two charts; `matrix` has one row per
/// coordinate of the target lattice.
struct ToricMorphismSpec {
  Operand source;
  Operand target;
  std::vector<Vector> matrix;
};

struct ObjectSpec {
  std::variant<ConeSpec, MonoidSpec, ChartSpec, MonoidChartSpec, ToricMorphismSpec> value;
};

struct BoxSpec {
  std::vector<Integer> lower;
  std::vector<Integer> upper;
};

using Argument = std::variant<Operand, std::vector<Vector>, BoxSpec>;

struct Task {
  std::string command;
  std::map<std::string, Argument> arguments;
  std::optional<std::string> output;
};

struct ProblemFile {
  std::string version;
  std::map<std::string, ObjectSpec> objects;
  std::vector<Task> tasks;
};

/// Throws ParseError.
ProblemFile parse(std::string_view text);
ProblemFile parse_document(const Json& document);

Json serialize(const ProblemFile& p);
Json serialize(const ObjectSpec& o);
Json serialize(const Task& t);

/// The document with every integer turned into its decimal string. Key
/// order is already canonical in Json.
Json normalize(const Json& document);

struct RunResult {
  Json certificate;
  bool any_failed = false;
  bool internal_error = false;

  int exit_code() const { return internal_error ? 3 : any_failed ? 1 : 0; }
};

RunResult run(const ProblemFile& p);

/// One line per task, for people.
std::string render_text(const Json& certificate);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTaskFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitInternal = 3;

/// The commands a task may name.
const std::vector<std::string>& commands();

} // namespace logtoric::cli
