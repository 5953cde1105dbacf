#include "logtoric/base_change.hpp"
#include "logtoric/cli.hpp"
#include "logtoric/cone.hpp"
#include "logtoric/log_morphism.hpp"
#include "logtoric/monoid.hpp"
#include "logtoric/oracle.hpp"
#include "logtoric/toric_chart.hpp"

#include <algorithm>
#include <sstream>

namespace logtoric::cli {

namespace {

using Value = std::variant<RationalCone, AffineMonoid, ToricChart, MonoidChart, SatBaseChangeResult>;

const char* value_name(const Value& v) {
  switch (v.index()) {
  case 0: return "cone";
  case 1: return "monoid";
  case 2: return "chart";
  case 3: return "monoid_chart";
  default: return "base-change result";
  }
}

Json integer_json(const Integer& x) { return x.get_str(); }

Json size_json(std::size_t n) { return std::to_string(n); }

Json vector_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(integer_json(x));
  return a;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const Vector& v : vs) a.push_back(vector_json(v));
  return a;
}

Json integers_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const Integer& x : xs) a.push_back(integer_json(x));
  return a;
}

Json matrix_json(const Matrix& m) { return vectors_json(m.row_vectors()); }

Json cone_json(const RationalCone& c) {
  return {{"type", "cone"},
          {"rank", size_json(c.ambient_rank())},
          {"dimension", size_json(c.dimension())},
          {"rays", vectors_json(c.rays())},
          {"lineality", vectors_json(c.lineality().basis())},
          {"facets", vectors_json(c.facets())},
          {"equations", vectors_json(c.equations().basis())}};
}

Json monoid_json(const AffineMonoid& m) {
  return {{"type", "monoid"},
          {"rank", size_json(m.ambient_rank())},
          {"generators", vectors_json(m.generators())},
          {"units", vectors_json(m.unit_sublattice().basis())},
          {"saturated", m.saturated()}};
}

Json face_json(const Face& f) {
  return {{"dimension", size_json(f.dimension())},
          {"rays", vectors_json(f.cone.rays())},
          {"defining_normal", vector_json(f.defining_normal)}};
}

Json base_change_json(const SatBaseChangeResult& r) {
  return {{"main_monoid", monoid_json(r.main_monoid)},
          {"structural_matrix", matrix_json(r.structural_map.map().matrix())},
          {"torsion_order", integer_json(r.torsion_order)},
          {"fibre_dim", size_json(r.fibre_dim)}};
}

LatticeMap map_from_rows(std::size_t source_rank, const std::vector<Vector>& rows) {
  return LatticeMap(source_rank, rows.size(), Matrix::from_rows(source_rank, rows));
}

class TaskFailure : public Error {
public:
  TaskFailure(const std::string& what, Json result) : Error(what), result_(std::move(result)) {}
  const Json& result() const { return result_; }

private:
  Json result_;
};

class Runner {
public:
  explicit Runner(const ProblemFile& p) : problem_(p) {}

  RunResult run() {
    RunResult out;
    out.certificate = {{"version", std::string(kFormatVersion)}, {"tasks", Json::array()}};
    for (std::size_t i = 0; i < problem_.tasks.size(); ++i) {
      const Task& t = problem_.tasks[i];
      Json entry = serialize(t);
      entry["index"] = size_json(i);
      try {
        auto [result, value] = execute(t);
        entry["status"] = "ok";
        entry["result"] = std::move(result);
        if (t.output && value) outputs_.insert_or_assign(*t.output, std::move(*value));
      } catch (const TaskFailure& e) {
        out.any_failed = true;
        entry["status"] = "failed";
        entry["result"] = e.result();
        entry["error"] = {{"class", "check"}, {"message", e.what()}};
      } catch (const InvariantViolation& e) {
        out.internal_error = true;
        entry["status"] = "internal";
        entry["error"] = {{"class", "invariant"}, {"message", e.what()}};
      } catch (const DomainError& e) {
        out.any_failed = true;
        entry["status"] = "failed";
        entry["error"] = {{"class", "domain"}, {"message", e.what()}};
      } catch (const Error& e) {
        out.any_failed = true;
        entry["status"] = "failed";
        entry["error"] = {{"class", "error"}, {"message", e.what()}};
      }
      out.certificate["tasks"].push_back(std::move(entry));
    }
    return out;
  }

private:
  Value build(const ObjectSpec& o) {
    if (auto c = std::get_if<ConeSpec>(&o.value))
      return cone_from_generators(c->rank, c->generators, Convexity::General);
    if (auto m = std::get_if<MonoidSpec>(&o.value))
      return AffineMonoid::generated_by(m->rank, m->generators);
    if (auto c = std::get_if<ChartSpec>(&o.value)) return ToricChart(c->rank, c->cone);
    if (auto c = std::get_if<MonoidChartSpec>(&o.value)) {
      AffineMonoid src = as<AffineMonoid>(c->source, "source");
      AffineMonoid dst = as<AffineMonoid>(c->target, "target");
      LatticeMap map = map_from_rows(src.ambient_rank(), c->matrix);
      return MonoidChart(std::move(src), std::move(dst), std::move(map));
    }
    const auto& t = std::get<ToricMorphismSpec>(o.value);
    ToricChart src = as<ToricChart>(t.source, "source");
    ToricChart dst = as<ToricChart>(t.target, "target");
    return from_toric_morphism(src, dst, map_from_rows(src.lattice_rank(), t.matrix));
  }

  Value resolve(const Operand& op) {
    if (op.inline_object) return build(*op.inline_object);
    if (auto it = outputs_.find(op.ref); it != outputs_.end()) return it->second;
    if (auto it = objects_.find(op.ref); it != objects_.end()) return it->second;
    auto spec = problem_.objects.find(op.ref);
    if (spec == problem_.objects.end()) throw DomainError("unresolved reference \"" + op.ref + "\"");
    return objects_.emplace(op.ref, build(spec->second)).first->second;
  }

  template <class T>
  T as(const Operand& op, const std::string& what) {
    Value v = resolve(op);
    if (auto* t = std::get_if<T>(&v)) return std::move(*t);
    // A chart is also accepted where its cone is wanted.
    if constexpr (std::is_same_v<T, RationalCone>)
      if (auto* c = std::get_if<ToricChart>(&v)) return c->cone();
    throw DomainError("argument \"" + what + "\" is a " + value_name(v) + " of the wrong kind");
  }

  template <class T>
  T arg(const Task& t, const std::string& key) {
    return as<T>(std::get<Operand>(t.arguments.at(key)), key);
  }

  std::pair<Json, std::optional<Value>> execute(const Task& t) {
    const std::string& c = t.command;
    if (c == "dual") {
      RationalCone d = dual_cone(arg<RationalCone>(t, "cone"));
      return {cone_json(d), Value(d)};
    }
    if (c == "hilbert") {
      AffineMonoid m = hilbert_basis(arg<RationalCone>(t, "cone"));
      return {monoid_json(m), Value(m)};
    }
    if (c == "boundary-ideal") {
      MonomialIdeal ideal = boundary_ideal_generators(arg<ToricChart>(t, "chart"));
      return {{{"generators", vectors_json(ideal.generator_exponents)}}, std::nullopt};
    }
    if (c == "faces") {
      Json a = Json::array();
      for (const Face& f : faces(arg<RationalCone>(t, "cone"))) a.push_back(face_json(f));
      return {{{"faces", a}}, std::nullopt};
    }
    if (c == "orbit") {
      ToricChart chart = arg<ToricChart>(t, "chart");
      const auto& rays = std::get<std::vector<Vector>>(t.arguments.at("face"));
      OrbitData o = orbit_data(chart, face_spanned_by(chart.cone(), rays));
      return {{{"face", face_json(o.face)},
               {"orbit_dimension", size_json(o.orbit_dimension)},
               {"closure_monoid", monoid_json(o.closure_monoid)}},
              Value(o.closure_monoid)};
    }
    if (c == "split") {
      ToricChart chart = arg<ToricChart>(t, "chart");
      SplitResult s = split_torus_factor(chart);
      return {{{"n1", vectors_json(s.n1.basis())},
               {"n2", vectors_json(s.n2.basis())},
               {"torus_rank", size_json(s.torus_rank)},
               {"factor_monoid", monoid_json(s.factor_monoid)},
               {"reassembles", s.reassemble() == chart.dual_monoid()}},
              std::nullopt};
    }
    if (c == "check-log-smooth") {
      LogSmoothness s = is_log_smooth(arg<MonoidChart>(t, "chart"));
      return {{{"verdict", s.verdict},
               {"kernel", vectors_json(s.kernel)},
               {"torsion_divisors", integers_json(s.torsion_divisors)}},
              std::nullopt};
    }
    if (c == "check-log-etale") {
      LogEtaleness e = log_etale_report(arg<MonoidChart>(t, "chart"));
      return {{{"verdict", e.verdict},
               {"cokernel_free_rank", size_json(e.cokernel_free_rank)},
               {"torsion_divisors", integers_json(e.torsion_divisors)}},
              std::nullopt};
    }
    if (c == "check-strict")
      return {{{"verdict", is_strict(arg<MonoidChart>(t, "chart"))}}, std::nullopt};
    if (c == "fibre-dim")
      return {{{"fibre_dim", size_json(fibre_dimension(arg<MonoidChart>(t, "chart")))}},
              std::nullopt};
    if (c == "base-change") {
      SatBaseChangeResult r =
          saturated_base_change(arg<MonoidChart>(t, "theta"), arg<MonoidChart>(t, "phi"));
      return {base_change_json(r), Value(r)};
    }
    if (c == "verify") {
      BaseChangeReport rep =
          verify_base_change(arg<SatBaseChangeResult>(t, "result"), arg<MonoidChart>(t, "theta"));
      Json j = {{"saturated", rep.saturated},
                {"log_smooth", rep.log_smooth},
                {"dominant", rep.dominant},
                {"fibre_dim_identity", rep.fibre_dim_identity},
                {"diagnostics", rep.diagnostics}};
      if (!rep.ok()) throw TaskFailure("base change verification failed", j);
      return {j, std::nullopt};
    }
    if (c == "oracle") {
      RationalCone cone = arg<RationalCone>(t, "cone");
      const BoxSpec& bs = std::get<BoxSpec>(t.arguments.at("box"));
      std::vector<std::int64_t> lo, hi;
      for (std::size_t i = 0; i < bs.lower.size(); ++i) {
        if (!bs.lower[i].fits_slong_p() || !bs.upper[i].fits_slong_p() ||
            abs(bs.lower[i]) > 1000 || abs(bs.upper[i]) > 1000)
          throw DomainError("oracle box bounds must lie in [-1000, 1000]");
        lo.push_back(bs.lower[i].get_si());
        hi.push_back(bs.upper[i].get_si());
      }
      std::vector<Vector> brute = oracle::brute_hilbert_basis(cone, oracle::Box::make(lo, hi));
      std::vector<Vector> lib = hilbert_basis(cone).generators();
      std::sort(lib.begin(), lib.end());
      Json j = {{"brute_hilbert_basis", vectors_json(brute)},
                {"hilbert_basis", vectors_json(lib)},
                {"agrees", brute == lib}};
      if (brute != lib) throw TaskFailure("oracle disagrees with the library", j);
      return {j, std::nullopt};
    }
    throw DomainError("unknown command \"" + c + "\"");
  }

  const ProblemFile& problem_;
  std::map<std::string, Value> objects_;
  std::map<std::string, Value> outputs_;
};

} // namespace

RunResult run(const ProblemFile& p) { return Runner(p).run(); }

std::string render_text(const Json& certificate) {
  std::ostringstream out;
  for (const Json& t : certificate.at("tasks")) {
    out << '#' << t.at("index").get<std::string>() << ' ' << t.at("command").get<std::string>();
    if (t.contains("output")) out << " -> " << t.at("output").get<std::string>();
    out << ": " << t.at("status").get<std::string>();
    if (t.contains("error")) out << " (" << t.at("error").at("message").get<std::string>() << ')';
    if (t.contains("result")) out << "  " << t.at("result").dump();
    out << '\n';
  }
  return out.str();
}

} // namespace logtoric::cli
