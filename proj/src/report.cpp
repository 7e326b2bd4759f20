#include "idcycle/report.hpp"

#include <chrono>
#include <ctime>

namespace idcycle {

namespace {

Json pair_json(std::pair<Vertex, Vertex> p) { return Json::array({p.first, p.second}); }

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json to_json(const ImplicitDegreeWorksheet& sheet) {
  Json j;
  j["vertex"] = sheet.v;
  j["degree"] = sheet.degree;
  j["k"] = sheet.degree - 1;
  j["degree_sequence"] = sheet.degree_sequence;
  j["second_neighborhood_size"] = sheet.second_neighborhood_size;
  j["second_max"] = sheet.second_max ? Json(*sheet.second_max) : Json(nullptr);
  j["branch"] = std::string(to_string(sheet.branch));
  j["implicit_degree"] = sheet.value;
  return j;
}

Json to_json(const Potential& p) { return Json::array({p.deficit, p.slack}); }

Json to_json(const Move& move) {
  Json j;
  j["kind"] = std::string(to_string(move.kind));
  Json params = Json::object();
  for (const auto& [name, value] : move.parameters) params[name] = value;
  j["parameters"] = params;
  j["before"] = move.before.vertices();
  j["after"] = move.after.vertices();
  j["potential_before"] = to_json(move.potential_before);
  j["potential_after"] = to_json(move.potential_after);
  return j;
}

Json to_json(const std::vector<Move>& trace) {
  Json j = Json::array();
  for (const auto& m : trace) j.push_back(to_json(m));
  return j;
}

Json to_json(const BreakSets& sets) {
  return {{"bre_plus", sets.bre_plus},
          {"bre_minus", sets.bre_minus},
          {"bre", sets.bre},
          {"heavy", sets.hb},
          {"strange", sets.str}};
}

Json to_json(const StuckReport& r) {
  Json j;
  j["final_sequence"] = r.final_sequence.vertices();
  j["input_class"] = r.input_class;
  j["breaks"] = to_json(r.breaks);
  j["paths"] = r.paths;
  Json vertices = Json::array();
  for (const auto& b : r.break_vertices) {
    vertices.push_back({{"vertex", b.vertex},
                        {"heavy", b.heavy},
                        {"strange", b.strange},
                        {"failed_conditions", b.failed_conditions},
                        {"containment", b.containment ? Json(*b.containment) : Json(nullptr)}});
  }
  j["break_vertices"] = vertices;
  Json pairs = Json::array();
  for (const auto& b : r.break_pairs) {
    pairs.push_back({{"tail", b.tail},
                     {"head", b.head},
                     {"degree_sum_at_least_n", b.degree_sum_at_least_n},
                     {"external_common_neighbor", b.external_common_neighbor},
                     {"chord_available", b.chord_available}});
  }
  j["break_pairs"] = pairs;
  Json edges = Json::array();
  for (const auto& e : r.joining_edges) edges.push_back(pair_json(e));
  j["joining_edges"] = edges;
  j["break_vertices_heavy_or_strange"] = r.break_vertices_heavy_or_strange;
  Json claims = Json::object();
  for (const auto& c : r.claims) claims[c.name] = c.holds;
  j["claims"] = claims;
  j["unavailable_moves"] = r.unavailable_moves;
  j["class_breaking_moves"] = r.class_breaking_moves;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["options"] = {{"n_max", r.options.n_max},
                  {"per_graph_sample", r.options.per_graph_sample},
                  {"seed", r.options.seed},
                  {"oracle_budget", r.options.oracle_budget}};
  j["graphs_in_catalog"] = r.graphs_in_catalog;
  j["graphs_checked"] = r.graphs_checked;
  j["sequences_checked"] = r.sequences_checked;
  j["certified"] = r.certified;
  j["oracle_confirmed"] = r.oracle_confirmed;
  j["stuck"] = r.stuck;
  j["max_trace_length"] = r.max_trace_length;
  j["descent_violations"] = r.descent_violations;
  j["cap_violations"] = r.cap_violations;
  j["move_histogram"] = r.move_histogram;
  Json lengths = Json::object();
  for (const auto& [len, count] : r.trace_length_histogram) lengths[std::to_string(len)] = count;
  j["trace_length_histogram"] = lengths;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"graph_index", f.graph_index},
                        {"graph6", f.graph6},
                        {"sequence", f.sequence},
                        {"reason", f.reason}});
  }
  j["failures"] = failures;
  return j;
}

Json to_json(const HuntReport& r) {
  Json j;
  j["options"] = {{"budget", r.options.budget},
                  {"n_min", r.options.n_min},
                  {"n_max", r.options.n_max},
                  {"seed", r.options.seed},
                  {"sample_attempts", r.options.sample_attempts},
                  {"oracle_budget", r.options.oracle_budget}};
  j["instances"] = r.instances;
  j["sampled"] = r.sampled;
  j["id_filtered"] = r.id_filtered;
  j["certified"] = r.certified;
  j["stuck"] = r.stuck;
  j["stuck_oracle_true"] = r.stuck_oracle_true;
  j["stuck_oracle_false"] = r.stuck_oracle_false;
  j["stuck_oracle_unknown"] = r.stuck_oracle_unknown;
  j["engine_errors"] = r.engine_errors;
  j["move_histogram"] = r.move_histogram;
  Json stuck = Json::array();
  for (const auto& f : r.stuck_instances) {
    stuck.push_back({{"instance", f.instance},
                     {"graph6", f.graph6},
                     {"sequence", f.sequence},
                     {"final_sequence", f.final_sequence},
                     {"oracle", std::string(to_string(f.oracle))},
                     {"replay", f.replay}});
  }
  j["stuck_instances"] = stuck;
  j["errors"] = r.errors;
  return j;
}

Json classification_json(const GraphContext& ctx, const VertexSequence& seq, bool explain) {
  SequenceClass cls = classify(ctx, seq);
  Json j;
  j["n"] = ctx.n();
  j["sequence"] = seq.vertices();
  Json classes = Json::object();
  for (CycleClass c : kAllClasses) classes[std::string(to_string(c))] = cls.has(c);
  j["classes"] = classes;
  Json offending = Json::object();
  for (CycleClass c : kAllClasses) {
    const auto& w = cls.witness[static_cast<int>(c)];
    if (w) offending[std::string(to_string(c))] = pair_json(*w);
  }
  j["offending_pairs"] = offending;
  j["deficit"] = deficit_degree(ctx, seq);
  j["heavy_index"] = heavy_index(ctx, seq);
  j["potential"] = to_json(potential(ctx, seq));
  j["breaks"] = to_json(break_sets(ctx, seq));

  Json pairs = Json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex u = seq[i], v = seq.next(i);
    Json pj;
    pj["pair"] = pair_json({u, v});
    pj["edge"] = ctx.adjacent(u, v);
    pj["degree_sum"] = ctx.degree(u) + ctx.degree(v);
    pj["implicit_degree_sum"] = ctx.implicit_degree(u) + ctx.implicit_degree(v);
    for (CycleClass c : kAllClasses) pj[std::string(to_string(c))] = pair_satisfies(ctx, u, v, c);
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;

  if (explain) {
    Json sheets = Json::array();
    for (Vertex v : seq.vertices()) {
      Json s = to_json(implicit_degree_worksheet(ctx.graph(), v));
      s["heavy"] = ctx.heavy(v);
      s["implicit_heavy"] = ctx.implicit_heavy(v);
      sheets.push_back(s);
    }
    j["worksheets"] = sheets;
  }
  return j;
}

Json certification_json(const GraphContext& ctx, const VertexSequence& input,
                        const CertificationResult& result) {
  Json j;
  j["n"] = ctx.n();
  j["input"] = input.vertices();
  j["input_potential"] = to_json(potential(ctx, input));
  if (result.certified()) {
    j["outcome"] = "certified";
    j["cycle"] = result.cycle().cycle.vertices();
  } else {
    j["outcome"] = "stuck";
    j["report"] = to_json(result.stuck().report);
  }
  j["moves"] = result.trace().size();
  j["trace"] = to_json(result.trace());
  return j;
}

Json envelope(const std::string& kind, const Json& body) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = kind;
  j["generated_at"] = utc_timestamp();
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace idcycle
