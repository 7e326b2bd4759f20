#pragma once

#include <string>

#include "json.hpp"

#include "idcycle/implicit_degree.hpp"
#include "idcycle/oracle.hpp"
#include "idcycle/sequence.hpp"
#include "idcycle/transform.hpp"
#include "idcycle/workbench.hpp"

namespace idcycle {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const ImplicitDegreeWorksheet& sheet);
Json to_json(const Potential& p);
Json to_json(const Move& move);
Json to_json(const std::vector<Move>& trace);
Json to_json(const BreakSets& sets);
Json to_json(const StuckReport& report);
Json to_json(const VerifyReport& report);
Json to_json(const HuntReport& report);

// Class flags, offending pairs and one verdict per consecutive pair. With
// explain, adds worksheets for every vertex on the sequence.
Json classification_json(const GraphContext& ctx, const VertexSequence& seq, bool explain);
Json certification_json(const GraphContext& ctx, const VertexSequence& input,
                        const CertificationResult& result);

// Top-level envelope: {"schema_version", "kind", "generated_at", ...body}.
// generated_at is the only field that differs between reruns.
Json envelope(const std::string& kind, const Json& body);

}  // namespace idcycle
