#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hajos/constructions.hpp"
#include "hajos/detectors.hpp"
#include "hajos/trace.hpp"
#include "hajos/verify.hpp"

namespace hajos {

using Json = nlohmann::ordered_json;

/// {"kind":"red_hajos"|"blue_star"|"blue_fan","vertices":{...}} with role names
/// triangle/apexes, center/leaves, center/blades.
Json witness_to_json(const Witness& w);
/// Inverse of witness_to_json; throws InvalidParameters on an unknown kind or missing field.
Witness witness_from_json(const Json& j);

/// {"event","check","note","payload"}; edges are [u,v] pairs.
Json event_to_json(const TraceEvent& e);
TraceEvent event_from_json(const Json& j);

/// {"case","branch","n","witness"}.
Json terminal_to_json(const ProofTrace& trace, const Witness& w);

/// One JSON document per line: every event, then the terminal record.
void write_trace_lines(std::ostream& out, const ProofTrace& trace, const Witness& w);

/// Rebuilds events, case, branch and n from the lines written by write_trace_lines.
/// The terminal line may be absent (a trace cut short by a gap).
ProofTrace read_trace_lines(const std::vector<std::string>& lines);

/// wall_ms and max_trial_ms are null unless `timing` is set, keeping output reproducible.
Json report_to_json(const VerificationReport& r, bool timing);

Json chromatic_to_json(const ChromaticInfo& info);

}  // namespace hajos
