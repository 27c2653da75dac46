#pragma once

#include <json.hpp>

#include <string>

#include "groupwalk/group.hpp"
#include "groupwalk/matrix.hpp"
#include "groupwalk/simulate.hpp"
#include "groupwalk/walk.hpp"

namespace groupwalk {

// All reports serialize with a fixed field order and 1-based element
// indices so outputs are byte-stable and diffable.

using json = nlohmann::ordered_json;

json validation_report_json(const GroupValidationReport& report);

/// Canonical exact form: array of arrays of "num/den" strings.
json matrix_json(const StochasticMatrix& m);

/// Human-inspection form: rows of decimal approximations, 17 significant
/// digits, comma-separated, LF line endings.
std::string matrix_csv(const StochasticMatrix& m);

json distribution_json(const GroupDistribution& x);

json walk_report_json(const WalkReport& report);

/// "m,tv" lines for plotting.
std::string tv_sequence_csv(const WalkReport& report);

json simulation_json(const SimulationResult& result);

/// 2-space indentation and a trailing LF; the byte-stable dump used for
/// every report this library writes.
std::string dump_json(const json& j);

}  // namespace groupwalk
