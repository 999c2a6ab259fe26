#pragma once

#include <string>
#include <vector>

#include "efk/config.hpp"
#include "efk/diagnostics.hpp"

namespace efk {

// Registered configuration for a named scenario. Unknown name throws
// invalid_argument listing the registry.
RunConfig scenario_config(const std::string& name);

std::vector<std::string> scenario_names();

struct ScenarioOutcome {
    int exit_code = 0;               // 0 ok, 2 blow-up, 3 audit failure
    std::string message;
    std::vector<AuditCheck> checks;  // everything written to audit.csv
    double tau_used = 0.0;
    int halvings = 0;
};

// Executes cfg (plain run or composite scenario) and writes snapshots /
// timeseries / audit CSVs (and optional SVG) under cfg.out_dir. Plain f = 0
// runs retry with halved tau (up to 8 times) on blow-up or a failed energy
// audit; the final tau is recorded in the outcome.
ScenarioOutcome run_config(const RunConfig& cfg);

}  // namespace efk
