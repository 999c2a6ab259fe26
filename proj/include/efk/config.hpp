#pragma once

#include <stdexcept>
#include <string>

#include "efk/integrator.hpp"
#include "efk/operators.hpp"

namespace efk {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string scenario;         // non-empty: registry entry, keys below override
    ProblemSpec problem;
    int n = 32;
    SchemeSpec scheme;
    int panels = 0;               // 0: default rule sized from n
    int gauss_points = 8;
    std::string out_dir = "out";
    int snapshot_every = 0;       // 0: pick from step count at run time
    bool svg = false;
};

// Line-based `key = value` format with [problem] / [discretization] / [output]
// sections and `#` comments. Unknown keys are hard errors, reported with the
// line number. A top-level `scenario = NAME` loads the registry defaults
// first; later keys override them.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace efk
