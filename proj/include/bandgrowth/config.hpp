#pragma once

#include <istream>

#include "bandgrowth/algebra.hpp"
#include "bandgrowth/oracle.hpp"

namespace bandgrowth {

/// A parsed scenario: field, base algebra, elements a_1..a_m, run options.
/// Schema violations throw ConfigError with the offending line; unknown
/// sections and keys are rejected.
struct ScenarioConfig {
    FieldSpec field;
    AlgebraPtr algebra;
    std::vector<AlgebraElement> elements;
    int n_max = 0; // 0 = not set
    std::uint64_t seed = 42;
    OracleParams oracle; // window/truncation/trials/element shape; seed copied in

    bool has_n_max() const { return n_max > 0; }
};

ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

} // namespace bandgrowth
