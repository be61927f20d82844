#pragma once

#include <string>

#include "pce/data.hpp"
#include "pce/pipeline.hpp"

namespace pce {

// Plain-text `key = value` file, `#` comments. Unknown keys are rejected
// with the offending line number; missing keys take the documented
// defaults.
struct RunConfig {
    SyntheticSpec data;
    TrainConfig train;
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

std::string variant_name(ContrastiveVariant v);
ContrastiveVariant variant_from_name(const std::string& name);

}  // namespace pce
