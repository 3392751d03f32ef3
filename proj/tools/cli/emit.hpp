#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace dsturm::cli {

using Json = nlohmann::ordered_json;

/// Serializes with two-space indentation and every floating-point value
/// printed as %.17g. Non-finite numbers become null.
std::string to_json_text(const Json& j);

/// Header row followed by one line per record; values printed as %.17g.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

}  // namespace dsturm::cli
