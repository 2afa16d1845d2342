#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toric/fan_document.hpp"

namespace toric::report {

using Json = nlohmann::json;

/// Deterministic text: keys sorted, two-space indent, trailing newline.
std::string render(const Json& j);

Json fan_json(const Fan& fan);

Json classify(const FanDocument& doc, const std::optional<std::string>& divisor);
Json cones(const FanDocument& doc);
Json chambers(const FanDocument& doc);
Json nef_value(const FanDocument& doc, const std::string& b, const std::string& a);
Json volume(const FanDocument& doc, const std::string& divisor);
Json h0(const FanDocument& doc, const std::string& divisor, long dilate);
Json cox(const FanDocument& doc, const std::optional<std::string>& ample);
Json mmp(const FanDocument& doc, const std::optional<std::string>& divisor, const std::optional<std::string>& scaling);
Json rigidity(const FanDocument& doc);

}  // namespace toric::report
