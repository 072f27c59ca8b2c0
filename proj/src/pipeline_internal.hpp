#pragma once

#include <optional>
#include <string_view>

#include "ontogen/knowledge.hpp"
#include "ontogen/tmr.hpp"

namespace ontogen::detail {

bool isMetaProperty(std::string_view property);
bool conceptIsA(const KnowledgeBase& kb, std::string_view cname, std::string_view ancestor);
bool isEventFrame(const KnowledgeBase& kb, const TmrFrame& frame);
bool isModified(const TmrFrame& frame);
bool hasCaseRoles(const TmrFrame& frame);
std::optional<PropertyValue> propertyValue(const Filler& f);

}  // namespace ontogen::detail
