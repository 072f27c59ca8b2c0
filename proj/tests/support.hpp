#pragma once

#include <string>

#include "ontogen/knowledge.hpp"
#include "ontogen/tmr.hpp"

namespace testing {

std::string dataPath(const std::string& relative);
std::string readFile(const std::string& path);

/// The bundled KB, loaded once.
const ontogen::KnowledgeBase& bundledKb();
ontogen::Tmr fixture(const std::string& name);

}  // namespace testing
