#pragma once

#include <cstddef>

#include "ontogen/knowledge.hpp"
#include "ontogen/tmr.hpp"

namespace testing {

/// A small random KB (at most 10 concepts, 15 senses) and a TMR over it.
struct RandomWorld {
  ontogen::KnowledgeBase kb;
  ontogen::Tmr tmr;
  std::size_t concepts = 0;
  std::size_t senses = 0;
};

RandomWorld makeWorld(unsigned seed);

}  // namespace testing
