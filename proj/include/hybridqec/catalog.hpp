#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridqec/params.hpp"

namespace hqec {

/// Built-in code fixture.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::string text;       // code file contents
  HybridParams expected;  // parameters as reported for the code
  std::size_t max_weight; // search depth used by the regression checks
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_example(std::string_view name);

}  // namespace hqec
