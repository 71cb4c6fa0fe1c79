#pragma once

#include "tabled/outcome.hpp"
#include "tabled/schema.hpp"

#include <string_view>
#include <vector>

namespace tabled {

/// Column names are manufacturable: programs build them with append and
/// take them apart with split.
Outcome<ColName> name_append(std::string_view a, std::string_view b);
Outcome<std::vector<std::string>> name_split(const ColName& name, std::string_view separator);
bool name_prefix(const ColName& name, std::string_view prefix);

} // namespace tabled
