#include "tabled/names.hpp"

namespace tabled {

Outcome<ColName> name_append(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty())
        return BenchError::make(ErrCode::EmptyName, "appended column name is empty");
    return ColName(a) + ColName(b);
}

Outcome<std::vector<std::string>> name_split(const ColName& name, std::string_view separator) {
    if (separator.empty())
        return BenchError::make(ErrCode::EmptySeparator, "split separator is empty");
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t hit = name.find(separator, pos);
        if (hit == std::string::npos) {
            parts.push_back(name.substr(pos));
            return parts;
        }
        parts.push_back(name.substr(pos, hit - pos));
        pos = hit + separator.size();
    }
}

bool name_prefix(const ColName& name, std::string_view prefix) {
    return name.size() >= prefix.size() &&
           std::string_view(name).substr(0, prefix.size()) == prefix;
}

} // namespace tabled
