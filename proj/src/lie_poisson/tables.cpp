#include <map>

#include "kronwebs/io.hpp"
#include "kronwebs/lie_poisson.hpp"

namespace kronwebs {

namespace {

const std::map<std::string, const char*>& raw_tables() {
    static const std::map<std::string, const char*> tables = {
#include "kronwebs_tables.inc"
    };
    return tables;
}

}  // namespace

std::vector<std::string> builtin_table_names() {
    std::vector<std::string> names;
    for (const auto& [name, body] : raw_tables()) names.push_back(name);
    return names;
}

LieTable builtin_table(const std::string& name) {
    auto it = raw_tables().find(name);
    if (it == raw_tables().end()) throw InvalidArgument("unknown built-in Lie algebra '" + name + "'");
    return io::table_from_json(io::parse(it->second));
}

}  // namespace kronwebs
